#include "micz/exact/rational.hpp"

#include <limits>
#include <ostream>

namespace micz::exact {

namespace {

using u128 = unsigned __int128;

u128 uabs(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t uabs64(std::int64_t v) { return v < 0 ? static_cast<std::uint64_t>(-v) : static_cast<std::uint64_t>(v); }

mpz_class to_mpz(__int128 v) {
  const u128 u = uabs(v);
  mpz_class z(static_cast<unsigned long>(u >> 64));
  z <<= 64;
  z += static_cast<unsigned long>(static_cast<std::uint64_t>(u));
  if (v < 0) z = -z;
  return z;
}

}  // namespace

void Rational::set_from(__int128 n, __int128 d) {
  if (n > -kLimit && n < kLimit && d < kLimit) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
    return;
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(to_mpz(n), to_mpz(d));
}

void Rational::set_from_reduce(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    set_from(0, 1);
    return;
  }
  const u128 g = gcd128(uabs(n), static_cast<u128>(d));
  set_from(n / static_cast<__int128>(g), d / static_cast<__int128>(g));
}

void Rational::set_big(mpq_class v) {
  if (v.get_num().fits_slong_p() && v.get_den().fits_slong_p()) {
    const long n = v.get_num().get_si();
    const long d = v.get_den().get_si();
    if (n > -kLimit && n < kLimit && d < kLimit) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(v));
}

mpq_class Rational::as_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational::Rational(const mpq_class& v) {
  mpq_class c(v);
  c.canonicalize();
  set_big(std::move(c));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class c(num, den);
  c.canonicalize();
  set_big(std::move(c));
}

mpq_class Rational::value() const { return as_mpq(); }
mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (o.num_ == 0) return *this;
    if (den_ == 1 && o.den_ == 1) {
      set_from(static_cast<__int128>(num_) + o.num_, 1);
      return *this;
    }
    const std::uint64_t g = gcd64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(o.den_));
    if (g == 1) {
      set_from(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
               static_cast<__int128>(den_) * o.den_);
      return *this;
    }
    const std::int64_t gs = static_cast<std::int64_t>(g);
    const __int128 t =
        static_cast<__int128>(num_) * (o.den_ / gs) + static_cast<__int128>(o.num_) * (den_ / gs);
    if (t == 0) {
      set_from(0, 1);
      return *this;
    }
    const std::int64_t g2 = static_cast<std::int64_t>(gcd64(static_cast<std::uint64_t>(uabs(t) % g), g));
    set_from(t / g2, static_cast<__int128>(den_ / gs) * (o.den_ / g2));
    return *this;
  }
  set_big(as_mpq() + o.as_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!o.big_) {
    Rational neg;
    neg.num_ = -o.num_;
    neg.den_ = o.den_;
    return *this += neg;
  }
  set_big(as_mpq() - o.as_mpq());
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    if (num_ == 0 || o.num_ == 0) {
      set_from(0, 1);
      return *this;
    }
    const auto g1 = static_cast<std::int64_t>(gcd64(uabs64(num_), static_cast<std::uint64_t>(o.den_)));
    const auto g2 = static_cast<std::int64_t>(gcd64(uabs64(o.num_), static_cast<std::uint64_t>(den_)));
    set_from(static_cast<__int128>(num_ / g1) * (o.num_ / g2), static_cast<__int128>(den_ / g2) * (o.den_ / g1));
    return *this;
  }
  set_big(as_mpq() * o.as_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  return *this *= o.reciprocal();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.as_mpq(), b.as_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}


Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("Rational::parse: bad integer '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return mpz_class(s, 10);
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text), mpz_class(1));
  const mpz_class den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  return Rational(parse_int(text.substr(0, slash)), den);
}

bool Rational::is_half_integer() const {
  if (!big_) return den_ == 1 || den_ == 2;
  const mpz_class& d = big_->get_den();
  return d == 1 || d == 2;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  if (big_) return Rational(mpq_class(1) / *big_);
  Rational r;
  r.set_from(num_ < 0 ? -static_cast<__int128>(den_) : den_, static_cast<__int128>(uabs64(num_)));
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  Rational result(1);
  Rational base(*this);
  for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1UL) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

mpz_class Rational::floor() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return mpz_class(static_cast<long>(q));
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return q;
}

long Rational::to_long() const {
  if (!is_integer() || big_) throw std::domain_error("Rational::to_long: " + str() + " is not a machine integer");
  return num_;
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

std::size_t Rational::hash() const {
  if (!big_) return static_cast<std::size_t>(num_) * 1000003ULL ^ static_cast<std::size_t>(den_);
  const std::size_t h1 = mpz_get_ui(big_->get_num_mpz_t()) ^ (sgn(*big_) < 0 ? 0x9e3779b97f4a7c15ULL : 0);
  const std::size_t h2 = mpz_get_ui(big_->get_den_mpz_t());
  return h1 * 1000003ULL ^ h2;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace micz::exact

