#include "micz/ladder/zonal.hpp"

#include <sstream>
#include <vector>

#include "micz/errors.hpp"
#include "micz/exact/gamma.hpp"

namespace micz::ladder {

namespace {

struct PiPower {
  Rational c;
  int pi_halves = 0;
};

// Gamma(x) for a positive half-integer x.
PiPower gamma_value(const Rational& x) {
  if (x.sign() <= 0 || !x.is_half_integer()) throw DivergentError("Gamma(" + x.str() + ") is not available");
  if (x.is_integer()) return {exact::factorial(x.to_long() - 1), 0};
  const Rational half(1, 2);
  return {exact::gamma_ratio(half, (x - half).to_long()), 1};
}

// Splits m = f^2 s with s squarefree.
void squarefree(mpz_class m, mpz_class& f, mpz_class& s) {
  f = 1;
  s = 1;
  for (mpz_class p = 2; p * p <= m; ++p) {
    while (m % (p * p) == 0) {
      m /= p * p;
      f *= p;
    }
    if (m % p == 0) {
      m /= p;
      s *= p;
    }
  }
  s *= m;
}

}  // namespace

ZonalValue ZonalValue::rational(const GaussianRational& c) { return surd(c, 0, Rational(1)); }

ZonalValue ZonalValue::surd(const GaussianRational& c, int pi_halves, const Rational& x) {
  if (x.sign() <= 0) throw std::invalid_argument("ZonalValue::surd: non-positive radicand");
  ZonalValue v;
  if (c.is_zero()) return v;
  // sqrt(p/q) = sqrt(p q) / q
  const mpz_class q = x.denominator();
  mpz_class f, s;
  squarefree(x.numerator() * q, f, s);
  if (!s.fits_slong_p()) throw std::overflow_error("ZonalValue::surd: radicand too large");
  GaussianRational cc = c;
  cc.scale(Rational(f, q));
  v.terms_.emplace(Key{pi_halves, s.get_si()}, cc);
  return v;
}

std::string ZonalValue::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << '(' << c << ')';
    if (k.pi_halves) os << "*pi^(" << Rational(k.pi_halves, 2) << ')';
    if (k.root != 1) os << "*sqrt(" << k.root << ')';
    first = false;
  }
  return os.str();
}

ZonalValue& ZonalValue::operator+=(const ZonalValue& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ZonalValue& ZonalValue::operator-=(const ZonalValue& o) {
  ZonalValue neg = o;
  for (auto& [k, c] : neg.terms_) c = -c;
  return *this += neg;
}

ZonalValue operator*(const ZonalValue& a, const ZonalValue& b) {
  ZonalValue out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      const mpz_class g = gcd(mpz_class(ka.root), mpz_class(kb.root));
      GaussianRational c = ca * cb;
      c.scale(Rational(g, mpz_class(1)));
      const mpz_class s = (mpz_class(ka.root) / g) * (mpz_class(kb.root) / g);
      ZonalValue t;
      t.terms_.emplace(ZonalValue::Key{ka.pi_halves + kb.pi_halves, s.get_si()}, c);
      out += t;
    }
  }
  return out;
}

std::optional<GaussianRational> ZonalValue::ratio(const ZonalValue& a, const ZonalValue& b) {
  if (b.is_zero()) throw std::domain_error("ZonalValue::ratio: zero denominator");
  const auto& [k0, c0] = *b.terms_.begin();
  auto it = a.terms_.find(k0);
  const GaussianRational lambda = it == a.terms_.end() ? GaussianRational() : it->second / c0;
  ZonalValue scaled = b * rational(lambda);
  if (!(scaled == a)) return std::nullopt;
  return lambda;
}

ZonalProfile ZonalProfile::term(const GaussianRational& c, const Rational& p, const Rational& a, const Rational& b,
                                const Rational& q) {
  ZonalProfile z;
  if (!c.is_zero()) z.terms_.emplace(Key{p, a, b, q}, c);
  return z;
}

std::string ZonalProfile::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const auto& [p, a, b, q] = k;
    os << (first ? "" : " + ") << '(' << c << ")*r^(" << p << ")*u^(" << a << ")*w^(" << b << ")*e^(" << q << "r)";
    first = false;
  }
  return os.str();
}

ZonalProfile& ZonalProfile::operator+=(const ZonalProfile& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

ZonalProfile& ZonalProfile::operator-=(const ZonalProfile& o) { return *this += o * GaussianRational(-1); }

ZonalProfile& ZonalProfile::operator*=(const GaussianRational& s) {
  if (s.is_zero()) terms_.clear();
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

ZonalProfile ZonalProfile::times_xd() const {
  ZonalProfile out;
  const GaussianRational half(Rational(1, 2));
  for (const auto& [k, c] : terms_) {
    const auto& [p, a, b, q] = k;
    out += term(c * half, p, a + 1, b, q);
    out += term(-(c * half), p, a, b + 1, q);
  }
  return out;
}

ZonalValue zonal_integral(const ZonalProfile& zp, int n) {
  ZonalValue total;
  for (const auto& [k, c] : zp.terms()) {
    const auto& [p, a, b, q] = k;
    const Rational P = p + a + b + Rational(2 * n);
    const Rational alpha = a + Rational(n), beta = b + Rational(n);
    if (q.sign() >= 0 || P <= Rational(-1) || alpha.sign() <= 0 || beta.sign() <= 0)
      throw DivergentError("zonal_integral: divergent term r^" + p.str() + " u^" + a.str() + " w^" + b.str() +
                           " e^(" + q.str() + " r)");
    // Radial: Gamma(P+1) / (-q)^{P+1}.
    const PiPower gr = gamma_value(P + 1);
    const Rational e = P + 1;
    const Rational fl = Rational(e.floor(), mpz_class(1));
    ZonalValue radial = ZonalValue::surd(GaussianRational(gr.c / (-q).pow(fl.to_long())), gr.pi_halves,
                                         e == fl ? Rational(1) : (-q).reciprocal());
    // Angular: 2^{alpha+beta-1} Gamma(alpha) Gamma(beta) / Gamma(alpha+beta), then vol(S^{2n-1}) = 2 pi^n / (n-1)!.
    const PiPower ga = gamma_value(alpha), gb = gamma_value(beta), gab = gamma_value(alpha + beta);
    const Rational t = alpha + beta - 1;
    const Rational tf = Rational(t.floor(), mpz_class(1));
    const Rational coeff = Rational(2).pow(tf.to_long()) * ga.c * gb.c / gab.c * 2 / exact::factorial(n - 1);
    ZonalValue angular = ZonalValue::surd(GaussianRational(coeff), ga.pi_halves + gb.pi_halves - gab.pi_halves + 2 * n,
                                          t == tf ? Rational(1) : Rational(2));
    total += radial * angular * ZonalValue::rational(c);
  }
  return total;
}

namespace {

using Exps = std::vector<int>;

// Mean of x^e over the unit sphere S^{m-1}: zero unless every exponent is even,
// else prod (e_i - 1)!! / (2^k (m/2)(m/2 + 1)...(m/2 + k - 1)) with 2k = |e|.
Rational sphere_mean(const Exps& e) {
  const Rational half_m(static_cast<long>(e.size()), 2);
  Rational num(1);
  int k = 0;
  for (int v : e) {
    if (v % 2 != 0) return Rational(0);
    for (int j = v - 1; j > 1; j -= 2) num *= Rational(j);
    k += v / 2;
  }
  return num / (Rational(2).pow(k) * exact::gamma_ratio(half_m, k));
}

}  // namespace

ZonalProfile averaged_inner(const SectionExpr& psi1, const SectionExpr& psi2) {
  const auto& ctx = psi1.ctx();
  const int D = ctx.D;
  const auto& gram = ctx.rep->gram();
  // (p, a, b, q, x_D exponent, degree in x_1..x_{D-1}) -> sphere mean
  using Outer = std::tuple<Rational, Rational, Rational, Rational, int, int>;
  std::map<Outer, GaussianRational> acc;
  const auto t1 = psi1.terms();
  const auto t2 = psi2.terms();
  Exps e(static_cast<std::size_t>(D - 1));
  for (const auto& a : t1) {
    const GaussianRational ca = a.coeff.conj() * gram(a.spin, a.spin);
    for (const auto& b : t2) {
      if (b.spin != a.spin) continue;
      int deg = 0;
      for (int i = 0; i + 1 < D; ++i) {
        const auto s = static_cast<std::size_t>(i);
        e[s] = a.xexp[s] + b.xexp[s];
        deg += e[s];
      }
      const Rational mean = sphere_mean(e);
      if (mean.is_zero()) continue;
      const int xd = a.xexp[static_cast<std::size_t>(D - 1)] + b.xexp[static_cast<std::size_t>(D - 1)];
      Outer key{a.rexp + b.rexp, a.uexp + b.uexp, a.wexp + b.wexp, a.q + b.q, xd, deg};
      acc[key] += ca * b.coeff * GaussianRational(mean);
    }
  }
  ZonalProfile out;
  for (const auto& [key, c] : acc) {
    if (c.is_zero()) continue;
    const auto& [p, a, b, q, xd, deg] = key;
    // c |x'|^deg x_D^xd r^p u^a w^b e^{qr}, |x'|^2 = uw, x_D = (u - w)/2.
    ZonalProfile z = ZonalProfile::term(c, p, a + Rational(deg, 2), b + Rational(deg, 2), q);
    for (int j = 0; j < xd; ++j) z = z.times_xd();
    out += z;
  }
  return out;
}

ZonalValue inner_product(const SectionExpr& psi1, const SectionExpr& psi2) {
  return zonal_integral(averaged_inner(psi1, psi2), psi1.ctx().n);
}

}  // namespace micz::ladder
