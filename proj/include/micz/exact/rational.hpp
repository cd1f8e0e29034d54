#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace micz::exact {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Values whose numerator and denominator fit in 62 bits
/// live inline; larger ones spill to a GMP rational. The representation of a
/// given value is unique, so equality and hashing work on either form.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      set_from(static_cast<__int128>(value), 1);
    } else {
      set_from(static_cast<__int128>(static_cast<unsigned long long>(value)), 1);
    }
  }

  template <std::integral I, std::integral J>
  Rational(I num, J den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    set_from_reduce(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  explicit Rational(const mpq_class& v);
  Rational(const mpz_class& num, const mpz_class& den);

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Parses "p", "-p", "p/q" (no whitespace, no floating point).
  static Rational parse(std::string_view text);

  mpq_class value() const;
  mpz_class numerator() const;
  mpz_class denominator() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_integer() const { return !big_ ? den_ == 1 : big_->get_den() == 1; }
  /// True iff twice the value is an integer.
  bool is_half_integer() const;
  int sign() const {
    if (big_) return sgn(*big_);
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }
  Rational reciprocal() const;
  Rational pow(long exponent) const;

  /// Largest integer not exceeding the value.
  mpz_class floor() const;
  /// Value as a long; throws if not an integer or out of range.
  long to_long() const;

  std::string str() const;
  std::size_t hash() const;

  Rational operator-() const {
    Rational r(*this);
    if (r.big_)
      *r.big_ = -*r.big_;
    else
      r.num_ = -r.num_;
    return r;
  }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static constexpr std::int64_t kLimit = std::int64_t{1} << 62;

  // Stores n/d, already in lowest terms with d > 0.
  void set_from(__int128 n, __int128 d);
  // Reduces n/d first; d != 0.
  void set_from_reduce(__int128 n, __int128 d);
  void set_big(mpq_class v);
  mpq_class as_mpq() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace micz::exact

template <>
struct std::hash<micz::exact::Rational> {
  std::size_t operator()(const micz::exact::Rational& r) const { return r.hash(); }
};
