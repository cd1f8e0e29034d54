#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "micz/sections/section.hpp"

namespace micz::ladder {

using exact::GaussianRational;
using exact::Rational;
using sections::SectionExpr;

/// Exact real number of the form sum c_k pi^{h/2} sqrt(s) with squarefree s,
/// enough for Gamma and Beta values at half-integers.
class ZonalValue {
 public:
  struct Key {
    int pi_halves = 0;
    long root = 1;  // squarefree
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  ZonalValue() = default;
  static ZonalValue rational(const GaussianRational& c);
  /// c pi^{h/2} sqrt(x) for a positive rational x.
  static ZonalValue surd(const GaussianRational& c, int pi_halves, const Rational& x);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, GaussianRational>& terms() const { return terms_; }
  std::string str() const;

  ZonalValue& operator+=(const ZonalValue& o);
  ZonalValue& operator-=(const ZonalValue& o);
  friend ZonalValue operator+(ZonalValue a, const ZonalValue& b) { return a += b; }
  friend ZonalValue operator-(ZonalValue a, const ZonalValue& b) { return a -= b; }
  friend ZonalValue operator*(const ZonalValue& a, const ZonalValue& b);
  friend bool operator==(const ZonalValue&, const ZonalValue&) = default;

  /// a / b when it is an element of Q(i); nullopt otherwise. Throws on b = 0.
  static std::optional<GaussianRational> ratio(const ZonalValue& a, const ZonalValue& b);

 private:
  std::map<Key, GaussianRational> terms_;
};

/// Function of r and x_D only: sum c r^p u^a w^b e^{q r} with u = r + x_D, w = r - x_D.
class ZonalProfile {
 public:
  using Key = std::tuple<Rational, Rational, Rational, Rational>;  // (p, a, b, q)

  ZonalProfile() = default;
  static ZonalProfile term(const GaussianRational& c, const Rational& p, const Rational& a, const Rational& b,
                           const Rational& q);

  const std::map<Key, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

  ZonalProfile& operator+=(const ZonalProfile& o);
  ZonalProfile& operator-=(const ZonalProfile& o);
  ZonalProfile& operator*=(const GaussianRational& s);
  friend ZonalProfile operator+(ZonalProfile a, const ZonalProfile& b) { return a += b; }
  friend ZonalProfile operator-(ZonalProfile a, const ZonalProfile& b) { return a -= b; }
  friend ZonalProfile operator*(ZonalProfile a, const GaussianRational& s) { return a *= s; }
  /// Multiplication by x_D = (u - w) / 2.
  ZonalProfile times_xd() const;

 private:
  std::map<Key, GaussianRational> terms_;
};

/// Integral over R^D, D = 2n+1, as radial Gamma x angular Beta x vol(S^{2n-1}).
/// Throws DivergentError for a non-integrable term.
ZonalValue zonal_integral(const ZonalProfile& zp, int n);

/// sum_k g_kk conj(psi1_k) psi2_k averaged over the spheres |x'| = const,
/// x' = (x_1, ..., x_{D-1}), at fixed r and x_D. The average has the same
/// integral over R^D and depends on r and x_D only.
ZonalProfile averaged_inner(const SectionExpr& psi1, const SectionExpr& psi2);

/// <psi1, psi2> as an exact value.
ZonalValue inner_product(const SectionExpr& psi1, const SectionExpr& psi2);

}  // namespace micz::ladder
