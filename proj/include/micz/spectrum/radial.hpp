#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "micz/exact/rational.hpp"

namespace micz::spectrum {

using exact::Rational;

/// Generalized Laguerre polynomial L^alpha_m, coefficients by ascending power.
struct LaguerrePoly {
  int degree = 0;
  Rational alpha;
  std::vector<Rational> coeffs;

  Rational operator()(const Rational& x) const;
};

/// Built from the three-term recurrence
/// (m+1) L_{m+1} = (2m + 1 + alpha - x) L_m - (m + alpha) L_{m-1}.
LaguerrePoly laguerre(int m, const Rational& alpha);

/// Finite sum of c r^p e^{q r} with rational p, q and c.
class RadialExpr {
 public:
  using Key = std::pair<Rational, Rational>;  // (p, q)

  RadialExpr() = default;
  static RadialExpr monomial(const Rational& c, const Rational& p, const Rational& q = Rational(0));
  /// P(lambda r) r^p e^{q r}.
  static RadialExpr polynomial(const std::vector<Rational>& coeffs, const Rational& lambda, const Rational& p,
                               const Rational& q);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::string str() const;

  RadialExpr derivative() const;
  /// Multiplies by r^s.
  RadialExpr shift(const Rational& s) const;
  /// f(lambda r).
  RadialExpr scaled(const Rational& lambda) const;

  RadialExpr& operator+=(const RadialExpr& o);
  RadialExpr& operator-=(const RadialExpr& o);
  RadialExpr& operator*=(const Rational& s);
  friend RadialExpr operator+(RadialExpr a, const RadialExpr& b) { return a += b; }
  friend RadialExpr operator-(RadialExpr a, const RadialExpr& b) { return a -= b; }
  friend RadialExpr operator*(RadialExpr a, const Rational& s) { return a *= s; }
  friend RadialExpr operator*(const Rational& s, RadialExpr a) { return a *= s; }
  friend RadialExpr operator*(const RadialExpr& a, const RadialExpr& b);
  friend bool operator==(const RadialExpr&, const RadialExpr&) = default;

  /// Exact integral over (0, inf): every term needs an integer p >= 0 and q < 0.
  /// Throws DivergentError otherwise.
  Rational integrate() const;

 private:
  std::map<Key, Rational> terms_;
};

/// E_I = -1 / (2 (I + n + |mu|)^2).
Rational energy(int I, int n, const Rational& mu);
/// I_mu = I + n + |mu| - 1; the same shift gives l_mu from l.
Rational level_mu(int I, int n, const Rational& mu);

/// Bound state R_{k l_mu} = c r^{l+|mu|} L^{2 l_mu + 1}_{k-1}(2r / N) e^{-r/N},
/// N = k + l_mu. The profile omits c; c^2 is exact and positive.
struct RadialSolution {
  int k = 1;
  int l = 0;
  int n = 1;
  Rational mu;
  Rational l_mu;
  Rational N;
  RadialExpr profile;
  Rational c_squared;

  Rational energy() const;
};

RadialSolution radial_solution(int k, int l, int n, const Rational& mu);

/// The radial operator
/// -1/(2 r^{2n}) d/dr r^{2n} d/dr + (l_mu(l_mu+1) - n(n-1)) / (2 r^2) - 1/r.
RadialExpr radial_operator(const RadialExpr& f, int n, const Rational& l_mu);

/// Radial Schroedinger operator minus E_{k-1+l}, applied to the unnormalized
/// profile. Zero for a correct solution.
RadialExpr radial_ode_residual(int k, int l, int n, const Rational& mu);
/// As radial_ode_residual but throws NonZeroResidual with the residual text.
void require_radial_ode(int k, int l, int n, const Rational& mu);

/// c(k, l)^2 such that the integral of |R|^2 r^{2n} over (0, inf) is 1.
Rational normalization(int k, int l, int n, const Rational& mu);

/// Twisted radial function up to its constant: r^{l+|mu|-1/2} L^{2 l_mu + 1}_{k-1}(2r) e^{-r}.
/// The twist N^{n+1} r^{-1/2} R(N r) of the normalized R equals f times this
/// profile with f^2 = c^2 N^{2(n+1+l+|mu|)}, returned through `factor_squared`.
RadialExpr twisted_profile(int k, int l, int n, const Rational& mu, Rational* factor_squared = nullptr);

/// Integral of R~_k R~_k' r^{2n} over (0, inf) for the twisted normalized radial functions.
Rational twisted_radial_gram(int k, int k2, int l, int n, const Rational& mu);

struct SpectrumRow {
  int I = 0;
  Rational energy;
  Rational dim;
};

/// Markdown and JSON renderings of (I, E_I, dim H_I) rows.
std::string spectrum_markdown(int n, const Rational& mu, const std::vector<SpectrumRow>& rows);
std::string spectrum_json(int n, const Rational& mu, const std::vector<SpectrumRow>& rows);

}  // namespace micz::spectrum
