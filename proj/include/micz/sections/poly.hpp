#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "micz/exact/gaussian.hpp"

namespace micz::sections {

using exact::GaussianRational;
using exact::Rational;

/// Packed monomial x_1^m1 ... x_5^m5 r^e with e in {0, 1}: ten bits per
/// exponent, the r flag at bit 50.
using Mono = std::uint64_t;

inline constexpr int kMaxDim = 5;
inline constexpr int kFieldBits = 10;
inline constexpr Mono kFieldMask = (Mono{1} << kFieldBits) - 1;
inline constexpr Mono kRBit = Mono{1} << 50;

inline constexpr Mono mono_x(int axis) { return Mono{1} << (kFieldBits * axis); }
inline constexpr int mono_exp(Mono m, int axis) { return static_cast<int>((m >> (kFieldBits * axis)) & kFieldMask); }
inline constexpr bool mono_has_r(Mono m) { return (m & kRBit) != 0; }
/// Total degree counting r with weight one.
int mono_degree(Mono m, int dim);
Mono make_mono(const std::vector<int>& xexp, bool r);

/// Element of Q(i)[x_1..x_D, r] / (r^2 - sum x^2), stored as a sorted list of
/// monomials that are at most linear in r.
class Poly {
 public:
  using Term = std::pair<Mono, GaussianRational>;

  Poly() = default;
  explicit Poly(int dim) : dim_(dim) {}
  static Poly constant(int dim, const GaussianRational& c);
  static Poly monomial(int dim, Mono m, const GaussianRational& c);
  /// x_1^2 + ... + x_k^2.
  static Poly sum_squares(int dim, int k);
  /// Sorts and merges raw terms; drops zero coefficients.
  static Poly from_terms(int dim, std::vector<Term> raw);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussianRational& s);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const GaussianRational& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Multiply by c x^m (m without r flag) or, with the r flag, by c x^m r.
  Poly times(Mono m, const GaussianRational& c = GaussianRational(1)) const;
  Poly times_r() const { return times(kRBit); }

  /// Component P0 (rpart=false) or P1 (rpart=true) of P = P0 + r P1, as a polynomial in x.
  Poly part(bool rpart) const;
  static Poly combine(const Poly& p0, const Poly& p1);

  /// Partial derivative in x_axis with r held fixed (axis is 0-based).
  Poly dx(int axis) const;

  /// Exact quotient by x_1^2 + ... + x_k^2 for polynomials free of r; nullopt if not divisible.
  std::optional<Poly> divide_sum_squares(int k) const;

  Poly conj() const;

 private:
  int dim_ = 0;
  std::vector<Term> terms_;
};

}  // namespace micz::sections
