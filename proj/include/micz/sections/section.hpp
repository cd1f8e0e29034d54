#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "micz/clifford/clifford.hpp"
#include "micz/sections/poly.hpp"

namespace micz::sections {

using exact::Matrix;

/// num / (u^a w^b r^c) with u = r + x_D, w = r - x_D. Reduced when none of the
/// denominator factors with positive exponent divides num.
struct Fraction {
  Poly num;
  int a = 0;
  int b = 0;
  int c = 0;
};

/// Cancels common factors of u, w, r between numerator and denominator.
void reduce(Fraction& f, int dim);
Fraction multiply(const Fraction& f, const Fraction& g, int dim);
/// Brings both to the common denominator and adds.
Fraction add(const Fraction& f, const Fraction& g, int dim);

/// (r + x_D)^k, (r - x_D)^k and r^k as elements of the quotient ring.
const Poly& u_power(int dim, int k);
const Poly& w_power(int dim, int k);
const Poly& r_power(int dim, int k);

/// Square matrix over the spinor space whose entries are reduced Fractions.
class MatrixFunction {
 public:
  MatrixFunction() = default;
  MatrixFunction(std::size_t dim, int space_dim) : dim_(dim), space_dim_(space_dim), entries_(dim * dim) {
    for (auto& e : entries_) e.num = Poly(space_dim);
  }

  std::size_t dim() const { return dim_; }
  int space_dim() const { return space_dim_; }
  Fraction& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Fraction& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  bool is_zero() const;

  /// f(x) M for a scalar fraction f and a constant matrix M.
  static MatrixFunction scalar_times(const Fraction& f, const Matrix& m, int space_dim);
  MatrixFunction& operator+=(const MatrixFunction& o);
  MatrixFunction& operator*=(const GaussianRational& s);
  friend MatrixFunction operator+(MatrixFunction a, const MatrixFunction& b) { return a += b; }
  friend MatrixFunction operator*(MatrixFunction a, const GaussianRational& s) { return a *= s; }

 private:
  std::size_t dim_ = 0;
  int space_dim_ = 0;
  std::vector<Fraction> entries_;
};

/// Fixed data of one (n, mu) problem: D = 2n+1, the so(2n) module,
/// c = mu^2 + (n-1)|mu|, and the gauge potential and curvature tables.
struct Context {
  int n = 0;
  Rational mu;
  int D = 0;
  Rational c;
  std::shared_ptr<const clifford::RepAction> rep;
  /// gauge[b-1] = A_b.
  std::vector<MatrixFunction> gauge;
  /// field[(a-1) * D + (b-1)] = F_ab.
  std::vector<MatrixFunction> field;

  std::size_t spin_dim() const { return rep->dim(); }
};

std::shared_ptr<const Context> make_context(int n, const Rational& mu);

/// Common factor e^{q r} r^{hr/2} u^{hu/2} w^{hw/2} shared by one group, and
/// the spinor basis index of the group.
struct GroupKey {
  Rational q;
  std::size_t spin = 0;
  int hr = 0;
  int hu = 0;
  int hw = 0;

  friend bool operator==(const GroupKey&, const GroupKey&) = default;
  friend std::strong_ordering operator<=>(const GroupKey& x, const GroupKey& y) {
    if (auto o = x.q <=> y.q; o != 0) return o;
    if (auto o = x.spin <=> y.spin; o != 0) return o;
    if (auto o = x.hr <=> y.hr; o != 0) return o;
    if (auto o = x.hu <=> y.hu; o != 0) return o;
    return x.hw <=> y.hw;
  }
};

/// coeff x^xexp r^rexp u^uexp w^wexp e^{q r} e_spin.
struct SectionTerm {
  GaussianRational coeff;
  std::vector<int> xexp;
  Rational rexp;
  Rational uexp;
  Rational wexp;
  Rational q;
  std::size_t spin = 0;
};

/// Finite sum of SectionTerms, kept as one reduced Fraction per GroupKey. Two
/// expressions denote the same function iff their group maps are identical.
class SectionExpr {
 public:
  SectionExpr() = default;
  explicit SectionExpr(std::shared_ptr<const Context> ctx) : ctx_(std::move(ctx)) {}

  /// coeff x^xexp r^s u^t w^tw e^{q r} (x) v.
  static SectionExpr term(std::shared_ptr<const Context> ctx, const GaussianRational& coeff,
                          const std::vector<int>& xexp, const Rational& s, const Rational& t,
                          const Rational& tw, const Rational& q, const std::vector<GaussianRational>& v);
  static SectionExpr from_terms(std::shared_ptr<const Context> ctx, const std::vector<SectionTerm>& terms);
  /// The constant section v.
  static SectionExpr constant(std::shared_ptr<const Context> ctx, const std::vector<GaussianRational>& v);
  /// The constant section e_k.
  static SectionExpr basis(std::shared_ptr<const Context> ctx, std::size_t k);

  const std::shared_ptr<const Context>& context() const { return ctx_; }
  const Context& ctx() const { return *ctx_; }
  int dim() const { return ctx_->D; }
  const std::map<GroupKey, Fraction>& groups() const { return groups_; }

  bool is_zero() const { return groups_.empty(); }
  /// Canonical term list, ordered by group key and monomial.
  std::vector<SectionTerm> terms() const;
  std::size_t term_count() const;
  /// True iff every u and w exponent is an integer.
  bool integral_uw() const;
  /// Canonical text: one line per term.
  std::string str() const;

  SectionExpr& operator+=(const SectionExpr& o);
  SectionExpr& operator-=(const SectionExpr& o);
  SectionExpr& operator*=(const GaussianRational& s);
  SectionExpr operator-() const;
  friend SectionExpr operator+(SectionExpr a, const SectionExpr& b) { return a += b; }
  friend SectionExpr operator-(SectionExpr a, const SectionExpr& b) { return a -= b; }
  friend SectionExpr operator*(SectionExpr a, const GaussianRational& s) { return a *= s; }
  friend SectionExpr operator*(const GaussianRational& s, SectionExpr a) { return a *= s; }
  friend bool operator==(const SectionExpr& a, const SectionExpr& b);

  /// Complex conjugate of every coefficient (the spinor basis is kept).
  SectionExpr conj() const;

  /// Direct construction from already reduced groups.
  static SectionExpr from_groups(std::shared_ptr<const Context> ctx, std::map<GroupKey, Fraction> groups);

 private:
  std::shared_ptr<const Context> ctx_;
  std::map<GroupKey, Fraction> groups_;
};

/// Collects fractions per group, summing numerators that share a denominator;
/// finish() brings each group to one denominator and reduces once.
class Accumulator {
 public:
  explicit Accumulator(int dim) : dim_(dim) {}
  void add(const GroupKey& key, Fraction f);
  void add(const SectionExpr& e, const GaussianRational& s = GaussianRational(1));
  SectionExpr finish(std::shared_ptr<const Context> ctx);

 private:
  using Denominator = std::array<int, 3>;
  int dim_;
  std::map<GroupKey, std::map<Denominator, Poly>> groups_;
};

// Operations closed in the section class. Axis indices are 1-based.

/// Exact partial derivative d/dx_alpha.
SectionExpr derive(const SectionExpr& e, int alpha);
/// Multiply by x^xexp r^s u^t w^tw e^{q r}.
SectionExpr multiply_monomial(const SectionExpr& e, const std::vector<int>& xexp, const Rational& s,
                              const Rational& t = Rational(0), const Rational& tw = Rational(0),
                              const Rational& q = Rational(0));
SectionExpr multiply_x(const SectionExpr& e, int alpha);
SectionExpr multiply_r(const SectionExpr& e, const Rational& s);
SectionExpr apply_matrix(const SectionExpr& e, const Matrix& m);
SectionExpr apply_matrix_function(const SectionExpr& e, const MatrixFunction& m);

/// A_b = -(x_a gamma_ab) / (r (r + x_D)), A_D = 0.
const MatrixFunction& gauge_potential(const Context& ctx, int b);
/// F_{alpha beta} from the closed form of the curvature.
const MatrixFunction& field_strength_matrix(const Context& ctx, int alpha, int beta);
SectionExpr apply_gauge(const SectionExpr& e, int b);
SectionExpr field_strength(const SectionExpr& e, int alpha, int beta);
/// pi_alpha = -i (d_alpha + i A_alpha).
SectionExpr pi(const SectionExpr& e, int alpha);

/// psi(lambda x). Throws IrrationalScaleError if a factor lambda^{1/2} is irrational.
SectionExpr scale_argument(const SectionExpr& e, const Rational& lambda);
/// psi(lambda x) / lambda^{1/2} when every term carries a half-odd homogeneity
/// degree, else psi(lambda x); `dropped_half` reports which case occurred.
SectionExpr scale_argument_up_to_root(const SectionExpr& e, const Rational& lambda, bool& dropped_half);

/// Exact square root of a rational, if it exists.
std::optional<Rational> rational_sqrt(const Rational& x);

}  // namespace micz::sections
