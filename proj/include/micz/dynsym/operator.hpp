#pragma once

#include <memory>
#include <string>
#include <vector>

#include "micz/sections/section.hpp"

namespace micz::dynsym {

using exact::GaussianRational;
using exact::Matrix;
using exact::Rational;
using sections::SectionExpr;

/// Formal linear operator on sections: a sum of compositions of primitives.
/// Compositions apply right to left; no operator-level simplification is done.
class OperatorExpr {
 public:
  enum class Kind { Zero, Identity, Multiply, Derive, Pi, Gauge, Field, Spin, Sum, Compose };

  /// The zero operator.
  OperatorExpr();

  static OperatorExpr identity();
  /// Multiplication by x^xexp r^s u^t w^tw e^{q r}.
  static OperatorExpr multiply(std::vector<int> xexp, Rational s = Rational(0), Rational t = Rational(0),
                               Rational tw = Rational(0), Rational q = Rational(0));
  static OperatorExpr x(int alpha);
  static OperatorExpr r_pow(Rational s);
  static OperatorExpr derive(int alpha);
  /// pi_alpha = -i (d_alpha + i A_alpha).
  static OperatorExpr pi(int alpha);
  static OperatorExpr gauge(int b);
  static OperatorExpr field(int alpha, int beta);
  static OperatorExpr spin(Matrix m, std::string label = "M");

  Kind kind() const;
  SectionExpr apply(const SectionExpr& e) const;
  SectionExpr operator()(const SectionExpr& e) const { return apply(e); }
  std::string str() const;

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const GaussianRational& s, const OperatorExpr& a);
  /// Composition: (a * b) psi = a (b psi).
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  struct Node;

 private:
  explicit OperatorExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b);
/// r^{-1/2} o op o r^{1/2}.
OperatorExpr hat(const OperatorExpr& op);

}  // namespace micz::dynsym
