#include "micz/dynsym/operator.hpp"

#include <sstream>

namespace micz::dynsym {

struct OperatorExpr::Node {
  Kind kind = Kind::Zero;
  // Multiply
  std::vector<int> xexp;
  Rational s, t, tw, q;
  // Derive / Pi / Gauge / Field
  int i1 = 0;
  int i2 = 0;
  // Spin
  Matrix matrix;
  std::string label;
  // Sum: coefficient per child. Compose: children applied last-to-first.
  std::vector<GaussianRational> coeffs;
  std::vector<OperatorExpr> children;
};

namespace {

std::shared_ptr<OperatorExpr::Node> make(OperatorExpr::Kind k) {
  auto n = std::make_shared<OperatorExpr::Node>();
  n->kind = k;
  return n;
}

}  // namespace

OperatorExpr::OperatorExpr() : node_(make(Kind::Zero)) {}

OperatorExpr OperatorExpr::identity() { return OperatorExpr(make(Kind::Identity)); }

OperatorExpr OperatorExpr::multiply(std::vector<int> xexp, Rational s, Rational t, Rational tw, Rational q) {
  auto n = make(Kind::Multiply);
  n->xexp = std::move(xexp);
  n->s = std::move(s);
  n->t = std::move(t);
  n->tw = std::move(tw);
  n->q = std::move(q);
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::x(int alpha) {
  std::vector<int> xe(static_cast<std::size_t>(alpha), 0);
  xe.back() = 1;
  return multiply(std::move(xe));
}

OperatorExpr OperatorExpr::r_pow(Rational s) { return multiply({}, std::move(s)); }

OperatorExpr OperatorExpr::derive(int alpha) {
  auto n = make(Kind::Derive);
  n->i1 = alpha;
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::pi(int alpha) {
  auto n = make(Kind::Pi);
  n->i1 = alpha;
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::gauge(int b) {
  auto n = make(Kind::Gauge);
  n->i1 = b;
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::field(int alpha, int beta) {
  auto n = make(Kind::Field);
  n->i1 = alpha;
  n->i2 = beta;
  return OperatorExpr(n);
}

OperatorExpr OperatorExpr::spin(Matrix m, std::string label) {
  auto n = make(Kind::Spin);
  n->matrix = std::move(m);
  n->label = std::move(label);
  return OperatorExpr(n);
}

OperatorExpr::Kind OperatorExpr::kind() const { return node_->kind; }

SectionExpr OperatorExpr::apply(const SectionExpr& e) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Zero:
      return SectionExpr(e.context());
    case Kind::Identity:
      return e;
    case Kind::Multiply:
      return sections::multiply_monomial(e, n.xexp, n.s, n.t, n.tw, n.q);
    case Kind::Derive:
      return sections::derive(e, n.i1);
    case Kind::Pi:
      return sections::pi(e, n.i1);
    case Kind::Gauge:
      return sections::apply_gauge(e, n.i1);
    case Kind::Field:
      return sections::field_strength(e, n.i1, n.i2);
    case Kind::Spin:
      return sections::apply_matrix(e, n.matrix);
    case Kind::Sum: {
      sections::Accumulator acc(e.dim());
      for (std::size_t k = 0; k < n.children.size(); ++k) acc.add(n.children[k].apply(e), n.coeffs[k]);
      return acc.finish(e.context());
    }
    case Kind::Compose: {
      SectionExpr cur = e;
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
        cur = it->apply(cur);
        if (cur.is_zero()) break;
      }
      return cur;
    }
  }
  return SectionExpr(e.context());
}

std::string OperatorExpr::str() const {
  const Node& n = *node_;
  std::ostringstream os;
  switch (n.kind) {
    case Kind::Zero:
      return "0";
    case Kind::Identity:
      return "1";
    case Kind::Multiply: {
      os << "mul(x^(";
      for (std::size_t a = 0; a < n.xexp.size(); ++a) os << (a ? "," : "") << n.xexp[a];
      os << ") r^" << n.s << " u^" << n.t << " w^" << n.tw << " e^(" << n.q << "r))";
      return os.str();
    }
    case Kind::Derive:
      return "d" + std::to_string(n.i1);
    case Kind::Pi:
      return "pi" + std::to_string(n.i1);
    case Kind::Gauge:
      return "A" + std::to_string(n.i1);
    case Kind::Field:
      return "F" + std::to_string(n.i1) + std::to_string(n.i2);
    case Kind::Spin:
      return n.label;
    case Kind::Sum:
      os << '(';
      for (std::size_t k = 0; k < n.children.size(); ++k)
        os << (k ? " + " : "") << '(' << n.coeffs[k] << ")*" << n.children[k].str();
      os << ')';
      return os.str();
    case Kind::Compose:
      for (std::size_t k = 0; k < n.children.size(); ++k) os << (k ? " . " : "") << n.children[k].str();
      return os.str();
  }
  return "?";
}

OperatorExpr operator*(const GaussianRational& s, const OperatorExpr& a) {
  if (s.is_zero() || a.kind() == OperatorExpr::Kind::Zero) return OperatorExpr();
  auto n = make(OperatorExpr::Kind::Sum);
  if (a.kind() == OperatorExpr::Kind::Sum) {
    n->children = a.node_->children;
    for (const auto& c : a.node_->coeffs) n->coeffs.push_back(c * s);
  } else {
    n->children.push_back(a);
    n->coeffs.push_back(s);
  }
  return OperatorExpr(n);
}

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) {
  using K = OperatorExpr::Kind;
  if (a.kind() == K::Zero) return b;
  if (b.kind() == K::Zero) return a;
  auto n = make(K::Sum);
  for (const auto* side : {&a, &b}) {
    if (side->kind() == K::Sum) {
      n->children.insert(n->children.end(), side->node_->children.begin(), side->node_->children.end());
      n->coeffs.insert(n->coeffs.end(), side->node_->coeffs.begin(), side->node_->coeffs.end());
    } else {
      n->children.push_back(*side);
      n->coeffs.emplace_back(1);
    }
  }
  return OperatorExpr(n);
}

OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) { return a + GaussianRational(-1) * b; }

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  using K = OperatorExpr::Kind;
  if (a.kind() == K::Zero || b.kind() == K::Zero) return OperatorExpr();
  if (a.kind() == K::Identity) return b;
  if (b.kind() == K::Identity) return a;
  auto n = make(K::Compose);
  for (const auto* side : {&a, &b}) {
    if (side->kind() == K::Compose)
      n->children.insert(n->children.end(), side->node_->children.begin(), side->node_->children.end());
    else
      n->children.push_back(*side);
  }
  return OperatorExpr(n);
}

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

OperatorExpr anticommutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b + b * a; }

OperatorExpr hat(const OperatorExpr& op) {
  return OperatorExpr::r_pow(Rational(-1, 2)) * op * OperatorExpr::r_pow(Rational(1, 2));
}

}  // namespace micz::dynsym
