#pragma once

#include <memory>
#include <string>
#include <vector>

#include "micz/dynsym/operator.hpp"

namespace micz::dynsym {

using sections::Context;

/// Generator indices run over -1, 0, 1, ..., D+1 in this order.
int index_count(int D);
/// eta_AA: +1 for A in {-1, 0}, -1 otherwise.
int eta(int A);
std::string index_name(int A, int D);

struct IndexPair {
  int A;
  int B;
};
/// All pairs A < B in the generator order.
std::vector<IndexPair> generator_pairs(int D);
/// Position of (A, B), A < B, inside generator_pairs(D).
std::size_t pair_slot(int A, int B, int D);

enum class Form { Expanded, Definitional };

/// J_AB as a formal operator (zero for A == B, -J_BA for A > B).
/// Expanded forms are the closed expressions in x, r, pi and F; definitional
/// forms are built from Gamma = r pi, X = r pi^2 + c/r and Y = r through commutators.
OperatorExpr build_generator(const Context& ctx, int A, int B, Form form = Form::Expanded);

/// Named pieces used by the Hamiltonian and the ladder.
OperatorExpr pi_squared(const Context& ctx);
OperatorExpr r_dot_pi(const Context& ctx);
/// H = pi^2 / 2 + c / (2 r^2) - 1/r.
OperatorExpr hamiltonian(const Context& ctx);

/// Applies every J_AB (A < B) to one section, sharing the common subterms
/// pi_b psi, pi^2 psi and (r.pi) psi. With `hatted`, computes
/// r^{-1/2} J_AB (r^{1/2} psi) instead.
class GeneratorFamily {
 public:
  GeneratorFamily(std::shared_ptr<const Context> ctx, bool hatted);

  const Context& ctx() const { return *ctx_; }
  bool hatted() const { return hatted_; }
  std::vector<SectionExpr> apply(const SectionExpr& psi) const;

  /// Signed lookup of J_AB psi inside a result of apply().
  static SectionExpr lookup(const std::vector<SectionExpr>& table, int A, int B, const std::shared_ptr<const Context>& ctx);

 private:
  std::vector<SectionExpr> apply_plain(const SectionExpr& psi) const;

  std::shared_ptr<const Context> ctx_;
  bool hatted_;
};

}  // namespace micz::dynsym
