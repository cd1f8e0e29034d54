#pragma once

#include <string>
#include <vector>

#include "micz/exact/rational.hpp"

namespace micz::reptheory {

using exact::Rational;

enum class Algebra { B, D };

/// Highest weight of so(2n+1) (B) or so(2n) (D) in the orthogonal basis.
struct Weight {
  Algebra algebra = Algebra::B;
  std::vector<Rational> m;

  int rank() const { return static_cast<int>(m.size()); }
  /// Half-integral components, all congruent mod 1, and the dominance chain.
  bool dominant() const;
  std::string str() const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// (l + |mu|, |mu|, ..., |mu|) of B_n.
Weight orbital_weight(int n, const Rational& mu, int l);
/// (I + |mu|, |mu|, ..., |mu|, mu) of D_{n+1}.
Weight level_weight(int n, const Rational& mu, int I);
/// (|mu|, ..., |mu|, mu) of D_n: the fibre module.
Weight fibre_weight(int n, const Rational& mu);

/// Weyl dimension formula. Throws NonDominantError.
Rational weyl_dim(const Weight& w);

/// Interlacing restriction B_n -> D_n: m_1 >= m'_1 >= ... >= m_n >= |m'_n|.
std::vector<Weight> branch_B_to_D(const Weight& w);
/// Interlacing restriction D_{n+1} -> B_n: M_1 >= m_1 >= M_2 >= ... >= m_n >= |M_{n+1}|.
std::vector<Weight> branch_D_to_B(const Weight& w);

struct DegeneracyRow {
  int I = 0;
  Rational energy;
  Rational dim;
};

/// dim H_I from the Spin(2n+2) Weyl formula, cross-checked against the sum of
/// the so(2n+1) orbital dimensions for l = 0..I. Throws MismatchError.
std::vector<DegeneracyRow> degeneracy_table(int n, const Rational& mu, int imax);

/// (-(n + |mu|), |mu|, ..., |mu|, mu): highest weight of the bound-state module.
std::vector<Rational> module_highest_weight(int n, const Rational& mu);

struct ModuleWeightCheck {
  std::vector<Rational> weight;
  Rational bottom_eigenvalue;
  bool first_matches = false;
  bool tail_matches = false;
  bool passed() const { return first_matches && tail_matches; }
};

/// The first component is minus the bottom Gamma_{-1} eigenvalue I_mu + 1 at
/// I = 0, the rest is the I = 0 level weight.
ModuleWeightCheck check_module_weight(int n, const Rational& mu);

}  // namespace micz::reptheory
