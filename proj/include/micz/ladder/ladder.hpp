#pragma once

#include <optional>
#include <string>
#include <vector>

#include "micz/dynsym/generators.hpp"
#include "micz/dynsym/report.hpp"
#include "micz/ladder/zonal.hpp"

namespace micz::ladder {

using dynsym::OperatorExpr;
using dynsym::VerificationReport;
using sections::Context;

// Cartan generators of so(2n+2) acting on axes 1..D+1 (hatted):
//   H_1 = -J^_12,  H_j = J^_{2j-1,2j} for 2 <= j <= n,  H_{n+1} = A^_D = J^_{D,D+1}.
// The sign of H_1 follows the fibre convention H_j = -gamma_{2j-1,2j}; with it the
// bound-state levels carry highest weights (I+|mu|, |mu|, ..., |mu|, mu).
OperatorExpr cartan(const Context& ctx, int j);

struct RootVector {
  std::string name;
  OperatorExpr op;
};
/// Root vectors of the positive roots e_j - e_k, e_j + e_k (j < k <= n+1).
std::vector<RootVector> positive_roots(const Context& ctx);

/// Gamma^_{-1}.
OperatorExpr gamma_hat(const Context& ctx);
/// E_- = T^ - i Gamma^_{D+1}: raises the Gamma^_{-1} eigenvalue by one.
OperatorExpr lowering_operator(const Context& ctx);
/// E_+ = T^ + i Gamma^_{D+1}.
OperatorExpr raising_operator(const Context& ctx);
/// Root vector for -e_0 + e_1 of so(2, D+1): maps the highest section of
/// level I to that of level I+1.
OperatorExpr level_operator(const Context& ctx);

SectionExpr lower(const SectionExpr& s);
SectionExpr raise(const SectionExpr& s);

/// Highest-weight bound state of level I in the twisted picture:
/// r^{I_mu-n+1/2} e^{-r} (sin t)^{-(n-1)} (1-cos t)^{(I_mu+mu)/2} (1+cos t)^{(I_mu-mu)/2} Z.
struct HighestSection {
  int I = 0;
  int n = 1;
  Rational mu;
  Rational I_mu;
  SectionExpr section;
  /// "kappa-search" (n = 1) or "root-climb" (n = 2).
  std::string method;
  /// Winding number of Z = (x_1 +- i x_2)^|kappa| (x_1^2 + x_2^2)^{-|kappa|/2} for n = 1.
  std::optional<int> kappa;

  Rational eigenvalue() const { return I_mu + 1; }
};

/// Determines the angular factor in-engine and verifies the Gamma^_{-1}
/// eigenvalue, the Cartan weights and annihilation by every positive root
/// vector. Throws DeterminationError when nothing qualifies.
HighestSection highest_section(int I, int n, const Rational& mu);

/// Highest section built by climbing with root vectors from a constant-spinor
/// seed of level 0 and then applying level_operator I times (any n).
SectionExpr highest_by_climb(int I, const std::shared_ptr<const Context>& ctx);

/// Density |psi~|^2 of the highest section read off the closed form:
/// r^{-1} u^{I_mu-mu-n+1} w^{I_mu+mu-n+1} e^{-2r}.
ZonalProfile highest_density(int I, int n, const Rational& mu);

/// Gamma^_{-1} s = expected s.
VerificationReport gamma_eigencheck(const SectionExpr& s, const Rational& expected);

/// <A^_D> on the highest section as -int x_D rho / int rho over the closed-form density.
Rational ad_expectation(int I, int n, const Rational& mu);
/// The same quantity through the Beta-quotient chain
/// -(I_mu+1)(2 B(I_mu+1+mu, I_mu+2-mu) / B(I_mu+1+mu, I_mu+1-mu) - 1).
Rational ad_expectation_beta_chain(int I, int n, const Rational& mu);

/// Expectation report: closed-form value, Beta chain, the density of the
/// constructed section against the closed form, A^_D psi = mu psi and the
/// operator identity A^_D = i[Gamma^_D, Gamma^_{-1}] - x_D on psi.
VerificationReport expectation_report(int I, int n, const Rational& mu);

struct TowerOptions {
  int steps = 5;
  /// Hermiticity and orthogonality spot-check on the first members.
  int hermitian_members = 3;
};

/// Tower law, bottom annihilation, radial agreement with the twisted radial
/// solutions (constants reported), and hermiticity of Gamma^_{-1}, T^ and A^_D
/// together with orthogonality on the first tower members.
VerificationReport ladder_report(int I, int n, const Rational& mu, const TowerOptions& opt = {});

/// H psi = E psi for the untwisted highest section of level I and its tower.
VerificationReport hamiltonian_report(int I, int n, const Rational& mu, int steps = 5);

}  // namespace micz::ladder
