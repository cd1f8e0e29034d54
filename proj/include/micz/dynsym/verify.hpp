#pragma once

#include <memory>
#include <vector>

#include "micz/dynsym/battery.hpp"
#include "micz/dynsym/generators.hpp"
#include "micz/dynsym/report.hpp"

namespace micz::dynsym {

/// Curvature identities: F.F = 2 c2 / r^4, the transport law of [nabla, F],
/// x.A = 0, x_a F_ab = 0, [nabla_a, F_ab] = 0, the [F, F] identity and the
/// quadratic identity r^2 F_la F_lb = (c2/n)(d_ab/r^2 - x_a x_b/r^4) + i(n-1) F_ab.
VerificationReport verify_lemma1(const std::shared_ptr<const Context>& ctx, const Battery& battery, unsigned jobs = 1);

/// so(D) covariance of r, 1/r, x, pi and F under the angular momenta, plus the
/// scaling identities of the dimension operator -x.nabla.
VerificationReport verify_lemma2(const std::shared_ptr<const Context>& ctx, const Battery& battery, unsigned jobs = 1);

/// Expanded forms against definitional forms and the fused generator family,
/// antisymmetry J_AB + J_BA = 0, and hat(J_ab) = J_ab for the angular momenta.
VerificationReport verify_forms(const std::shared_ptr<const Context>& ctx, const Battery& battery, unsigned jobs = 1);

/// so(2, D+1) brackets for every pair of generators.
VerificationReport verify_commutators(const std::shared_ptr<const Context>& ctx, const Battery& battery, bool hatted,
                                      unsigned jobs = 1);

/// The ten quadratic identities sum_{A>=1} {J_AB, J_AC} - sum_{A<=0} {J_AB, J_AC} = 2 a eta_BC, a = n - c.
VerificationReport verify_quadratic(const std::shared_ptr<const Context>& ctx, const Battery& battery, unsigned jobs = 1);

/// Commutators (plain and hatted) and quadratic identities in one pass, sharing
/// the second-level generator tables. Returns the selected reports in the order
/// commutators, commutators-hatted, quadratic.
std::vector<VerificationReport> verify_algebra(const std::shared_ptr<const Context>& ctx, const Battery& battery,
                                               bool commutators, bool hatted, bool quadratic, unsigned jobs = 1);

/// Number (1..10) of the quadratic identity that the index pair (B, C) belongs to.
int quadratic_identity_number(int B, int C, int D);

/// H psi = E psi for an exactly known eigenvalue E.
VerificationReport verify_hamiltonian(const sections::SectionExpr& psi, const Rational& energy, int level);

}  // namespace micz::dynsym
