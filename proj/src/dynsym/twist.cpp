#include "micz/dynsym/twist.hpp"

#include "micz/spectrum/radial.hpp"

namespace micz::dynsym {

using exact::GaussianRational;
using exact::Rational;

namespace {

Rational twist_scale(const sections::SectionExpr& psi, int I) {
  return spectrum::level_mu(I, psi.ctx().n, psi.ctx().mu) + 1;
}

}  // namespace

sections::SectionExpr twist(const sections::SectionExpr& psi, int I, bool* up_to_root) {
  const Rational N = twist_scale(psi, I);
  bool dropped = false;
  auto out = sections::scale_argument_up_to_root(psi, N, dropped);
  out = sections::multiply_r(out, Rational(-1, 2));
  out *= GaussianRational(N.pow(psi.ctx().n + 1));
  if (up_to_root) *up_to_root = dropped;
  return out;
}

sections::SectionExpr untwist(const sections::SectionExpr& psi, int I, bool* up_to_root) {
  const Rational N = twist_scale(psi, I);
  // (r/N)^{1/2} psi(r/N) = (r^{1/2} psi)(r/N).
  bool dropped = false;
  auto out = sections::scale_argument_up_to_root(sections::multiply_r(psi, Rational(1, 2)), N.reciprocal(), dropped);
  out *= GaussianRational(N.pow(-(psi.ctx().n + 1)));
  if (up_to_root) *up_to_root = dropped;
  return out;
}

}  // namespace micz::dynsym
