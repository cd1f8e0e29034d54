#pragma once

#include "micz/sections/section.hpp"

namespace micz::dynsym {

/// Twisting of an energy-I eigen-section: N^{n+1} r^{-1/2} psi(N r) with
/// N = I_mu + 1. When N^{1/2} is irrational and every term has half-odd
/// homogeneity, that common factor is left out and `up_to_root` is set.
sections::SectionExpr twist(const sections::SectionExpr& psi, int I, bool* up_to_root = nullptr);

/// Inverse twisting: N^{-(n+1)} (r/N)^{1/2} psi~(r/N), with the same caveat.
sections::SectionExpr untwist(const sections::SectionExpr& psi, int I, bool* up_to_root = nullptr);

}  // namespace micz::dynsym
