#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "micz/exact/matrix.hpp"
#include "micz/exact/rational.hpp"

namespace micz::clifford {

using exact::GaussianRational;
using exact::Matrix;
using exact::Rational;

/// Hermitian gamma matrices for so(2n) acting on C^(2^n).
struct GammaSystem {
  int n = 0;
  std::size_t dim = 0;
  /// gammas[a-1] is gamma_a, a = 1..2n.
  std::vector<Matrix> gammas;
  /// Hermitian involution anticommuting with every gamma_a; its +1 eigenspace is s_+.
  Matrix chirality;

  const Matrix& gamma(int a) const { return gammas.at(static_cast<std::size_t>(a - 1)); }
  /// gamma_ab = (i/4)[gamma_a, gamma_b].
  Matrix gamma_ab(int a, int b) const;
};

/// Iterated tensor doubling starting from the Pauli pair.
GammaSystem build_gamma(int n);

struct ChiralProjectors {
  Matrix plus;
  Matrix minus;
};

/// Eigenprojectors of the chirality element. The phase is fixed so that the
/// highest weight of s_+ has last component +1/2 under H_j = -gamma_{2j-1,2j}.
ChiralProjectors chiral_split(const GammaSystem& gs);

/// so(2n) acting on the irreducible module with highest weight (|mu|,...,|mu|,mu).
class RepAction {
 public:
  RepAction(int n, Rational mu, std::vector<Matrix> gamma_ab, Matrix gram,
            std::vector<std::vector<Rational>> weights);

  int n() const { return n_; }
  const Rational& mu() const { return mu_; }
  std::size_t dim() const { return dim_; }
  /// gamma_ab for a, b in 1..2n (antisymmetric; zero when a == b).
  const Matrix& gamma_ab(int a, int b) const;
  /// Hermitian form of the chosen basis (diagonal, positive).
  const Matrix& gram() const { return gram_; }
  /// Cartan weight (eigenvalues of H_j = -gamma_{2j-1,2j}) of basis vector k.
  const std::vector<Rational>& weight(std::size_t k) const { return weights_.at(k); }

 private:
  int n_;
  Rational mu_;
  std::size_t dim_;
  std::vector<Matrix> gamma_ab_;  // row-major 2n x 2n table
  Matrix gram_;
  std::vector<std::vector<Rational>> weights_;
};

/// Trivial module for mu = 0; otherwise the cyclic submodule generated by the
/// highest-weight vector inside Sym^{2|mu|}(s_{sign mu}).
/// Throws UnsupportedError outside n in {1,2}, |mu| <= 3/2.
RepAction build_rep(int n, const Rational& mu);

/// Verifies (1/2) sum_{a,b} gamma_ab gamma_ab = lambda Id and returns lambda.
/// Throws NotScalarError otherwise.
Rational casimir_scalar(const RepAction& rep);

/// n (mu^2 + (n-1)|mu|).
Rational casimir_formula(int n, const Rational& mu);

/// Residual of the so(2n) bracket
/// [g_ab, g_cd] = i(d_bc g_ad + d_ad g_bc - d_ac g_bd - d_bd g_ac)
/// for one index quadruple. Zero matrix when the relation holds.
Matrix closure_residual(const RepAction& rep, int a, int b, int c, int d);

/// Human-readable description of the conventions (gamma basis, chirality phase).
std::string convention_note(int n);

}  // namespace micz::clifford
