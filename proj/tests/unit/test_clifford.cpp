#include "doctest.h"
#include "micz/clifford/clifford.hpp"
#include "micz/errors.hpp"

using namespace micz::clifford;

namespace {

Matrix delta_identity(std::size_t d, int k) { return Matrix::identity(d) * GaussianRational(k); }

}  // namespace

TEST_CASE("gamma matrices anticommute and are hermitian") {
  for (int n = 1; n <= 3; ++n) {
    const GammaSystem gs = build_gamma(n);
    CHECK(gs.dim == (std::size_t{1} << n));
    CHECK(gs.gammas.size() == static_cast<std::size_t>(2 * n));
    for (int a = 1; a <= 2 * n; ++a) {
      CHECK(gs.gamma(a).is_hermitian());
      for (int b = 1; b <= 2 * n; ++b)
        CHECK(anticommutator(gs.gamma(a), gs.gamma(b)) == delta_identity(gs.dim, a == b ? 2 : 0));
    }
    CHECK(gs.chirality.is_hermitian());
    CHECK(gs.chirality * gs.chirality == Matrix::identity(gs.dim));
    for (int a = 1; a <= 2 * n; ++a) CHECK(anticommutator(gs.chirality, gs.gamma(a)).is_zero());
  }
}

TEST_CASE("n=1 gamma_12 has eigenvalues +-1/2") {
  const GammaSystem gs = build_gamma(1);
  const Matrix g12 = gs.gamma_ab(1, 2);
  // Hermitian 2x2 with trace 0 and determinant -1/4.
  CHECK(g12.trace().is_zero());
  const GaussianRational det = g12(0, 0) * g12(1, 1) - g12(0, 1) * g12(1, 0);
  CHECK(det == GaussianRational(Rational(-1, 4)));
}

TEST_CASE("chiral projectors") {
  for (int n = 1; n <= 2; ++n) {
    const GammaSystem gs = build_gamma(n);
    const auto [plus, minus] = chiral_split(gs);
    CHECK(plus + minus == Matrix::identity(gs.dim));
    CHECK(plus * plus == plus);
    CHECK((plus * minus).is_zero());
    CHECK(micz::exact::rank(plus) == (std::size_t{1} << (n - 1)));
    CHECK(micz::exact::rank(minus) == (std::size_t{1} << (n - 1)));
    for (int a = 1; a <= 2 * n; ++a)
      for (int b = a + 1; b <= 2 * n; ++b) CHECK(commutator(plus, gs.gamma_ab(a, b)).is_zero());
  }
  // n=1: gamma_12 is +1/2 on s_+ and -1/2 on s_-.
  const GammaSystem gs = build_gamma(1);
  const auto [plus, minus] = chiral_split(gs);
  const Matrix h = gs.gamma_ab(1, 2) * GaussianRational(-1);
  CHECK(h * plus == plus * GaussianRational(Rational(1, 2)));
  CHECK(h * minus == minus * GaussianRational(Rational(-1, 2)));
}

TEST_CASE("representation dimensions and Casimir") {
  struct Case {
    int n;
    Rational mu;
    std::size_t dim;
    Rational c2;
  };
  const Case cases[] = {
      {1, Rational(0), 1, Rational(0)},          {1, Rational(1, 2), 1, Rational(1, 4)},
      {2, Rational(1, 2), 2, Rational(3, 2)},    {1, Rational(-3, 2), 1, Rational(9, 4)},
      {2, Rational(1), 3, Rational(4)},          {2, Rational(3, 2), 4, Rational(15, 2)},
      {2, Rational(-1, 2), 2, Rational(3, 2)},   {2, Rational(-1), 3, Rational(4)},
  };
  for (const auto& c : cases) {
    const RepAction rep = build_rep(c.n, c.mu);
    CHECK(rep.dim() == c.dim);
    CHECK(casimir_scalar(rep) == c.c2);
    CHECK(casimir_formula(c.n, c.mu) == c.c2);
  }
  CHECK_THROWS_AS(build_rep(3, Rational(1, 2)), micz::UnsupportedError);
  CHECK_THROWS_AS(build_rep(1, Rational(2)), micz::UnsupportedError);
}

TEST_CASE("so(2n) closure, hermiticity and highest weight") {
  for (int n = 1; n <= 2; ++n)
    for (const Rational& mu : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1), Rational(3, 2)}) {
      const RepAction rep = build_rep(n, mu);
      const int m = 2 * n;
      for (int a = 1; a <= m; ++a)
        for (int b = 1; b <= m; ++b)
          for (int c = 1; c <= m; ++c)
            for (int d = 1; d <= m; ++d) {
              if (a == b || c == d) continue;
              CHECK(closure_residual(rep, a, b, c, d).is_zero());
            }
      // The Gram form makes every gamma_ab hermitian: G X = X^dagger G.
      for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
          CHECK(rep.gram() * rep.gamma_ab(a, b) == rep.gamma_ab(a, b).adjoint() * rep.gram());
      std::vector<Rational> top(static_cast<std::size_t>(n), mu.abs());
      top.back() = mu;
      CHECK(rep.weight(0) == top);
    }
}
