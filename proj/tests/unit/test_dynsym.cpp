#include <set>

#include "doctest.h"
#include "micz/dynsym/battery.hpp"
#include "micz/dynsym/generators.hpp"
#include "micz/dynsym/twist.hpp"
#include "micz/dynsym/verify.hpp"
#include "micz/ladder/ladder.hpp"
#include "micz/ladder/zonal.hpp"
#include "micz/spectrum/radial.hpp"

using micz::exact::GaussianRational;
using micz::exact::Rational;
using micz::sections::SectionExpr;
using namespace micz::dynsym;

namespace {

const Rational half(1, 2);
const GaussianRational I_(Rational(0), Rational(1));

SectionExpr radial_term(const std::shared_ptr<const Context>& ctx, const Rational& s, const Rational& q) {
  std::vector<GaussianRational> v(ctx->spin_dim());
  v[0] = GaussianRational(1);
  return SectionExpr::term(ctx, GaussianRational(1), std::vector<int>(static_cast<std::size_t>(ctx->D), 0), s, 0, 0, q,
                           v);
}

}  // namespace

TEST_CASE("index conventions") {
  CHECK(index_count(3) == 6);
  CHECK(eta(-1) == 1);
  CHECK(eta(0) == 1);
  for (int A = 1; A <= 4; ++A) CHECK(eta(A) == -1);
  const auto pairs = generator_pairs(3);
  CHECK(pairs.size() == 15);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    CHECK(pairs[k].A < pairs[k].B);
    CHECK(pair_slot(pairs[k].A, pairs[k].B, 3) == k);
  }
}

TEST_CASE("T on a constant spinor") {
  for (int n : {1, 2}) {
    auto ctx = micz::sections::make_context(n, half);
    for (std::size_t k = 0; k < ctx->spin_dim(); ++k) {
      const auto v = SectionExpr::basis(ctx, k);
      const auto T = build_generator(*ctx, ctx->D + 1, -1);
      CHECK(T(v) == v * (I_ * GaussianRational(Rational(-(ctx->D - 1), 2))));
    }
  }
}

TEST_CASE("hat on multiplication and angular momenta") {
  auto ctx = micz::sections::make_context(1, half);
  const auto battery = make_battery(ctx, 20, 7);
  const auto r = OperatorExpr::r_pow(Rational(1));
  const auto T = build_generator(*ctx, ctx->D + 1, -1);
  for (const auto& psi : battery.sections) {
    CHECK(hat(r)(psi) == r(psi));
    for (int a = 1; a <= ctx->D; ++a)
      for (int b = a + 1; b <= ctx->D; ++b) CHECK(hat(build_generator(*ctx, a, b))(psi) == build_generator(*ctx, a, b)(psi));
    const auto root = OperatorExpr::r_pow(-half);
    CHECK(hat(T)(root(psi)) == root(T(psi)));
    // J_AB + J_BA = 0
    CHECK((build_generator(*ctx, 0, 2) + build_generator(*ctx, 2, 0))(psi).is_zero());
    CHECK(build_generator(*ctx, 3, 3)(psi).is_zero());
  }
}

TEST_CASE("sample brackets") {
  auto ctx = micz::sections::make_context(2, -half);
  const int D = ctx->D;
  const auto battery = make_battery(ctx, 6, 3);
  const auto Gd1 = build_generator(*ctx, D + 1, 0);
  const auto Gm1 = build_generator(*ctx, -1, 0);
  const auto T = build_generator(*ctx, D + 1, -1);
  const auto J12 = build_generator(*ctx, 1, 2);
  const auto J23 = build_generator(*ctx, 2, 3);
  const auto J13 = build_generator(*ctx, 1, 3);
  for (const auto& psi : battery.sections) {
    // [Gamma_{D+1}, Gamma_{-1}] = -i T
    CHECK(commutator(Gd1, Gm1)(psi) == T(psi) * (-I_));
    // [J_12, J_23] = i eta_22 J_13 = -i J_13
    CHECK(commutator(J12, J23)(psi) == J13(psi) * (-I_));
  }
}

TEST_CASE("Casimir and the quadratic constant") {
  CHECK(micz::clifford::casimir_formula(1, Rational(0)) == Rational(0));
  // a = n - c with c = mu^2 + (n-1)|mu|
  CHECK(Rational(1) - micz::clifford::casimir_formula(1, Rational(0)) == Rational(1));
  CHECK(Rational(1) - micz::clifford::casimir_formula(1, half) == Rational(3, 4));
  CHECK(micz::clifford::casimir_formula(2, -half) / 2 == Rational(3, 4));
  for (int n : {1, 2}) {
    for (const auto& mu : {Rational(0), half, -half, Rational(1), Rational(3, 2)}) {
      auto ctx = micz::sections::make_context(n, mu);
      CHECK(ctx->c == mu * mu + mu.abs() * (n - 1));
      CHECK(micz::clifford::casimir_scalar(*ctx->rep) == ctx->c * n);
    }
  }
}

TEST_CASE("quadratic identity numbering") {
  for (int D : {3, 5}) {
    std::set<int> seen;
    for (int B = -1; B <= D + 1; ++B)
      for (int C = B; C <= D + 1; ++C) {
        const int k = quadratic_identity_number(B, C, D);
        CHECK(k >= 1);
        CHECK(k <= 10);
        seen.insert(k);
      }
    CHECK(seen.size() == 10);
  }
}

TEST_CASE("battery") {
  auto ctx = micz::sections::make_context(2, half);
  const auto a = make_battery(ctx, 20, 11);
  const auto b = make_battery(ctx, 20, 11);
  const auto c = make_battery(ctx, 20, 12);
  REQUIRE(a.sections.size() == 20);
  bool differs = false;
  for (std::size_t k = 0; k < a.sections.size(); ++k) {
    CHECK(a.sections[k].str() == b.sections[k].str());
    CHECK_FALSE(a.sections[k].is_zero());
    differs = differs || a.sections[k].str() != c.sections[k].str();
  }
  CHECK(differs);
  CHECK(a.descriptor().find("seed=11") != std::string::npos);
}

TEST_CASE("identity suites on small batteries") {
  for (const auto& [n, mu] : {std::pair{1, half}, {1, Rational(0)}, {2, -half}}) {
    CAPTURE(n);
    CAPTURE(mu.str());
    auto ctx = micz::sections::make_context(n, mu);
    const auto battery = make_battery(ctx, n == 1 ? 8 : 4, 5);
    const auto l1 = verify_lemma1(ctx, battery);
    CHECK(l1.status == Status::ExactPass);
    CHECK(verify_lemma2(ctx, battery).status == Status::ExactPass);
    CHECK(verify_forms(ctx, battery).status == Status::ExactPass);
    for (const auto& r : verify_algebra(ctx, battery, true, true, true)) {
      CAPTURE(r.check);
      CHECK(r.status == Status::ExactPass);
    }
  }
}

TEST_CASE("reports are deterministic") {
  auto ctx = micz::sections::make_context(1, half);
  const auto battery = make_battery(ctx, 6, 9);
  const auto one = verify_lemma1(ctx, battery, 1);
  const auto two = verify_lemma1(ctx, battery, 2);
  CHECK(one.json() == two.json());
  CHECK(one.json().find("\"elapsed_ms\":0") != std::string::npos);
  CHECK(render_json({two, one}) == render_json({one, two}));
}

TEST_CASE("Hamiltonian on known eigen-sections") {
  // (n=1, mu=0) ground state e^{-r}
  auto ctx = micz::sections::make_context(1, Rational(0));
  CHECK(verify_hamiltonian(radial_term(ctx, 0, Rational(-1)), Rational(-1, 2), 0).status == Status::ExactPass);
  CHECK(verify_hamiltonian(radial_term(ctx, 0, Rational(-1)), Rational(-1, 3), 0).status == Status::Fail);
  // untwisted highest sections: E = -2/9 for (1, 1/2, 0) and -1/18 for (2, 0, 1)
  const auto h1 = micz::ladder::highest_section(0, 1, half);
  CHECK(verify_hamiltonian(untwist(h1.section, 0), Rational(-2, 9), 0).passed());
  const auto h2 = micz::ladder::highest_section(1, 2, Rational(0));
  CHECK(verify_hamiltonian(untwist(h2.section, 1), Rational(-1, 18), 1).passed());
}

TEST_CASE("twist") {
  auto ctx = micz::sections::make_context(1, Rational(0));
  // ground state: N = 1, e^{-r} -> r^{-1/2} e^{-r}
  CHECK(twist(radial_term(ctx, 0, Rational(-1)), 0) == radial_term(ctx, -half, Rational(-1)));
  for (int I = 0; I <= 3; ++I) {
    for (const auto& [n, mu] : {std::pair{1, half}, {1, Rational(1)}, {2, Rational(0)}}) {
      const auto h = micz::ladder::highest_section(I, n, mu);
      bool dropped = false;
      const auto psi = untwist(h.section, I, &dropped);
      CHECK(twist(psi, I) == h.section);
      // Energy eigenstates keep their norm: <1/r> = 1/N^2 makes the r^{-1/2} weight harmless.
      const auto before = micz::ladder::inner_product(psi, psi);
      const auto after = micz::ladder::inner_product(h.section, h.section);
      const auto q = micz::ladder::ZonalValue::ratio(after, before);
      REQUIRE(q.has_value());
      const Rational N = micz::spectrum::level_mu(I, n, mu) + 1;
      // A dropped N^{-1/2} leaves psi scaled by N^{1/2}.
      CHECK(*q == GaussianRational(dropped ? N.reciprocal() : Rational(1)));
    }
  }
}
