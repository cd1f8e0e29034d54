#include <cmath>
#include <numbers>
#include <optional>

#include "doctest.h"
#include "micz/errors.hpp"
#include "micz/ladder/ladder.hpp"
#include "micz/spectrum/radial.hpp"

using micz::exact::GaussianRational;
using micz::exact::Rational;
using micz::sections::SectionExpr;
using namespace micz::ladder;

namespace {

const Rational half(1, 2);
const std::vector<Rational> grid_mu = {Rational(0), half, -half, Rational(1), Rational(3, 2)};

double approx(const ZonalValue& v) {
  double s = 0;
  for (const auto& [k, c] : v.terms()) {
    const double re = c.re().value().get_d();
    s += re * std::pow(std::numbers::pi, k.pi_halves / 2.0) * std::sqrt(static_cast<double>(k.root));
  }
  return s;
}

// Composite Simpson in (r, theta) of r^{p+a+b+D-1} (1+cos)^a (1-cos)^b sin^{D-2} e^{qr},
// times the area of S^{D-2} (the azimuthal sphere of x_1..x_{D-1}).
double polar_quadrature(int n, double p, double a, double b, double q) {
  const int D = 2 * n + 1;
  auto simpson = [](auto f, double lo, double hi, int m) {
    const double h = (hi - lo) / m;
    double s = f(lo) + f(hi);
    for (int i = 1; i < m; ++i) s += f(lo + i * h) * (i % 2 ? 4 : 2);
    return s * h / 3;
  };
  const double radial = simpson([&](double r) { return r <= 0 ? 0 : std::pow(r, p + a + b + D - 1) * std::exp(q * r); },
                                0, 80 / -q, 20000);
  const double angular = simpson(
      [&](double t) { return std::pow(1 + std::cos(t), a) * std::pow(1 - std::cos(t), b) * std::pow(std::sin(t), D - 2); },
      0, std::numbers::pi, 20000);
  // |S^{D-2}| = 2 pi^{(D-1)/2} / Gamma((D-1)/2)
  const double sphere = 2 * std::pow(std::numbers::pi, (D - 1) / 2.0) / std::tgamma((D - 1) / 2.0);
  return radial * angular * sphere;
}

std::optional<GaussianRational> ratio(const SectionExpr& a, const SectionExpr& b) {
  const auto t0 = b.terms().front();
  for (const auto& t : a.terms()) {
    if (t.spin == t0.spin && t.xexp == t0.xexp && t.rexp == t0.rexp && t.uexp == t0.uexp && t.wexp == t0.wexp &&
        t.q == t0.q) {
      const auto k = t.coeff / t0.coeff;
      if ((a - b * k).is_zero()) return k;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("zonal integral of closed forms") {
  // int e^{-2r} d^3x = 4 pi * 2! / 2^3
  CHECK(zonal_integral(ZonalProfile::term(GaussianRational(1), 0, 0, 0, -2), 1) ==
        ZonalValue::surd(GaussianRational(1), 2, Rational(1)));
  // int e^{-r} d^5x = |S^4| 4! = 64 pi^2
  CHECK(zonal_integral(ZonalProfile::term(GaussianRational(1), 0, 0, 0, -1), 2) ==
        ZonalValue::surd(GaussianRational(64), 4, Rational(1)));
  // int (r^2 - x_3^2)/r e^{-r} d^3x = (4 pi - 4 pi / 3) 3!
  CHECK(zonal_integral(ZonalProfile::term(GaussianRational(1), -1, 1, 1, -1), 1) ==
        ZonalValue::surd(GaussianRational(16), 2, Rational(1)));
  CHECK_THROWS_AS(zonal_integral(ZonalProfile::term(GaussianRational(1), 0, 0, 0, 1), 1), micz::DivergentError);
  CHECK_THROWS_AS(zonal_integral(ZonalProfile::term(GaussianRational(1), -4, 0, 0, -1), 1), micz::DivergentError);
}

TEST_CASE("zonal integral against polar quadrature") {
  struct Case {
    int n;
    Rational p, a, b, q;
  };
  const std::vector<Case> cases = {
      {1, Rational(0), half, Rational(3, 2), Rational(-1)},
      {1, -half, Rational(1), Rational(0), Rational(-2)},
      {2, Rational(-1), Rational(3, 2), half, Rational(-1)},
      {2, half, Rational(2), Rational(1), Rational(-3, 2)},
  };
  for (const auto& c : cases) {
    const auto exact = approx(zonal_integral(ZonalProfile::term(GaussianRational(1), c.p, c.a, c.b, c.q), c.n));
    const auto num = polar_quadrature(c.n, c.p.value().get_d(), c.a.value().get_d(), c.b.value().get_d(),
                                      c.q.value().get_d());
    CHECK(exact == doctest::Approx(num).epsilon(1e-6));
  }
}

TEST_CASE("odd integrand vanishes") {
  for (int n : {1, 2}) {
    for (int I = 0; I <= 4; ++I) {
      const auto rho = highest_density(I, n, Rational(0));
      CHECK(zonal_integral(rho.times_xd(), n).is_zero());
      CHECK_FALSE(zonal_integral(rho, n).is_zero());
    }
  }
}

TEST_CASE("sphere average of the inner product") {
  auto ctx = micz::sections::make_context(2, half);
  std::vector<GaussianRational> v(ctx->spin_dim());
  v[0] = GaussianRational(1);
  auto mono = [&](int axis) {
    std::vector<int> xe(5, 0);
    xe[static_cast<std::size_t>(axis)] = 1;
    return SectionExpr::term(ctx, GaussianRational(1), xe, Rational(-1), 0, 0, Rational(-1), v);
  };
  // Every x_a^2 has the same integral, a quarter of that of |x'|^2 = uw.
  const auto quarter = inner_product(mono(0), mono(0));
  for (int a = 1; a < 4; ++a) CHECK(inner_product(mono(a), mono(a)) == quarter);
  const auto full = SectionExpr::term(ctx, GaussianRational(1), std::vector<int>(5, 0), Rational(-1), half, half,
                                      Rational(-1), v);
  const auto q = ZonalValue::ratio(inner_product(full, full), quarter);
  REQUIRE(q.has_value());
  CHECK(*q == GaussianRational(4));
  CHECK(inner_product(mono(0), mono(1)).is_zero());
}

TEST_CASE("positive roots") {
  for (int n : {1, 2}) {
    auto ctx = micz::sections::make_context(n, half);
    CHECK(positive_roots(*ctx).size() == static_cast<std::size_t>(n * (n + 1)));
  }
}

TEST_CASE("highest sections: examples") {
  const auto h0 = highest_section(0, 1, Rational(0));
  auto ctx = h0.section.context();
  CHECK(h0.method == "kappa-search");
  CHECK(h0.kappa == 0);
  // r^{-1/2} e^{-r} with constant angular part
  const auto expect = SectionExpr::term(ctx, GaussianRational(1), {0, 0, 0}, -half, 0, 0, Rational(-1),
                                        {GaussianRational(1)});
  CHECK(ratio(h0.section, expect).has_value());
  CHECK(gamma_eigencheck(h0.section, Rational(1)).passed());

  const auto h1 = highest_section(0, 1, half);
  CHECK(h1.eigenvalue() == Rational(3, 2));
  CHECK(gamma_eigencheck(h1.section, Rational(3, 2)).passed());
  CHECK_FALSE(gamma_eigencheck(h1.section, Rational(1)).passed());
  // u and w exponents (I_mu -+ mu)/2 shifted by the winding: |psi|^2 = r^{-1} w e^{-2r}.
  const auto ip = averaged_inner(h1.section, h1.section);
  CHECK(ip.terms().size() == 1);
  CHECK(ip.terms().begin()->first == ZonalProfile::Key{Rational(-1), Rational(0), Rational(1), Rational(-2)});

  CHECK(gamma_eigencheck(highest_section(2, 1, Rational(0)).section, Rational(3)).passed());
}

TEST_CASE("highest sections on the grid") {
  for (int n : {1, 2}) {
    for (const auto& mu : grid_mu) {
      for (int I = 0; I <= (n == 1 ? 4 : 2); ++I) {
        CAPTURE(n);
        CAPTURE(mu.str());
        CAPTURE(I);
        const auto h = highest_section(I, n, mu);
        CHECK(h.I_mu == Rational(I + n - 1) + mu.abs());
        CHECK(gamma_eigencheck(h.section, h.I_mu + 1).passed());
        for (int j = 1; j <= n + 1; ++j) {
          const Rational w = j == 1 ? Rational(I) + mu.abs() : (j == n + 1 ? mu : mu.abs());
          CHECK((cartan(h.section.ctx(), j)(h.section) - h.section * GaussianRational(w)).is_zero());
        }
        for (const auto& r : positive_roots(h.section.ctx())) CHECK(r.op(h.section).is_zero());
        if (n == 1) {
          // The winding search and the root climb must find the same line.
          CHECK(ratio(highest_by_climb(I, h.section.context()), h.section).has_value());
          CHECK(*h.kappa == -(I + (mu.abs() + mu).to_long()));
        }
      }
    }
  }
}

TEST_CASE("tower of the ground state") {
  const auto h = highest_section(0, 1, Rational(0));
  CHECK(raise(h.section).is_zero());
  SectionExpr s = h.section;
  for (int j = 0; j < 5; ++j) {
    CHECK_FALSE(s.is_zero());
    CHECK(gamma_eigencheck(s, Rational(1 + j)).passed());
    s = lower(s);
  }
  // lower(psi) ~ r^{-1/2} L^1_1(2r) e^{-r} = 2 (1 - r) r^{-1/2} e^{-r}
  auto ctx = h.section.context();
  const std::vector<GaussianRational> v{GaussianRational(1)};
  const auto expect = SectionExpr::term(ctx, GaussianRational(1), {0, 0, 0}, -half, 0, 0, Rational(-1), v) -
                      SectionExpr::term(ctx, GaussianRational(1), {0, 0, 0}, half, 0, 0, Rational(-1), v);
  CHECK(ratio(lower(h.section), expect).has_value());
}

TEST_CASE("expectation of A_D") {
  CHECK(ad_expectation(0, 1, half) == half);
  CHECK(ad_expectation(3, 1, Rational(0)) == Rational(0));
  CHECK(ad_expectation(2, 2, -half) == -half);
  for (int n : {1, 2}) {
    for (const auto& mu : grid_mu) {
      for (int I = 0; I <= 4; ++I) {
        CHECK(ad_expectation(I, n, mu) == mu);
        CHECK(ad_expectation_beta_chain(I, n, mu) == mu);
      }
    }
  }
}

TEST_CASE("reports") {
  for (const auto& mu : {half, Rational(-1)}) {
    CHECK(ladder_report(1, 1, mu).passed());
    CHECK(hamiltonian_report(1, 1, mu, 3).passed());
    CHECK(expectation_report(1, 1, mu).passed());
  }
  CHECK(ladder_report(0, 2, half, {2, 2}).passed());
  CHECK(expectation_report(1, 2, -half).passed());
}
