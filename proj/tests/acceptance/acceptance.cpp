// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "micz/cli/cli.hpp"
#include "micz/clifford/clifford.hpp"
#include "micz/dynsym/battery.hpp"
#include "micz/dynsym/verify.hpp"
#include "micz/errors.hpp"
#include "micz/ladder/ladder.hpp"
#include "micz/reptheory/weights.hpp"
#include "micz/spectrum/radial.hpp"

using micz::dynsym::Status;
using micz::dynsym::VerificationReport;
using micz::exact::Rational;

namespace {

struct Point {
  int n;
  Rational mu;
};

std::vector<Point> grid() {
  std::vector<Point> g;
  for (int n : {1, 2})
    for (const auto& mu : {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1), Rational(3, 2)}) g.push_back({n, mu});
  return g;
}

constexpr std::size_t kBattery = 20;
constexpr std::uint64_t kSeed = 1;

struct Outcome {
  bool ok = true;
  std::string detail;

  void need(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
  void need(const VerificationReport& r, bool exact = true) {
    const bool pass = exact ? r.status == Status::ExactPass : r.passed();
    need(pass, r.json());
  }
};

std::string at(const Point& p) { return "(n=" + std::to_string(p.n) + ", mu=" + p.mu.str() + ")"; }

// Shared between criteria 2 and 3: one pass computes both.
std::vector<std::vector<VerificationReport>> algebra_reports;

Outcome lemma1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& p : grid()) {
    auto ctx = micz::sections::make_context(p.n, p.mu);
    o.need(micz::dynsym::verify_lemma1(ctx, micz::dynsym::make_battery(ctx, kBattery, kSeed)));
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.need(s <= 300, "runtime above 5 min");
  if (o.ok) o.detail = "10 grid points, battery " + std::to_string(kBattery) + ", " + std::to_string(static_cast<int>(s)) + " s";
  return o;
}

Outcome commutators() {
  Outcome o;
  for (const auto& p : grid()) {
    auto ctx = micz::sections::make_context(p.n, p.mu);
    algebra_reports.push_back(
        micz::dynsym::verify_algebra(ctx, micz::dynsym::make_battery(ctx, kBattery, kSeed), true, true, true));
    const auto& r = algebra_reports.back();
    o.need(r.size() == 3, "missing reports at " + at(p));
    if (r.size() == 3) {
      o.need(r[0]);
      o.need(r[1]);
    }
  }
  if (o.ok) o.detail = "plain and hatted, every generator pair, 10 grid points";
  return o;
}

Outcome quadratic() {
  Outcome o;
  const auto g = grid();
  o.need(algebra_reports.size() == g.size(), "algebra pass did not run");
  for (std::size_t i = 0; i < algebra_reports.size(); ++i) {
    const auto& r = algebra_reports[i].back();
    o.need(r);
    const Rational a = Rational(g[i].n) - g[i].mu * g[i].mu - g[i].mu.abs() * (g[i].n - 1);
    o.need(r.params.count("a") && r.params.at("a") == a.str(), "constant a at " + at(g[i]));
  }
  o.need(algebra_reports.size() > 1 && algebra_reports[0].back().params.at("a") == "1", "a(1,0) != 1");
  o.need(algebra_reports.size() > 1 && algebra_reports[1].back().params.at("a") == "3/4", "a(1,1/2) != 3/4");
  if (o.ok) o.detail = "ten identities, a = n - c (a = 1 at (1,0), 3/4 at (1,1/2))";
  return o;
}

Outcome casimir() {
  Outcome o;
  for (const auto& p : grid()) {
    const auto rep = micz::clifford::build_rep(p.n, p.mu);
    const Rational expect = Rational(p.n) * (p.mu * p.mu + p.mu.abs() * (p.n - 1));
    o.need(micz::clifford::casimir_scalar(rep) == expect, "Casimir at " + at(p));
    o.need(micz::reptheory::weyl_dim(micz::reptheory::fibre_weight(p.n, p.mu)) == Rational(static_cast<long>(rep.dim())),
           "rep dimension at " + at(p));
  }
  return o;
}

Outcome spectrum() {
  Outcome o;
  for (const auto& p : grid()) {
    for (int I = 0; I <= 8; ++I) {
      const Rational N = Rational(I + p.n) + p.mu.abs();
      o.need(micz::spectrum::energy(I, p.n, p.mu) == Rational(-1) / (N * N * 2), "energy at " + at(p));
    }
    try {
      const auto rows = micz::reptheory::degeneracy_table(p.n, p.mu, 8);
      o.need(rows.size() == 9, "degeneracy rows at " + at(p));
      if (p.n == 1) {
        // so(4) closed form (I+1)(I+1+2|mu|) for the Weyl dimension of (I+|mu|, mu)
        for (const auto& row : rows)
          o.need(row.dim == Rational(row.I + 1) * (Rational(row.I + 1) + p.mu.abs() * 2), "n=1 dims at " + at(p));
      }
    } catch (const micz::MismatchError& e) {
      o.need(false, e.what());
    }
  }
  auto dims = [](const Rational& mu) {
    std::vector<long> d;
    for (const auto& row : micz::reptheory::degeneracy_table(1, mu, 4)) d.push_back(row.dim.to_long());
    return d;
  };
  o.need(dims(Rational(0)) == std::vector<long>{1, 4, 9, 16, 25}, "n=1 mu=0 dims");
  o.need(dims(Rational(1, 2)) == std::vector<long>{2, 6, 12, 20, 30}, "n=1 mu=1/2 dims");
  return o;
}

Outcome radial() {
  Outcome o;
  for (const auto& p : grid()) {
    for (int l = 0; l <= 6; ++l) {
      for (int k = 1; k <= 8; ++k) {
        o.need(micz::spectrum::radial_ode_residual(k, l, p.n, p.mu).is_zero(),
               "ODE residual k=" + std::to_string(k) + " l=" + std::to_string(l) + " at " + at(p));
        for (int k2 = 1; k2 <= 8; ++k2)
          o.need(micz::spectrum::twisted_radial_gram(k, k2, l, p.n, p.mu) == Rational(k == k2 ? 1 : 0),
                 "Gram entry (" + std::to_string(k) + "," + std::to_string(k2) + ") l=" + std::to_string(l) + " at " + at(p));
      }
    }
  }
  if (o.ok) o.detail = "k, k' <= 8, l <= 6";
  return o;
}

Outcome hamiltonian() {
  Outcome o;
  for (const auto& p : grid())
    for (int I = 0; I <= 4; ++I) o.need(micz::ladder::hamiltonian_report(I, p.n, p.mu, 5));
  if (o.ok) o.detail = "highest sections and 5 tower steps, I <= 4; full sections for n = 1 and 2";
  return o;
}

Outcome ladder() {
  Outcome o;
  for (const auto& p : grid())
    for (int I = 0; I <= 4; ++I) o.need(micz::ladder::ladder_report(I, p.n, p.mu));
  if (o.ok) o.detail = "5 steps, bottom annihilation, radial constants reported, I <= 4";
  return o;
}

Outcome expectation() {
  Outcome o;
  for (const auto& p : grid()) {
    for (int I = 0; I <= 4; ++I) {
      o.need(micz::ladder::ad_expectation(I, p.n, p.mu) == p.mu, "<A_D> at " + at(p));
      o.need(micz::ladder::ad_expectation_beta_chain(I, p.n, p.mu) == p.mu, "Beta chain at " + at(p));
      o.need(micz::ladder::expectation_report(I, p.n, p.mu));
    }
  }
  return o;
}

Outcome module_weight() {
  Outcome o;
  for (const auto& p : grid()) {
    const auto m = micz::reptheory::check_module_weight(p.n, p.mu);
    o.need(m.passed(), "module weight at " + at(p));
    o.need(m.weight.front() == -(Rational(p.n) + p.mu.abs()), "first component at " + at(p));
    // Bottom eigenvalue measured on the constructed section.
    const auto h = micz::ladder::highest_section(0, p.n, p.mu);
    o.need(micz::ladder::gamma_eigencheck(h.section, -m.weight.front()));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs = {
      {"verify", "lemma1", "commutators", "quadratic", "--n", "1", "--mu", "1/2", "--seed", "7"},
      {"verify", "lemma2", "forms", "--n", "2", "--mu", "-1/2", "--seed", "3", "--battery-size", "20"},
      {"ladder", "--n", "1,2", "--mu", "1/2", "--imax", "1"},
      {"expectation", "--grid", "--imax", "1"},
      {"spectrum", "--grid", "--imax", "8"},
  };
  for (const auto& args : runs) {
    std::string first;
    for (const char* jobs : {"1", "2", "1"}) {
      std::ostringstream out, err;
      auto a = args;
      a.insert(a.end(), {"--jobs", jobs});
      const int rc = micz::cli::run(a, out, err);
      o.need(rc == 0, "exit status " + std::to_string(rc) + " for " + args.front());
      if (first.empty())
        first = out.str();
      else
        o.need(out.str() == first, "output differs between runs of " + args.front());
    }
    o.need(!first.empty(), "empty output for " + args.front());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"curvature identity suite (lemma1)", lemma1},
      {"commutation relations (plain and hatted)", commutators},
      {"quadratic identities", quadratic},
      {"Casimir scalar and fibre dimension", casimir},
      {"spectrum and degeneracies", spectrum},
      {"radial equation and twisted Gram matrix", radial},
      {"Hamiltonian on highest sections and towers", hamiltonian},
      {"ladder towers", ladder},
      {"expectation of A_D", expectation},
      {"module highest weight", module_weight},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ["
              << static_cast<int>(s + 0.5) << " s]" << (o.detail.empty() ? "" : "  " + o.detail) << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
