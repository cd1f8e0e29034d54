#include "micz/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "micz/clifford/clifford.hpp"
#include "micz/dynsym/battery.hpp"
#include "micz/dynsym/verify.hpp"
#include "micz/errors.hpp"
#include "micz/ladder/ladder.hpp"
#include "micz/reptheory/weights.hpp"
#include "micz/spectrum/radial.hpp"

namespace micz::cli {

namespace {

using dynsym::Status;
using dynsym::VerificationReport;
using exact::Rational;

struct RunConfig {
  std::vector<int> n{1};
  std::vector<std::string> mu{"0"};
  bool grid = false;
  int imax = 4;
  int kmax = 5;
  std::size_t battery_size = 20;
  std::uint64_t seed = 1;
  std::string format = "json";
  unsigned jobs = 1;
  bool timing = false;
  std::vector<std::string> checks;
};

struct Point {
  int n;
  Rational mu;
};

const std::vector<std::string> kGridMu = {"0", "1/2", "-1/2", "1", "3/2"};
const std::set<Rational> kAllowedMu = {Rational(0),   Rational(1, 2),  Rational(-1, 2), Rational(1),
                                       Rational(-1),  Rational(3, 2),  Rational(-3, 2)};

std::vector<Point> points(const RunConfig& c) {
  const auto ns = c.grid ? std::vector<int>{1, 2} : c.n;
  const auto mus = c.grid ? kGridMu : c.mu;
  std::vector<Point> out;
  for (int n : ns) {
    if (n != 1 && n != 2) throw CLI::ValidationError("--n", "n must be 1 or 2");
    for (const auto& text : mus) {
      Rational mu;
      try {
        mu = Rational::parse(text);
      } catch (const std::exception&) {
        throw CLI::ValidationError("--mu", "not an exact fraction: " + text);
      }
      if (!kAllowedMu.contains(mu)) throw CLI::ValidationError("--mu", "mu must be one of 0, +-1/2, +-1, +-3/2");
      out.push_back({n, mu});
    }
  }
  return out;
}

using Task = std::function<std::vector<VerificationReport>(unsigned jobs)>;

VerificationReport error_report(const std::string& check, const Point& p, const std::exception& e) {
  VerificationReport r;
  r.check = check;
  r.n = p.n;
  r.mu = p.mu;
  r.status = Status::Fail;
  r.params["error"] = e.what();
  return r;
}

// Runs tasks on up to `jobs` threads; a lone task gets all of them.
std::vector<VerificationReport> run_tasks(const std::vector<std::pair<std::string, Point>>& labels,
                                          const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<std::vector<VerificationReport>> results(tasks.size());
  const unsigned inner = tasks.size() == 1 ? jobs : 1;
  dynsym::parallel_for(tasks.size(), tasks.size() == 1 ? 1 : jobs, [&](std::size_t i) {
    try {
      results[i] = tasks[i](inner);
    } catch (const std::exception& e) {
      results[i] = {error_report(labels[i].first, labels[i].second, e)};
    }
  });
  std::vector<VerificationReport> all;
  for (auto& r : results) all.insert(all.end(), r.begin(), r.end());
  return all;
}

int emit(const std::vector<VerificationReport>& reports, const RunConfig& c, std::ostream& out) {
  out << (c.format == "markdown" ? dynsym::render_markdown(reports, c.timing) : dynsym::render_json(reports, c.timing));
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }) ? 0 : 1;
}

VerificationReport casimir_report(const Point& p) {
  VerificationReport r;
  r.check = "casimir";
  r.n = p.n;
  r.mu = p.mu;
  const auto rep = clifford::build_rep(p.n, p.mu);
  const Rational c2 = clifford::casimir_scalar(rep);
  const Rational dim = reptheory::weyl_dim(reptheory::fibre_weight(p.n, p.mu));
  r.params["c2"] = c2.str();
  r.params["dim"] = std::to_string(rep.dim());
  r.params["weyl_dim"] = dim.str();
  const bool ok = c2 == clifford::casimir_formula(p.n, p.mu) && dim == Rational(static_cast<long>(rep.dim()));
  r.status = ok ? Status::ExactPass : Status::Fail;
  return r;
}

const std::vector<std::string> kSuites = {"lemma1", "lemma2", "forms", "commutators", "quadratic", "hamiltonian", "casimir"};

int cmd_verify(const RunConfig& c, std::ostream& out) {
  std::set<std::string> sel(c.checks.begin(), c.checks.end());
  if (sel.empty() || sel.contains("all")) sel = {kSuites.begin(), kSuites.end()};
  std::vector<std::pair<std::string, Point>> labels;
  std::vector<Task> tasks;
  for (const auto& p : points(c)) {
    auto ctx_of = [p] { return sections::make_context(p.n, p.mu); };
    const std::size_t size = c.battery_size;
    const std::uint64_t seed = c.seed;
    auto add = [&](const std::string& name, Task t) {
      labels.emplace_back(name, p);
      tasks.push_back(std::move(t));
    };
    if (sel.contains("lemma1"))
      add("lemma1", [=](unsigned j) {
        auto ctx = ctx_of();
        return std::vector{dynsym::verify_lemma1(ctx, dynsym::make_battery(ctx, size, seed), j)};
      });
    if (sel.contains("lemma2"))
      add("lemma2", [=](unsigned j) {
        auto ctx = ctx_of();
        return std::vector{dynsym::verify_lemma2(ctx, dynsym::make_battery(ctx, size, seed), j)};
      });
    if (sel.contains("forms"))
      add("forms", [=](unsigned j) {
        auto ctx = ctx_of();
        return std::vector{dynsym::verify_forms(ctx, dynsym::make_battery(ctx, size, seed), j)};
      });
    const bool cm = sel.contains("commutators");
    const bool qd = sel.contains("quadratic");
    if (cm || qd)
      add(cm ? "commutators" : "quadratic", [=](unsigned j) {
        auto ctx = ctx_of();
        return dynsym::verify_algebra(ctx, dynsym::make_battery(ctx, size, seed), cm, cm, qd, j);
      });
    if (sel.contains("hamiltonian")) {
      for (int I = 0; I <= c.imax; ++I)
        add("hamiltonian", [=, steps = c.kmax](unsigned) {
          return std::vector{ladder::hamiltonian_report(I, p.n, p.mu, steps)};
        });
    }
    if (sel.contains("casimir")) add("casimir", [=](unsigned) { return std::vector{casimir_report(p)}; });
  }
  return emit(run_tasks(labels, tasks, c.jobs), c, out);
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  int status = 0;
  for (const auto& p : points(c)) {
    std::vector<spectrum::SpectrumRow> rows;
    for (const auto& d : reptheory::degeneracy_table(p.n, p.mu, c.imax)) {
      if (d.energy != spectrum::energy(d.I, p.n, p.mu)) status = 1;
      rows.push_back({d.I, d.energy, d.dim});
    }
    out << (c.format == "markdown" ? spectrum::spectrum_markdown(p.n, p.mu, rows) : spectrum::spectrum_json(p.n, p.mu, rows));
  }
  return status;
}

int cmd_degeneracy(const RunConfig& c, std::ostream& out) {
  std::vector<VerificationReport> reports;
  for (const auto& p : points(c)) {
    VerificationReport r;
    r.check = "degeneracy";
    r.n = p.n;
    r.mu = p.mu;
    r.params["imax"] = std::to_string(c.imax);
    try {
      std::string dims;
      for (const auto& row : reptheory::degeneracy_table(p.n, p.mu, c.imax))
        dims += (dims.empty() ? "" : " ") + row.dim.str();
      r.params["dims"] = dims;
    } catch (const MismatchError& e) {
      r.status = Status::Fail;
      r.params["error"] = e.what();
    }
    reports.push_back(std::move(r));
  }
  return emit(reports, c, out);
}

int cmd_branch(const RunConfig& c, std::ostream& out) {
  int status = 0;
  std::ostringstream md;
  md << "| n | mu | I | level weight | dim | orbital weights (dim) |\n|---|---|---|---|---|---|\n";
  for (const auto& p : points(c)) {
    for (int I = 0; I <= c.imax; ++I) {
      const auto level = reptheory::level_weight(p.n, p.mu, I);
      const Rational dim = reptheory::weyl_dim(level);
      Rational total(0);
      nlohmann::json orbitals = nlohmann::json::array();
      std::string cells;
      for (const auto& w : reptheory::branch_D_to_B(level)) {
        const Rational d = reptheory::weyl_dim(w);
        total += d;
        orbitals.push_back({{"weight", w.str()}, {"dim", d.str()}});
        cells += (cells.empty() ? "" : ", ") + w.str() + " (" + d.str() + ")";
      }
      if (total != dim) status = 1;
      nlohmann::json j;
      j["table"] = "branch";
      j["n"] = p.n;
      j["mu"] = p.mu.str();
      j["I"] = I;
      j["level_weight"] = level.str();
      j["dim"] = dim.str();
      j["orbitals"] = orbitals;
      if (c.format == "json") out << j.dump() << '\n';
      md << "| " << p.n << " | " << p.mu << " | " << I << " | " << level.str() << " | " << dim << " | " << cells << " |\n";
    }
  }
  if (c.format == "markdown") out << md.str();
  return status;
}

int cmd_ladder(const RunConfig& c, std::ostream& out) {
  std::vector<std::pair<std::string, Point>> labels;
  std::vector<Task> tasks;
  for (const auto& p : points(c)) {
    for (int I = 0; I <= c.imax; ++I) {
      labels.emplace_back("ladder", p);
      ladder::TowerOptions opt;
      opt.steps = c.kmax;
      tasks.push_back([=](unsigned) { return std::vector{ladder::ladder_report(I, p.n, p.mu, opt)}; });
    }
  }
  return emit(run_tasks(labels, tasks, c.jobs), c, out);
}

int cmd_expectation(const RunConfig& c, std::ostream& out) {
  std::vector<std::pair<std::string, Point>> labels;
  std::vector<Task> tasks;
  for (const auto& p : points(c)) {
    for (int I = 0; I <= c.imax; ++I) {
      labels.emplace_back("expectation", p);
      tasks.push_back([=](unsigned) { return std::vector{ladder::expectation_report(I, p.n, p.mu)}; });
    }
  }
  return emit(run_tasks(labels, tasks, c.jobs), c, out);
}

int cmd_module(const RunConfig& c, std::ostream& out) {
  std::vector<VerificationReport> reports;
  for (const auto& p : points(c)) {
    const auto m = reptheory::check_module_weight(p.n, p.mu);
    VerificationReport r;
    r.check = "module-weight";
    r.n = p.n;
    r.mu = p.mu;
    std::string w;
    for (const auto& x : m.weight) w += (w.empty() ? "" : ",") + x.str();
    r.params["weight"] = "(" + w + ")";
    r.params["bottom_eigenvalue"] = m.bottom_eigenvalue.str();
    r.status = m.passed() ? Status::ExactPass : Status::Fail;
    reports.push_back(std::move(r));
  }
  return emit(reports, c, out);
}

void add_common(CLI::App* app, RunConfig& c, bool battery) {
  app->add_option("--n", c.n, "Half the odd dimension D = 2n+1 (1 or 2); repeatable")->delimiter(',');
  app->add_option("--mu", c.mu, "Magnetic charge as an exact fraction, e.g. -1/2; repeatable")->delimiter(',');
  app->add_flag("--grid", c.grid, "Run n in {1,2} x mu in {0, 1/2, -1/2, 1, 3/2}");
  app->add_option("--imax", c.imax, "Largest level I")->check(CLI::NonNegativeNumber);
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
  app->add_option("--jobs", c.jobs, "Worker threads (default: MICZ_JOBS or the core count)")->check(CLI::PositiveNumber);
  app->add_flag("--timing", c.timing, "Report elapsed times (output is then not byte-stable)");
  if (battery) {
    app->add_option("--battery-size", c.battery_size, "Sections per battery")->check(CLI::PositiveNumber);
    app->add_option("--seed", c.seed, "Battery seed");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the so(2, 2n+2) dynamical symmetry of the MICZ-Kepler problems"};
  app.require_subcommand(1, 1);
  RunConfig c;
  c.jobs = dynsym::default_jobs();

  auto* verify = app.add_subcommand("verify", "Identity suites on batteries of sections");
  add_common(verify, c, true);
  verify->add_option("checks", c.checks, "Suites: lemma1 lemma2 forms commutators quadratic hamiltonian casimir all")
      ->check(CLI::IsMember({"lemma1", "lemma2", "forms", "commutators", "quadratic", "hamiltonian", "casimir", "all"}));
  verify->add_option("--kmax", c.kmax, "Tower steps for the Hamiltonian suite")->check(CLI::NonNegativeNumber);

  auto* spectrum = app.add_subcommand("spectrum", "Energies and degeneracies per level");
  add_common(spectrum, c, false);
  auto* degeneracy = app.add_subcommand("degeneracy", "Two-way degeneracy check (Weyl formula against branching)");
  add_common(degeneracy, c, false);
  auto* branch = app.add_subcommand("branch", "Branching of each level to the orbital modules");
  add_common(branch, c, false);
  auto* ladder = app.add_subcommand("ladder", "Highest sections and their towers");
  add_common(ladder, c, false);
  ladder->add_option("--kmax", c.kmax, "Tower steps")->check(CLI::NonNegativeNumber);
  auto* expectation = app.add_subcommand("expectation", "<A_D> on the highest sections");
  add_common(expectation, c, false);
  auto* module = app.add_subcommand("module", "Highest weight of the bound-state module");
  add_common(module, c, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (verify->parsed()) return cmd_verify(c, out);
    if (spectrum->parsed()) return cmd_spectrum(c, out);
    if (degeneracy->parsed()) return cmd_degeneracy(c, out);
    if (branch->parsed()) return cmd_branch(c, out);
    if (ladder->parsed()) return cmd_ladder(c, out);
    if (expectation->parsed()) return cmd_expectation(c, out);
    if (module->parsed()) return cmd_module(c, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace micz::cli
