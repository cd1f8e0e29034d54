#include "micz/dynsym/verify.hpp"

#include <chrono>

#include "micz/clifford/clifford.hpp"

namespace micz::dynsym {

namespace {

using sections::field_strength;
using sections::multiply_r;
using sections::multiply_x;
using Clock = std::chrono::steady_clock;

const GaussianRational kI = GaussianRational::i();

std::string idx(std::initializer_list<int> v) {
  std::string s = "(";
  bool first = true;
  for (int k : v) {
    s += (first ? "" : ",") + std::to_string(k);
    first = false;
  }
  return s + ")";
}

SectionExpr nabla(const SectionExpr& e, int k) { return sections::pi(e, k) * kI; }

/// Runs one per-section job for every battery section and merges the tallies in order.
template <typename Job>
ResidualTally run_battery(const Battery& battery, unsigned jobs, Job job) {
  std::vector<ResidualTally> parts(battery.sections.size());
  parallel_for(battery.sections.size(), jobs, [&](std::size_t k) { job(battery.sections[k], k, parts[k]); });
  ResidualTally total;
  for (const auto& p : parts) total.merge(p);
  return total;
}

VerificationReport start_report(const std::string& check, const Context& ctx, const Battery& battery) {
  VerificationReport r;
  r.check = check;
  r.n = ctx.n;
  r.mu = ctx.mu;
  r.seed = battery.seed;
  r.params["battery"] = battery.descriptor();
  return r;
}

double since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

std::string at(std::size_t k) { return " section " + std::to_string(k); }

/// J_ab phi for 1 <= a < b <= D, keyed by a * (D + 1) + b.
class AngularTable {
 public:
  AngularTable(const SectionExpr& phi, int D) : D_(D), table_(static_cast<std::size_t>((D + 1) * (D + 1))) {
    std::vector<SectionExpr> g(static_cast<std::size_t>(D + 1));
    for (int b = 1; b <= D; ++b) g[static_cast<std::size_t>(b)] = sections::pi(phi, b);
    for (int a = 1; a <= D; ++a)
      for (int b = a + 1; b <= D; ++b)
        table_[slot(a, b)] = multiply_x(g[static_cast<std::size_t>(b)], a) - multiply_x(g[static_cast<std::size_t>(a)], b) +
                             multiply_r(field_strength(phi, a, b), Rational(2));
  }
  const SectionExpr& operator()(int a, int b) const { return table_[slot(a, b)]; }

 private:
  std::size_t slot(int a, int b) const { return static_cast<std::size_t>(a * (D_ + 1) + b); }
  int D_;
  std::vector<SectionExpr> table_;
};

/// First and second level generator images of one section:
/// two[y][x] = J_x (J_y psi) for slots x, y of generator_pairs.
struct LevelTwo {
  std::vector<SectionExpr> one;
  std::vector<std::vector<SectionExpr>> two;
  const Context* ctx = nullptr;

  // J_AB J_CD psi with antisymmetric index handling.
  SectionExpr get(int A, int B, int C, int E) const {
    const int D = ctx->D;
    if (A == B || C == E) return SectionExpr(two.front().front().context());
    int sign = 1;
    if (A > B) {
      std::swap(A, B);
      sign = -sign;
    }
    if (C > E) {
      std::swap(C, E);
      sign = -sign;
    }
    const SectionExpr& v = two[pair_slot(C, E, D)][pair_slot(A, B, D)];
    return sign > 0 ? v : -v;
  }
  SectionExpr get1(int A, int B) const {
    const int D = ctx->D;
    if (A == B) return SectionExpr(one.front().context());
    return A < B ? one[pair_slot(A, B, D)] : -one[pair_slot(B, A, D)];
  }
};

LevelTwo level_two(const GeneratorFamily& fam, const SectionExpr& psi) {
  LevelTwo t;
  t.ctx = &fam.ctx();
  t.one = fam.apply(psi);
  t.two.reserve(t.one.size());
  for (const auto& s : t.one) t.two.push_back(fam.apply(s));
  return t;
}

void check_commutators(const LevelTwo& t, const SectionExpr&, std::size_t k, ResidualTally& tally) {
  const int D = t.ctx->D;
  const auto pairs = generator_pairs(D);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      const int A = pairs[i].A, B = pairs[i].B, A2 = pairs[j].A, B2 = pairs[j].B;
      SectionExpr res = t.two[j][i] - t.two[i][j];
      if (A == A2) res -= t.get1(B, B2) * (-kI * GaussianRational(eta(A)));
      if (B == B2) res -= t.get1(A, A2) * (-kI * GaussianRational(eta(B)));
      if (A == B2) res -= t.get1(B, A2) * (kI * GaussianRational(eta(A)));
      if (B == A2) res -= t.get1(A, B2) * (kI * GaussianRational(eta(B)));
      tally.add(res, "[J" + idx({A, B}) + ",J" + idx({A2, B2}) + "]" + at(k));
    }
}

void check_quadratic(const LevelTwo& t, const SectionExpr& psi, std::size_t k, ResidualTally& tally) {
  const Context& c = *t.ctx;
  const int D = c.D;
  const Rational a = Rational(c.n) - c.c;
  for (int B = -1; B <= D + 1; ++B)
    for (int C = B; C <= D + 1; ++C) {
      sections::Accumulator acc(D);
      for (int A = -1; A <= D + 1; ++A) {
        const GaussianRational s(A >= 1 ? 1 : -1);
        acc.add(t.get(A, B, A, C), s);
        acc.add(t.get(A, C, A, B), s);
      }
      if (B == C) acc.add(psi, GaussianRational(Rational(-2) * a * Rational(eta(B))));
      tally.add(acc.finish(psi.context()),
                "quadratic identity " + std::to_string(quadratic_identity_number(B, C, D)) + " (B,C)=" + idx({B, C}) +
                    at(k));
    }
}

}  // namespace

int quadratic_identity_number(int B, int C, int D) {
  // Index types: 0 for -1, 1 for 0, 2 for spatial, 3 for D+1.
  auto type = [D](int A) { return A == -1 ? 0 : (A == 0 ? 1 : (A <= D ? 2 : 3)); };
  int x = type(B), y = type(C);
  if (x > y) std::swap(x, y);
  // Numbering follows the usual listing: {s,s}, {s,p}, {p,p}, {s,m}, {p,m},
  // {m,m}, {s,z}, {p,z}, {m,z}, {z,z}.
  static const int table[4][4] = {{6, 9, 4, 5}, {9, 10, 7, 8}, {4, 7, 1, 2}, {5, 8, 2, 3}};
  return table[x][y];
}

VerificationReport verify_lemma1(const std::shared_ptr<const Context>& ctx, const Battery& battery, unsigned jobs) {
  const auto t0 = Clock::now();
  const Context& c = *ctx;
  const int D = c.D;
  const Rational c2 = clifford::casimir_scalar(*c.rep);
  const Rational c2n = c2 / Rational(c.n);
  ResidualTally tally = run_battery(battery, jobs, [&](const SectionExpr& psi, std::size_t k, ResidualTally& out) {
    // F_ab psi for all ordered pairs (zero on the diagonal).
    std::vector<SectionExpr> F(static_cast<std::size_t>((D + 1) * (D + 1)), SectionExpr(ctx));
    auto Fi = [&](int a, int b) -> SectionExpr& { return F[static_cast<std::size_t>(a * (D + 1) + b)]; };
    for (int a = 1; a <= D; ++a)
      for (int b = a + 1; b <= D; ++b) {
        Fi(a, b) = field_strength(psi, a, b);
        Fi(b, a) = -Fi(a, b);
      }

    // F_{mu nu} F^{mu nu} = 2 c2 / r^4.
    {
      sections::Accumulator acc(D);
      for (int a = 1; a <= D; ++a)
        for (int b = a + 1; b <= D; ++b) acc.add(field_strength(Fi(a, b), a, b), GaussianRational(2));
      acc.add(multiply_r(psi, Rational(-4)), GaussianRational(Rational(-2) * c2));
      out.add(acc.finish(ctx), "F.F" + at(k));
    }
    // x_mu A_mu = 0.
    {
      SectionExpr s(ctx);
      for (int b = 1; b <= D; ++b) s += multiply_x(sections::apply_gauge(psi, b), b);
      out.add(s, "x.A" + at(k));
    }
    // x_mu F_{mu nu} = 0.
    for (int b = 1; b <= D; ++b) {
      SectionExpr s(ctx);
      for (int a = 1; a <= D; ++a)
        if (a != b) s += multiply_x(Fi(a, b), a);
      out.add(s, "x.F nu=" + std::to_string(b) + at(k));
    }
    // Transport: [nabla_k, F_mn] = r^{-2} (x_m F_nk + x_n F_km - 2 x_k F_mn).
    std::vector<SectionExpr> grad(static_cast<std::size_t>(D + 1));
    for (int kk = 1; kk <= D; ++kk) grad[static_cast<std::size_t>(kk)] = nabla(psi, kk);
    for (int kk = 1; kk <= D; ++kk)
      for (int m = 1; m <= D; ++m)
        for (int n = m + 1; n <= D; ++n) {
          SectionExpr lhs = nabla(Fi(m, n), kk) - field_strength(grad[static_cast<std::size_t>(kk)], m, n);
          SectionExpr rhs = multiply_x(Fi(n, kk), m) + multiply_x(Fi(kk, m), n) - multiply_x(Fi(m, n), kk) * GaussianRational(2);
          out.add(lhs - multiply_r(rhs, Rational(-2)), "[nabla,F] " + idx({kk, m, n}) + at(k));
        }
    // Divergence: sum_mu [nabla_mu, F_mu nu] = 0.
    for (int n = 1; n <= D; ++n) {
      SectionExpr s(ctx);
      for (int m = 1; m <= D; ++m) {
        if (m == n) continue;
        s += nabla(Fi(m, n), m);
        s -= field_strength(grad[static_cast<std::size_t>(m)], m, n);
      }
      out.add(s, "div F nu=" + std::to_string(n) + at(k));
    }
    // r^2 [F_mn, F_ab] + i F_mb d_an - i F_nb d_am + i F_am d_bn - i F_an d_bm
    //   = i r^{-2} (x_m x_a F_bn + x_m x_b F_na - x_n x_a F_bm - x_n x_b F_ma).
    auto delta = [](int p, int q) { return p == q ? 1 : 0; };
    for (int m = 1; m <= D; ++m)
      for (int n = m + 1; n <= D; ++n)
        for (int a = 1; a <= D; ++a)
          for (int b = a + 1; b <= D; ++b) {
            SectionExpr lhs = multiply_r(field_strength(Fi(a, b), m, n) - field_strength(Fi(m, n), a, b), Rational(2));
            SectionExpr lin(ctx);
            if (delta(a, n)) lin += Fi(m, b);
            if (delta(a, m)) lin -= Fi(n, b);
            if (delta(b, n)) lin += Fi(a, m);
            if (delta(b, m)) lin -= Fi(a, n);
            lhs += lin * kI;
            const SectionExpr rhs = multiply_x(multiply_x(Fi(b, n), m), a) + multiply_x(multiply_x(Fi(n, a), m), b) -
                  multiply_x(multiply_x(Fi(b, m), n), a) - multiply_x(multiply_x(Fi(m, a), n), b);
            out.add(lhs - multiply_r(rhs, Rational(-2)) * kI, "[F,F] " + idx({m, n, a, b}) + at(k));
          }
    // r^2 F_la F_lb = (c2/n)(d_ab / r^2 - x_a x_b / r^4) + i (n-1) F_ab.
    for (int a = 1; a <= D; ++a)
      for (int b = a; b <= D; ++b) {
        sections::Accumulator acc(D);
        for (int l = 1; l <= D; ++l)
          if (l != a && l != b) acc.add(multiply_r(field_strength(Fi(l, b), l, a), Rational(2)));
        if (a == b) acc.add(multiply_r(psi, Rational(-2)), GaussianRational(-c2n));
        acc.add(multiply_r(multiply_x(multiply_x(psi, a), b), Rational(-4)), GaussianRational(c2n));
        acc.add(Fi(a, b), GaussianRational(Rational(0), Rational(-(c.n - 1))));
        out.add(acc.finish(ctx), "r^2 F F " + idx({a, b}) + at(k));
      }
  });
  VerificationReport r = start_report("lemma1", c, battery);
  r.params["c2"] = c2.str();
  tally.fill(r);
  r.elapsed_ms = since(t0);
  return r;
}

VerificationReport verify_lemma2(const std::shared_ptr<const Context>& ctx, const Battery& battery, unsigned jobs) {
  const auto t0 = Clock::now();
  const Context& c = *ctx;
  const int D = c.D;
  ResidualTally tally = run_battery(battery, jobs, [&](const SectionExpr& psi, std::size_t k, ResidualTally& out) {
    const AngularTable J(psi, D);
    auto covariance = [&](const SectionExpr& phi, auto mult, auto expected, const std::string& name) {
      // [J_ab, O] psi = J_ab (O psi) - O (J_ab psi).
      const AngularTable Jphi(phi, D);
      for (int a = 1; a <= D; ++a)
        for (int b = a + 1; b <= D; ++b)
          out.add(Jphi(a, b) - mult(J(a, b)) - expected(a, b), name + " " + idx({a, b}) + at(k));
    };
    const SectionExpr zero(ctx);
    auto none = [&](int, int) { return zero; };
    covariance(multiply_r(psi, Rational(1)), [](const SectionExpr& e) { return multiply_r(e, Rational(1)); }, none, "[J,r]");
    covariance(multiply_r(psi, Rational(-1)), [](const SectionExpr& e) { return multiply_r(e, Rational(-1)); }, none,
               "[J,1/r]");
    for (int v = 1; v <= D; ++v) {
      covariance(
          multiply_x(psi, v), [v](const SectionExpr& e) { return multiply_x(e, v); },
          [&](int a, int b) {
            SectionExpr s(ctx);
            if (b == v) s += multiply_x(psi, a);
            if (a == v) s -= multiply_x(psi, b);
            return s * -kI;
          },
          "[J,x_" + std::to_string(v) + "]");
      covariance(
          sections::pi(psi, v), [v](const SectionExpr& e) { return sections::pi(e, v); },
          [&](int a, int b) {
            SectionExpr s(ctx);
            if (b == v) s += sections::pi(psi, a);
            if (a == v) s -= sections::pi(psi, b);
            return s * -kI;
          },
          "[J,pi_" + std::to_string(v) + "]");
    }
    for (int a2 = 1; a2 <= D; ++a2)
      for (int b2 = a2 + 1; b2 <= D; ++b2)
        covariance(
            field_strength(psi, a2, b2), [a2, b2](const SectionExpr& e) { return field_strength(e, a2, b2); },
            [&](int a, int b) {
              SectionExpr s(ctx);
              auto F = [&](int p, int q) { return field_strength(psi, p, q); };
              if (a == a2) s += F(b, b2);
              if (b == b2) s += F(a, a2);
              if (a == b2) s -= F(b, a2);
              if (b == a2) s -= F(a, b2);
              return s * kI;
            },
            "[J,F" + idx({a2, b2}) + "]");

    // Dimension operator Delta = -x.nabla.
    auto dil = [&](const SectionExpr& phi) {
      SectionExpr s(ctx);
      for (int b = 1; b <= D; ++b) s -= multiply_x(nabla(phi, b), b);
      return s;
    };
    const SectionExpr dpsi = dil(psi);
    for (int v = 1; v <= D; ++v) {
      out.add(dil(multiply_x(psi, v)) - multiply_x(dpsi, v) + multiply_x(psi, v), "[-x.nabla,x_" + std::to_string(v) + "]" + at(k));
      out.add(dil(sections::pi(psi, v)) - sections::pi(dpsi, v) - sections::pi(psi, v),
              "[-x.nabla,pi_" + std::to_string(v) + "]" + at(k));
    }
    out.add(dil(multiply_r(psi, Rational(1))) - multiply_r(dpsi, Rational(1)) + multiply_r(psi, Rational(1)),
            "[-x.nabla,r]" + at(k));
    out.add(dil(multiply_r(psi, Rational(-1))) - multiply_r(dpsi, Rational(-1)) - multiply_r(psi, Rational(-1)),
            "[-x.nabla,1/r]" + at(k));
  });
  VerificationReport r = start_report("lemma2", c, battery);
  tally.fill(r);
  r.elapsed_ms = since(t0);
  return r;
}

VerificationReport verify_forms(const std::shared_ptr<const Context>& ctx, const Battery& battery, unsigned jobs) {
  const auto t0 = Clock::now();
  const Context& c = *ctx;
  const int D = c.D;
  const auto pairs = generator_pairs(D);
  std::vector<OperatorExpr> expanded, definitional, reversed;
  for (const auto& p : pairs) {
    expanded.push_back(build_generator(c, p.A, p.B, Form::Expanded));
    definitional.push_back(build_generator(c, p.A, p.B, Form::Definitional));
    reversed.push_back(build_generator(c, p.B, p.A, Form::Expanded));
  }
  const GeneratorFamily plain(ctx, false), hatted(ctx, true);
  ResidualTally tally = run_battery(battery, jobs, [&](const SectionExpr& psi, std::size_t k, ResidualTally& out) {
    const auto fam = plain.apply(psi);
    const auto fam_hat = hatted.apply(psi);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string name = "J" + idx({pairs[i].A, pairs[i].B});
      const SectionExpr ex = expanded[i].apply(psi);
      out.add(ex - fam[i], name + " expanded vs family" + at(k));
      out.add(definitional[i].apply(psi) - ex, name + " definitional vs expanded" + at(k));
      out.add(reversed[i].apply(psi) + fam[i], name + " antisymmetry" + at(k));
      if (pairs[i].A >= 1 && pairs[i].B <= D) out.add(fam_hat[i] - fam[i], name + " hat" + at(k));
    }
  });
  VerificationReport r = start_report("forms", c, battery);
  tally.fill(r);
  r.elapsed_ms = since(t0);
  return r;
}

std::vector<VerificationReport> verify_algebra(const std::shared_ptr<const Context>& ctx, const Battery& battery,
                                               bool commutators, bool hatted, bool quadratic, unsigned jobs) {
  const Context& c = *ctx;
  const GeneratorFamily plain(ctx, false), hat(ctx, true);
  const std::size_t count = battery.sections.size();
  std::vector<ResidualTally> cm(count), ch(count), qd(count);
  std::vector<double> ms_plain(count), ms_hat(count);
  parallel_for(count, jobs, [&](std::size_t k) {
    const SectionExpr& psi = battery.sections[k];
    if (commutators || quadratic) {
      const auto t0 = Clock::now();
      const LevelTwo t = level_two(plain, psi);
      if (commutators) check_commutators(t, psi, k, cm[k]);
      if (quadratic) check_quadratic(t, psi, k, qd[k]);
      ms_plain[k] = since(t0);
    }
    if (hatted) {
      const auto t0 = Clock::now();
      const LevelTwo t = level_two(hat, psi);
      check_commutators(t, psi, k, ch[k]);
      ms_hat[k] = since(t0);
    }
  });
  auto finish = [&](const std::string& name, const std::vector<ResidualTally>& parts, const std::vector<double>& ms) {
    ResidualTally total;
    double elapsed = 0;
    for (std::size_t k = 0; k < count; ++k) {
      total.merge(parts[k]);
      elapsed += ms[k];
    }
    VerificationReport r = start_report(name, c, battery);
    if (name == "quadratic") r.params["a"] = (Rational(c.n) - c.c).str();
    total.fill(r);
    r.elapsed_ms = elapsed;
    return r;
  };
  std::vector<VerificationReport> out;
  if (commutators) out.push_back(finish("commutators", cm, ms_plain));
  if (hatted) out.push_back(finish("commutators-hatted", ch, ms_hat));
  if (quadratic) out.push_back(finish("quadratic", qd, ms_plain));
  return out;
}

VerificationReport verify_commutators(const std::shared_ptr<const Context>& ctx, const Battery& battery, bool hatted,
                                      unsigned jobs) {
  return verify_algebra(ctx, battery, !hatted, hatted, false, jobs).front();
}

VerificationReport verify_quadratic(const std::shared_ptr<const Context>& ctx, const Battery& battery, unsigned jobs) {
  return verify_algebra(ctx, battery, false, false, true, jobs).front();
}

VerificationReport verify_hamiltonian(const SectionExpr& psi, const Rational& energy, int level) {
  const auto t0 = Clock::now();
  const Context& c = psi.ctx();
  ResidualTally tally;
  tally.add(hamiltonian(c).apply(psi) - psi * GaussianRational(energy), "H psi - E psi level " + std::to_string(level));
  VerificationReport r;
  r.check = "hamiltonian";
  r.n = c.n;
  r.mu = c.mu;
  r.params["level"] = std::to_string(level);
  r.params["energy"] = energy.str();
  tally.fill(r);
  r.elapsed_ms = since(t0);
  return r;
}

}  // namespace micz::dynsym
