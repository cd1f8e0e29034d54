#include "micz/ladder/ladder.hpp"

#include <chrono>
#include <sstream>

#include "micz/dynsym/twist.hpp"
#include "micz/dynsym/verify.hpp"
#include "micz/errors.hpp"
#include "micz/exact/gamma.hpp"
#include "micz/spectrum/radial.hpp"

namespace micz::ladder {

using dynsym::build_generator;
using dynsym::hat;
using dynsym::ResidualTally;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double, std::milli>(Clock::now() - t0).count(); }

const GaussianRational kI(Rational(0), Rational(1));

OperatorExpr J(const Context& ctx, int A, int B) { return hat(build_generator(ctx, A, B)); }

// e+_j over axes 1..D+1 (0-based slots); e-_j is its conjugate.
std::vector<GaussianRational> eplus(const Context& ctx, int j, bool conj) {
  std::vector<GaussianRational> e(static_cast<std::size_t>(ctx.D + 1));
  const int s = (j == 1 ? -1 : 1) * (conj ? -1 : 1);
  e[static_cast<std::size_t>(2 * j - 2)] = GaussianRational(1);
  e[static_cast<std::size_t>(2 * j - 1)] = GaussianRational(Rational(0), Rational(s));
  return e;
}

// J(v, w) = sum v_x w_y J^_{x+1, y+1}.
OperatorExpr bivector(const Context& ctx, const std::vector<GaussianRational>& v, const std::vector<GaussianRational>& w) {
  OperatorExpr op;
  for (std::size_t x = 0; x < v.size(); ++x) {
    for (std::size_t y = 0; y < w.size(); ++y) {
      if (x == y) continue;
      const auto c = v[x] * w[y];
      if (c.is_zero()) continue;
      op = op + c * J(ctx, static_cast<int>(x) + 1, static_cast<int>(y) + 1);
    }
  }
  return op;
}

// lambda with image = lambda psi, if any.
std::optional<GaussianRational> eigen_ratio(const SectionExpr& psi, const SectionExpr& image) {
  if (psi.is_zero()) return std::nullopt;
  const auto t0 = psi.terms().front();
  GaussianRational ev;
  for (const auto& t : image.terms()) {
    if (t.spin == t0.spin && t.xexp == t0.xexp && t.rexp == t0.rexp && t.uexp == t0.uexp && t.wexp == t0.wexp &&
        t.q == t0.q) {
      ev = t.coeff / t0.coeff;
      break;
    }
  }
  if (!(image - psi * ev).is_zero()) return std::nullopt;
  return ev;
}

Rational abs_mu(const Rational& mu) { return mu.abs(); }

std::vector<Rational> target_weight(int I, int n, const Rational& mu) {
  std::vector<Rational> w(static_cast<std::size_t>(n + 1), abs_mu(mu));
  w.front() = Rational(I) + abs_mu(mu);
  w.back() = mu;
  return w;
}

// Every highest-weight condition; the first violated one is written to `why`.
bool is_highest(const SectionExpr& s, int I, std::string* why) {
  const Context& ctx = s.ctx();
  const Rational Imu = spectrum::level_mu(I, ctx.n, ctx.mu);
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (s.is_zero()) return fail("zero section");
  if (!(gamma_hat(ctx)(s) - s * GaussianRational(Imu + 1)).is_zero()) return fail("Gamma eigenvalue");
  const auto w = target_weight(I, ctx.n, ctx.mu);
  for (int j = 1; j <= ctx.n + 1; ++j) {
    if (!(cartan(ctx, j)(s) - s * GaussianRational(w[static_cast<std::size_t>(j - 1)])).is_zero())
      return fail("weight H" + std::to_string(j));
  }
  for (const auto& r : positive_roots(ctx))
    if (!r.op(s).is_zero()) return fail("root " + r.name);
  return true;
}

// (x_1 + s i x_2)^k r^p u^a w^b e^{-r} e_spin.
SectionExpr kappa_ansatz(const std::shared_ptr<const Context>& ctx, int k, int s, const Rational& p, const Rational& a,
                         const Rational& b, std::size_t spin) {
  SectionExpr out(ctx);
  std::vector<GaussianRational> v(ctx->spin_dim());
  v[spin] = GaussianRational(1);
  for (int i = 0; i <= k; ++i) {
    std::vector<int> xe(static_cast<std::size_t>(ctx->D), 0);
    xe[0] = k - i;
    xe[1] = i;
    GaussianRational c(exact::binomial(k, i));
    for (int q = 0; q < i; ++q) c *= GaussianRational(Rational(0), Rational(s));
    out += SectionExpr::term(ctx, c, xe, p, a, b, Rational(-1), v);
  }
  return out;
}

SectionExpr from_profile(const std::shared_ptr<const Context>& ctx, const ZonalProfile& zp) {
  SectionExpr out(ctx);
  const std::vector<int> none(static_cast<std::size_t>(ctx->D), 0);
  std::vector<GaussianRational> v(ctx->spin_dim());
  v[0] = GaussianRational(1);
  for (const auto& [key, c] : zp.terms()) {
    const auto& [p, a, b, q] = key;
    out += SectionExpr::term(ctx, c, none, p, a, b, q, v);
  }
  return out;
}

// lambda with a = lambda b, for non-zero b.
std::optional<GaussianRational> proportional(const SectionExpr& a, const SectionExpr& b) { return eigen_ratio(b, a); }

VerificationReport make_report(const std::string& check, int n, const Rational& mu, int I) {
  VerificationReport r;
  r.check = check;
  r.n = n;
  r.mu = mu;
  r.params["I"] = std::to_string(I);
  return r;
}

}  // namespace

OperatorExpr cartan(const Context& ctx, int j) {
  const auto op = J(ctx, 2 * j - 1, 2 * j);
  return j == 1 ? GaussianRational(-1) * op : op;
}

std::vector<RootVector> positive_roots(const Context& ctx) {
  std::vector<RootVector> out;
  for (int j = 1; j <= ctx.n + 1; ++j) {
    for (int k = j + 1; k <= ctx.n + 1; ++k) {
      for (bool minus : {true, false}) {
        out.push_back({"e" + std::to_string(j) + (minus ? "-" : "+") + "e" + std::to_string(k),
                       bivector(ctx, eplus(ctx, j, false), eplus(ctx, k, minus))});
      }
    }
  }
  return out;
}

OperatorExpr gamma_hat(const Context& ctx) { return J(ctx, -1, 0); }

OperatorExpr lowering_operator(const Context& ctx) {
  return J(ctx, ctx.D + 1, -1) - kI * J(ctx, ctx.D + 1, 0);
}

OperatorExpr raising_operator(const Context& ctx) {
  return J(ctx, ctx.D + 1, -1) + kI * J(ctx, ctx.D + 1, 0);
}

OperatorExpr level_operator(const Context& ctx) {
  const auto ep = eplus(ctx, 1, false);
  OperatorExpr op;
  for (int y = 0; y < 2; ++y) {
    const auto& c = ep[static_cast<std::size_t>(y)];
    op = op + c * J(ctx, -1, y + 1) + (c * GaussianRational(Rational(0), Rational(-1))) * J(ctx, 0, y + 1);
  }
  return op;
}

SectionExpr lower(const SectionExpr& s) { return lowering_operator(s.ctx())(s); }

SectionExpr raise(const SectionExpr& s) { return raising_operator(s.ctx())(s); }

SectionExpr highest_by_climb(int I, const std::shared_ptr<const Context>& ctx) {
  std::vector<GaussianRational> v(ctx->spin_dim());
  v[0] = GaussianRational(1);
  const std::vector<int> none(static_cast<std::size_t>(ctx->D), 0);
  SectionExpr s = SectionExpr::term(ctx, GaussianRational(1), none, Rational(-1, 2), abs_mu(ctx->mu), Rational(0),
                                    Rational(-1), v);
  const auto roots = positive_roots(*ctx);
  // A weight strictly increases with each move, so this terminates on a
  // finite-dimensional module; the bound guards against a conventions bug.
  for (int step = 0;; ++step) {
    if (step > 64) throw DeterminationError("root climb did not terminate");
    bool moved = false;
    for (const auto& r : roots) {
      auto next = r.op(s);
      if (!next.is_zero()) {
        s = std::move(next);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  const auto up = level_operator(*ctx);
  for (int i = 0; i < I; ++i) {
    s = up(s);
    if (s.is_zero()) throw DeterminationError("level operator annihilated the highest section");
  }
  return s;
}

HighestSection highest_section(int I, int n, const Rational& mu) {
  auto ctx = sections::make_context(n, mu);
  HighestSection h;
  h.I = I;
  h.n = n;
  h.mu = mu;
  h.I_mu = spectrum::level_mu(I, n, mu);
  std::string why;
  if (n == 1) {
    h.method = "kappa-search";
    const Rational tp = (h.I_mu - mu) / 2;
    const Rational tm = (h.I_mu + mu) / 2;
    const Rational p = Rational(1, 2) - n;
    const int bound = (Rational(I + 1) + abs_mu(mu) * 2).floor().get_si();
    for (int k = 0; k <= bound; ++k) {
      for (int s : {1, -1}) {
        if (k == 0 && s < 0) continue;
        for (std::size_t spin = 0; spin < ctx->spin_dim(); ++spin) {
          auto cand = kappa_ansatz(ctx, k, s, p, tp - Rational(k, 2), tm - Rational(k, 2), spin);
          if (is_highest(cand, I, &why)) {
            h.section = std::move(cand);
            h.kappa = s * k;
            return h;
          }
        }
      }
    }
    throw DeterminationError("no winding number up to " + std::to_string(bound) + " gives a highest section (I=" +
                             std::to_string(I) + ", mu=" + mu.str() + ")");
  }
  h.method = "root-climb";
  h.section = highest_by_climb(I, ctx);
  if (!is_highest(h.section, I, &why))
    throw DeterminationError("root climb result fails: " + why + " (I=" + std::to_string(I) + ", n=" +
                             std::to_string(n) + ", mu=" + mu.str() + ")");
  return h;
}

ZonalProfile highest_density(int I, int n, const Rational& mu) {
  const Rational Imu = spectrum::level_mu(I, n, mu);
  return ZonalProfile::term(GaussianRational(1), Rational(-1), Imu - mu - n + 1, Imu + mu - n + 1, Rational(-2));
}

VerificationReport gamma_eigencheck(const SectionExpr& s, const Rational& expected) {
  const auto t0 = Clock::now();
  ResidualTally tally;
  tally.add(gamma_hat(s.ctx())(s) - s * GaussianRational(expected), "Gamma psi - " + expected.str() + " psi");
  VerificationReport r;
  r.check = "gamma-eigen";
  r.n = s.ctx().n;
  r.mu = s.ctx().mu;
  r.params["expected"] = expected.str();
  tally.fill(r);
  r.elapsed_ms = since(t0);
  return r;
}

Rational ad_expectation(int I, int n, const Rational& mu) {
  const auto rho = highest_density(I, n, mu);
  const auto num = zonal_integral(rho.times_xd(), n);
  const auto den = zonal_integral(rho, n);
  const auto q = ZonalValue::ratio(num, den);
  if (!q || !q->is_real()) throw MismatchError("<x_D> is not a rational multiple of the norm");
  return -q->re();
}

Rational ad_expectation_beta_chain(int I, int n, const Rational& mu) {
  const Rational Imu = spectrum::level_mu(I, n, mu);
  const Rational quotient = exact::beta_quotient(Imu + 1 + mu, Imu + 1 - mu, 1);
  return -(Imu + 1) * (quotient * 2 - 1);
}

VerificationReport expectation_report(int I, int n, const Rational& mu) {
  const auto t0 = Clock::now();
  auto r = make_report("expectation", n, mu, I);
  ResidualTally tally;
  const Rational value = ad_expectation(I, n, mu);
  const Rational chain = ad_expectation_beta_chain(I, n, mu);
  r.params["value"] = value.str();
  r.params["beta_chain"] = chain.str();
  tally.require(value == mu, "<A_D> = " + value.str() + " != mu");
  tally.require(chain == mu, "Beta chain gives " + chain.str());

  const auto h = highest_section(I, n, mu);
  const auto& psi = h.section;
  const Context& ctx = psi.ctx();
  r.params["method"] = h.method;
  if (h.kappa) r.params["kappa"] = std::to_string(*h.kappa);

  // |psi|^2 of the constructed section against the closed-form density.
  const auto ratio = proportional(from_profile(psi.context(), averaged_inner(psi, psi)),
                                  from_profile(psi.context(), highest_density(I, n, mu)));
  tally.require(ratio.has_value(), "density not proportional to the closed form");
  if (ratio) r.params["density_constant"] = ratio->str();

  tally.add(J(ctx, ctx.D, ctx.D + 1)(psi) - psi * GaussianRational(mu), "A_D psi - mu psi");
  const auto commutator = kI * dynsym::commutator(J(ctx, ctx.D, 0), gamma_hat(ctx));
  tally.add(J(ctx, ctx.D, ctx.D + 1)(psi) - commutator(psi) + sections::multiply_x(psi, ctx.D),
            "A_D - i[Gamma_D, Gamma_-1] + x_D on psi");

  // The same expectation through the inner product of the section itself.
  const auto norm = inner_product(psi, psi);
  const auto xd = inner_product(psi, sections::multiply_x(psi, ctx.D));
  const auto q = ZonalValue::ratio(xd, norm);
  tally.require(q && *q == GaussianRational(-mu), "-<psi, x_D psi>/<psi, psi> != mu");
  tally.fill(r);
  r.elapsed_ms = since(t0);
  return r;
}

VerificationReport ladder_report(int I, int n, const Rational& mu, const TowerOptions& opt) {
  const auto t0 = Clock::now();
  auto r = make_report("ladder", n, mu, I);
  ResidualTally tally;
  const auto h = highest_section(I, n, mu);
  r.params["method"] = h.method;
  if (h.kappa) r.params["kappa"] = std::to_string(*h.kappa);
  r.params["steps"] = std::to_string(opt.steps);
  const Context& ctx = h.section.ctx();
  const auto ctxp = h.section.context();

  tally.add(raise(h.section), "E_+ on the tower bottom");

  std::vector<SectionExpr> tower{h.section};
  const auto E = lowering_operator(ctx);
  const auto G = gamma_hat(ctx);
  for (int j = 0; j <= opt.steps; ++j) {
    const auto& s = tower.back();
    tally.require(!s.is_zero(), "tower member " + std::to_string(j) + " vanished");
    tally.add(G(s) - s * GaussianRational(h.I_mu + 1 + j), "Gamma eigenvalue at step " + std::to_string(j));
    if (j < opt.steps) tower.push_back(E(s));
  }

  // Angular part of the bottom: psi = r^{I+|mu|-1/2} e^{-r} Ang.
  const SectionExpr ang = sections::multiply_monomial(h.section, {}, -(Rational(I) + abs_mu(mu) - Rational(1, 2)),
                                                      Rational(0), Rational(0), Rational(1));
  std::ostringstream constants;
  for (int j = 0; j <= opt.steps; ++j) {
    const auto sol = spectrum::radial_solution(j + 1, I, n, mu);
    SectionExpr full(ctxp);
    for (const auto& [key, c] : sol.profile.terms())
      full += sections::multiply_monomial(ang, {}, key.first, Rational(0), Rational(0), key.second) *
              GaussianRational(c);
    const auto twisted = dynsym::twist(full, I + j);
    const auto k = proportional(tower[static_cast<std::size_t>(j)], twisted);
    tally.require(k.has_value(), "radial part differs from the twisted radial solution at step " + std::to_string(j));
    constants << (j ? " " : "") << (k ? k->str() : std::string("none"));
  }
  r.params["radial_constants"] = constants.str();

  // Hermiticity of Gamma^_{-1}, T^ and A^_D on the first members.
  const auto T = J(ctx, ctx.D + 1, -1);
  const auto AD = J(ctx, ctx.D, ctx.D + 1);
  const int m = std::min<int>(opt.hermitian_members, static_cast<int>(tower.size()));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const auto& pa = tower[static_cast<std::size_t>(a)];
      const auto& pb = tower[static_cast<std::size_t>(b)];
      const std::string tag = " (" + std::to_string(a) + "," + std::to_string(b) + ")";
      for (const auto& [name, op] : {std::pair{"Gamma", &G}, {"T", &T}, {"A_D", &AD}}) {
        const auto lhs = inner_product(pa, (*op)(pb));
        const auto rhs = inner_product((*op)(pa), pb);
        tally.require(lhs == rhs, name + std::string(" not hermitian") + tag);
      }
      if (a != b) {
        const auto ip = inner_product(pa, pb);
        tally.require(ip.is_zero(), "tower members not orthogonal" + tag);
      }
    }
  }
  tally.fill(r);
  r.elapsed_ms = since(t0);
  return r;
}

VerificationReport hamiltonian_report(int I, int n, const Rational& mu, int steps) {
  const auto t0 = Clock::now();
  auto r = make_report("hamiltonian", n, mu, I);
  r.params["steps"] = std::to_string(steps);
  const auto h = highest_section(I, n, mu);
  r.params["method"] = h.method;
  ResidualTally tally;
  SectionExpr s = h.section;
  const auto E = lowering_operator(s.ctx());
  const auto H = dynsym::hamiltonian(s.ctx());
  for (int j = 0; j <= steps; ++j) {
    const auto psi = dynsym::untwist(s, I + j);
    tally.add(H(psi) - psi * GaussianRational(spectrum::energy(I + j, n, mu)), "H psi - E psi at step " + std::to_string(j));
    if (j < steps) s = E(s);
  }
  tally.fill(r);
  r.elapsed_ms = since(t0);
  return r;
}

}  // namespace micz::ladder
