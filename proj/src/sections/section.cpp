#include "micz/sections/section.hpp"

#include <mutex>
#include <sstream>

#include "micz/errors.hpp"

namespace micz::sections {

namespace {

struct PowerCache {
  std::mutex lock;
  std::map<std::pair<int, int>, Poly> u, w, r;
};

PowerCache& power_cache() {
  static PowerCache cache;
  return cache;
}

const Poly& cached_power(std::map<std::pair<int, int>, Poly>& table, int dim, int k, const Poly& base) {
  auto& cache = power_cache();
  std::lock_guard guard(cache.lock);
  auto it = table.find({dim, k});
  if (it != table.end()) return it->second;
  Poly p = Poly::constant(dim, GaussianRational(1));
  for (int j = 0; j < k; ++j) p = p * base;
  return table.emplace(std::make_pair(dim, k), std::move(p)).first->second;
}

Poly linear_u(int dim, int sign) {
  return Poly::from_terms(dim, {{kRBit, GaussianRational(1)}, {mono_x(dim - 1), GaussianRational(sign)}});
}

/// Splits 2s into a parity bit and an integer shift.
std::pair<int, long> split_half(const Rational& s) {
  if (!s.is_half_integer()) throw std::invalid_argument("exponent " + s.str() + " is not a half-integer");
  const long twice = (s * Rational(2)).to_long();
  const int h = static_cast<int>(((twice % 2) + 2) % 2);
  return {h, (twice - h) / 2};
}

/// Multiplies f by r^kr u^ku w^kw (any signs), cancelling against the denominator first.
void shift_exponents(Fraction& f, long kr, long ku, long kw, int dim) {
  auto apply = [&](int& den, long k, const Poly& (*power)(int, int)) {
    if (k < 0) {
      den += static_cast<int>(-k);
      return;
    }
    const long cancel = std::min<long>(k, den);
    den -= static_cast<int>(cancel);
    if (k > cancel) f.num = f.num * power(dim, static_cast<int>(k - cancel));
  };
  apply(f.c, kr, r_power);
  apply(f.a, ku, u_power);
  apply(f.b, kw, w_power);
}

}  // namespace

const Poly& u_power(int dim, int k) { return cached_power(power_cache().u, dim, k, linear_u(dim, 1)); }
const Poly& w_power(int dim, int k) { return cached_power(power_cache().w, dim, k, linear_u(dim, -1)); }
const Poly& r_power(int dim, int k) {
  return cached_power(power_cache().r, dim, k, Poly::monomial(dim, kRBit, GaussianRational(1)));
}

void reduce(Fraction& f, int dim) {
  if (f.num.is_zero()) {
    f.a = f.b = f.c = 0;
    return;
  }
  const int rho_axes = dim - 1;
  bool progress = true;
  while (progress) {
    progress = false;
    if (f.c > 0) {
      // r | P0 + r P1 iff sum x^2 | P0; the quotient is P1 + r P0 / sum x^2.
      if (auto q0 = f.num.part(false).divide_sum_squares(dim)) {
        f.num = Poly::combine(f.num.part(true), *q0);
        --f.c;
        progress = true;
      }
    }
    for (int which = 0; which < 2; ++which) {
      int& den = which == 0 ? f.a : f.b;
      if (den == 0) continue;
      // With P = P0 + r P1 and u = r + s x_D (s = +1 for u, -1 for w):
      // P = u (Q0 + r Q1) iff Q1 = (P0 - s x_D P1) / rho^2 exists, and then Q0 = P1 - s x_D Q1.
      const Poly p1 = f.num.part(true);
      const Poly xd_p1 = p1.times(mono_x(dim - 1));
      Poly t = f.num.part(false);
      if (which == 0)
        t -= xd_p1;
      else
        t += xd_p1;
      auto q1 = t.divide_sum_squares(rho_axes);
      if (!q1) continue;
      Poly q0 = p1;
      if (which == 0)
        q0 -= q1->times(mono_x(dim - 1));
      else
        q0 += q1->times(mono_x(dim - 1));
      f.num = Poly::combine(q0, *q1);
      --den;
      progress = true;
    }
  }
}

Fraction multiply(const Fraction& f, const Fraction& g, int dim) {
  Fraction out{f.num * g.num, f.a + g.a, f.b + g.b, f.c + g.c};
  if (out.num.dim() == 0) out.num = Poly(dim);
  return out;
}

Fraction add(const Fraction& f, const Fraction& g, int dim) {
  if (f.num.is_zero()) return g;
  if (g.num.is_zero()) return f;
  const int a = std::max(f.a, g.a), b = std::max(f.b, g.b), c = std::max(f.c, g.c);
  auto lift = [&](const Fraction& h) {
    Poly p = h.num;
    if (a > h.a) p = p * u_power(dim, a - h.a);
    if (b > h.b) p = p * w_power(dim, b - h.b);
    if (c > h.c) p = p * r_power(dim, c - h.c);
    return p;
  };
  return {lift(f) + lift(g), a, b, c};
}

bool MatrixFunction::is_zero() const {
  for (const auto& e : entries_)
    if (!e.num.is_zero()) return false;
  return true;
}

MatrixFunction MatrixFunction::scalar_times(const Fraction& f, const Matrix& m, int space_dim) {
  MatrixFunction out(m.rows(), space_dim);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      out(i, j) = Fraction{f.num * m(i, j), f.a, f.b, f.c};
    }
  return out;
}

MatrixFunction& MatrixFunction::operator+=(const MatrixFunction& o) {
  if (dim_ == 0) return *this = o;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k] = add(entries_[k], o.entries_[k], space_dim_);
    reduce(entries_[k], space_dim_);
  }
  return *this;
}

MatrixFunction& MatrixFunction::operator*=(const GaussianRational& s) {
  for (auto& e : entries_) {
    e.num *= s;
    if (e.num.is_zero()) e.a = e.b = e.c = 0;
  }
  return *this;
}

namespace {

Fraction scalar(int dim, Mono m, const GaussianRational& c, int a, int b, int cr) {
  Fraction f{Poly::monomial(dim, m, c), a, b, cr};
  reduce(f, dim);
  return f;
}

void build_tables(Context& ctx) {
  const int D = ctx.D;
  const int m = D - 1;
  const std::size_t d = ctx.rep->dim();
  auto g = [&](int a, int b) { return a == b ? Matrix(d, d) : ctx.rep->gamma_ab(a, b); };
  const Mono xD = mono_x(D - 1);

  ctx.gauge.assign(static_cast<std::size_t>(D), MatrixFunction(d, D));
  for (int b = 1; b <= m; ++b) {
    MatrixFunction A(d, D);
    for (int a = 1; a <= m; ++a) {
      if (a == b) continue;
      A += MatrixFunction::scalar_times(scalar(D, mono_x(a - 1), GaussianRational(-1), 1, 0, 1), g(a, b), D);
    }
    ctx.gauge[static_cast<std::size_t>(b - 1)] = A;
  }

  ctx.field.assign(static_cast<std::size_t>(D * D), MatrixFunction(d, D));
  auto slot = [&](int a, int b) -> MatrixFunction& { return ctx.field[static_cast<std::size_t>((a - 1) * D + (b - 1))]; };
  for (int b = 1; b <= m; ++b) {
    MatrixFunction f(d, D);
    for (int a = 1; a <= m; ++a)
      if (a != b) f += MatrixFunction::scalar_times(scalar(D, mono_x(a - 1), GaussianRational(1), 0, 0, 3), g(a, b), D);
    slot(D, b) = f;
    slot(b, D) = f * GaussianRational(-1);
  }
  const GaussianRational I = GaussianRational::i();
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      if (a == b) continue;
      MatrixFunction f = MatrixFunction::scalar_times(scalar(D, 0, GaussianRational(-2), 1, 0, 1), g(a, b), D);
      for (int c = 1; c <= m; ++c) {
        // (2r + x_D) x_c x_a / (r^3 u^2) gamma_cb - (2r + x_D) x_c x_b / (r^3 u^2) gamma_ca
        for (int which = 0; which < 2; ++which) {
          const int other = which == 0 ? a : b;
          const Mono xx = mono_x(c - 1) + mono_x(other - 1);
          Fraction coeff{Poly::from_terms(D, {{xx | kRBit, GaussianRational(2)}, {xx + xD, GaussianRational(1)}}), 2, 0, 3};
          reduce(coeff, D);
          const Matrix mat = which == 0 ? g(c, b) : g(c, a) * GaussianRational(-1);
          f += MatrixFunction::scalar_times(coeff, mat, D);
        }
        for (int dd = 1; dd <= m; ++dd) {
          const Matrix br = exact::commutator(g(dd, a), g(c, b));
          if (br.is_zero()) continue;
          f += MatrixFunction::scalar_times(scalar(D, mono_x(dd - 1) + mono_x(c - 1), I, 2, 0, 2), br, D);
        }
      }
      slot(a, b) = f;
    }
}

}  // namespace

std::shared_ptr<const Context> make_context(int n, const Rational& mu) {
  auto ctx = std::make_shared<Context>();
  ctx->n = n;
  ctx->mu = mu;
  ctx->D = 2 * n + 1;
  ctx->rep = std::make_shared<const clifford::RepAction>(clifford::build_rep(n, mu));
  ctx->c = clifford::casimir_scalar(*ctx->rep) / Rational(n);
  build_tables(*ctx);
  return ctx;
}

// ---------------------------------------------------------------------------

void Accumulator::add(const GroupKey& key, Fraction f) {
  if (f.num.is_zero()) return;
  auto& bucket = groups_[key];
  auto [it, fresh] = bucket.try_emplace(Denominator{f.a, f.b, f.c}, std::move(f.num));
  if (!fresh) it->second += f.num;
}

void Accumulator::add(const SectionExpr& e, const GaussianRational& s) {
  if (s.is_zero()) return;
  const bool one = s == GaussianRational(1);
  for (const auto& [k, f] : e.groups()) {
    if (one) {
      add(k, f);
    } else {
      Fraction g = f;
      g.num *= s;
      add(k, std::move(g));
    }
  }
}

SectionExpr Accumulator::finish(std::shared_ptr<const Context> ctx) {
  std::map<GroupKey, Fraction> out;
  for (auto& [key, bucket] : groups_) {
    Denominator top{0, 0, 0};
    for (const auto& [den, num] : bucket)
      if (!num.is_zero())
        for (std::size_t k = 0; k < 3; ++k) top[k] = std::max(top[k], den[k]);
    Poly sum(dim_);
    for (auto& [den, num] : bucket) {
      if (num.is_zero()) continue;
      Poly p = std::move(num);
      if (top[0] > den[0]) p = p * u_power(dim_, top[0] - den[0]);
      if (top[1] > den[1]) p = p * w_power(dim_, top[1] - den[1]);
      if (top[2] > den[2]) p = p * r_power(dim_, top[2] - den[2]);
      sum += p;
    }
    Fraction f{std::move(sum), top[0], top[1], top[2]};
    reduce(f, dim_);
    if (!f.num.is_zero()) out.emplace(key, std::move(f));
  }
  groups_.clear();
  return SectionExpr::from_groups(std::move(ctx), std::move(out));
}

SectionExpr SectionExpr::from_groups(std::shared_ptr<const Context> ctx, std::map<GroupKey, Fraction> groups) {
  SectionExpr e(std::move(ctx));
  e.groups_ = std::move(groups);
  return e;
}

SectionExpr SectionExpr::term(std::shared_ptr<const Context> ctx, const GaussianRational& coeff,
                              const std::vector<int>& xexp, const Rational& s, const Rational& t,
                              const Rational& tw, const Rational& q, const std::vector<GaussianRational>& v) {
  const int D = ctx->D;
  if (xexp.size() != static_cast<std::size_t>(D)) throw std::invalid_argument("SectionExpr::term: wrong number of axes");
  if (v.size() != ctx->spin_dim()) throw std::invalid_argument("SectionExpr::term: spinor dimension mismatch");
  const auto [hr, kr] = split_half(s);
  const auto [hu, ku] = split_half(t);
  const auto [hw, kw] = split_half(tw);
  Fraction base{Poly::monomial(D, make_mono(xexp, false), coeff), 0, 0, 0};
  shift_exponents(base, kr, ku, kw, D);
  reduce(base, D);
  Accumulator acc(D);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    Fraction f = base;
    f.num *= v[k];
    acc.add(GroupKey{q, k, hr, hu, hw}, std::move(f));
  }
  return acc.finish(std::move(ctx));
}

SectionExpr SectionExpr::from_terms(std::shared_ptr<const Context> ctx, const std::vector<SectionTerm>& terms) {
  Accumulator acc(ctx->D);
  for (const auto& t : terms) {
    std::vector<GaussianRational> v(ctx->spin_dim());
    v.at(t.spin) = GaussianRational(1);
    acc.add(term(ctx, t.coeff, t.xexp, t.rexp, t.uexp, t.wexp, t.q, v));
  }
  return acc.finish(std::move(ctx));
}

SectionExpr SectionExpr::constant(std::shared_ptr<const Context> ctx, const std::vector<GaussianRational>& v) {
  const int D = ctx->D;
  return term(std::move(ctx), GaussianRational(1), std::vector<int>(static_cast<std::size_t>(D), 0), Rational(0),
              Rational(0), Rational(0), Rational(0), v);
}

SectionExpr SectionExpr::basis(std::shared_ptr<const Context> ctx, std::size_t k) {
  std::vector<GaussianRational> v(ctx->spin_dim());
  v.at(k) = GaussianRational(1);
  return constant(std::move(ctx), v);
}

std::vector<SectionTerm> SectionExpr::terms() const {
  std::vector<SectionTerm> out;
  const int D = dim();
  for (const auto& [k, f] : groups_) {
    for (const auto& [m, c] : f.num.terms()) {
      SectionTerm t;
      t.coeff = c;
      t.xexp.resize(static_cast<std::size_t>(D));
      for (int a = 0; a < D; ++a) t.xexp[static_cast<std::size_t>(a)] = mono_exp(m, a);
      t.rexp = Rational(k.hr, 2) + Rational((mono_has_r(m) ? 1 : 0) - f.c);
      t.uexp = Rational(k.hu, 2) - Rational(f.a);
      t.wexp = Rational(k.hw, 2) - Rational(f.b);
      t.q = k.q;
      t.spin = k.spin;
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::size_t SectionExpr::term_count() const {
  std::size_t n = 0;
  for (const auto& [k, f] : groups_) n += f.num.size();
  return n;
}

bool SectionExpr::integral_uw() const {
  for (const auto& [k, f] : groups_)
    if (k.hu || k.hw) return false;
  return true;
}

std::string SectionExpr::str() const {
  if (groups_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& t : terms()) {
    os << t.coeff << " x^(";
    for (std::size_t a = 0; a < t.xexp.size(); ++a) os << (a ? "," : "") << t.xexp[a];
    os << ") r^" << t.rexp << " u^" << t.uexp << " w^" << t.wexp << " e^(" << t.q << "r) e" << t.spin << '\n';
  }
  return os.str();
}

SectionExpr& SectionExpr::operator+=(const SectionExpr& o) {
  if (!ctx_) ctx_ = o.ctx_;
  const int D = dim();
  for (const auto& [k, f] : o.groups_) {
    auto it = groups_.find(k);
    if (it == groups_.end()) {
      groups_.emplace(k, f);
      continue;
    }
    it->second = add(it->second, f, D);
    reduce(it->second, D);
    if (it->second.num.is_zero()) groups_.erase(it);
  }
  return *this;
}

SectionExpr& SectionExpr::operator-=(const SectionExpr& o) { return *this += -o; }

SectionExpr& SectionExpr::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    groups_.clear();
    return *this;
  }
  for (auto& [k, f] : groups_) f.num *= s;
  return *this;
}

SectionExpr SectionExpr::operator-() const {
  SectionExpr e = *this;
  for (auto& [k, f] : e.groups_) f.num = -f.num;
  return e;
}

bool operator==(const SectionExpr& a, const SectionExpr& b) {
  if (a.groups_.size() != b.groups_.size()) return false;
  for (auto i = a.groups_.begin(), j = b.groups_.begin(); i != a.groups_.end(); ++i, ++j) {
    if (!(i->first == j->first)) return false;
    const Fraction& f = i->second;
    const Fraction& g = j->second;
    if (f.a != g.a || f.b != g.b || f.c != g.c || !(f.num == g.num)) return false;
  }
  return true;
}

SectionExpr SectionExpr::conj() const {
  SectionExpr e = *this;
  for (auto& [k, f] : e.groups_) f.num = f.num.conj();
  return e;
}

// ---------------------------------------------------------------------------

SectionExpr derive(const SectionExpr& e, int alpha) {
  const int D = e.dim();
  if (alpha < 1 || alpha > D) throw std::out_of_range("derive: axis out of range");
  const int ax = alpha - 1;
  const bool along_d = alpha == D;
  const Mono xa = mono_x(ax);
  Accumulator acc(D);
  for (const auto& [k, f] : e.groups()) {
    const Rational sigma = Rational(k.hr, 2) - Rational(f.c);
    const Rational tau = Rational(k.hu, 2) - Rational(f.a);
    const Rational omega = Rational(k.hw, 2) - Rational(f.b);
    const int er = sigma.is_zero() ? 1 : 2;
    const int eu = tau.is_zero() ? 0 : 1;
    const int ew = omega.is_zero() ? 0 : 1;
    const Poly& P = f.num;
    const Poly P1 = P.part(true);

    // d(P0 + r P1) = dP0 + r dP1 + (x_a / r) P1, and the logarithmic derivatives of
    // e^{qr} r^sigma u^tau w^omega, all over the extra denominator r^er u^eu w^ew.
    Poly N = Poly::combine(P.part(false).dx(ax), P1.dx(ax)) * r_power(D, er);
    Poly lin = P1;
    if (!k.q.is_zero()) lin += P * GaussianRational(k.q);
    N += lin.times(xa) * r_power(D, er - 1);
    if (!sigma.is_zero()) N += P.times(xa) * GaussianRational(sigma);
    if (eu) N = N * u_power(D, 1);
    if (ew) N = N * w_power(D, 1);
    if (eu) {
      Poly t = P.times(xa);
      if (along_d) t += P.times_r();
      t = t * r_power(D, er - 1);
      if (ew) t = t * w_power(D, 1);
      N += t * GaussianRational(tau);
    }
    if (ew) {
      Poly t = P.times(xa);
      if (along_d) t -= P.times_r();
      t = t * r_power(D, er - 1);
      if (eu) t = t * u_power(D, 1);
      N += t * GaussianRational(omega);
    }
    acc.add(k, Fraction{std::move(N), f.a + eu, f.b + ew, f.c + er});
  }
  return acc.finish(e.context());
}

SectionExpr multiply_monomial(const SectionExpr& e, const std::vector<int>& xexp, const Rational& s,
                              const Rational& t, const Rational& tw, const Rational& q) {
  const int D = e.dim();
  std::vector<int> xe = xexp;
  xe.resize(static_cast<std::size_t>(D), 0);
  const Mono m = make_mono(xe, false);
  const auto [hr, kr] = split_half(s);
  const auto [hu, ku] = split_half(t);
  const auto [hw, kw] = split_half(tw);
  std::map<GroupKey, Fraction> out;
  for (const auto& [k, f] : e.groups()) {
    GroupKey key = k;
    key.q += q;
    long kr2 = kr, ku2 = ku, kw2 = kw;
    key.hr = k.hr + hr;
    if (key.hr == 2) key.hr = 0, ++kr2;
    key.hu = k.hu + hu;
    if (key.hu == 2) key.hu = 0, ++ku2;
    key.hw = k.hw + hw;
    if (key.hw == 2) key.hw = 0, ++kw2;
    Fraction g{m ? f.num.times(m) : f.num, f.a, f.b, f.c};
    const int before = g.a + g.b + g.c;
    shift_exponents(g, kr2, ku2, kw2, D);
    if (g.a + g.b + g.c > before) reduce(g, D);
    out.emplace(key, std::move(g));
  }
  // Distinct groups stay distinct. Multiplying a reduced fraction by x_a, r, u or w
  // keeps it reduced, since these are non-zero-divisors modulo u, w and r; only new
  // denominators can cancel.
  return SectionExpr::from_groups(e.context(), std::move(out));
}

SectionExpr multiply_x(const SectionExpr& e, int alpha) {
  std::vector<int> xe(static_cast<std::size_t>(e.dim()), 0);
  xe.at(static_cast<std::size_t>(alpha - 1)) = 1;
  return multiply_monomial(e, xe, Rational(0));
}

SectionExpr multiply_r(const SectionExpr& e, const Rational& s) { return multiply_monomial(e, {}, s); }

SectionExpr apply_matrix_function(const SectionExpr& e, const MatrixFunction& m) {
  const int D = e.dim();
  Accumulator acc(D);
  for (const auto& [k, f] : e.groups()) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
      const Fraction& g = m(i, k.spin);
      if (g.num.is_zero()) continue;
      GroupKey key = k;
      key.spin = i;
      acc.add(key, multiply(f, g, D));
    }
  }
  return acc.finish(e.context());
}

SectionExpr apply_matrix(const SectionExpr& e, const Matrix& m) {
  const int D = e.dim();
  Accumulator acc(D);
  for (const auto& [k, f] : e.groups()) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const GaussianRational& z = m(i, k.spin);
      if (z.is_zero()) continue;
      GroupKey key = k;
      key.spin = i;
      Fraction g = f;
      g.num *= z;
      acc.add(key, std::move(g));
    }
  }
  return acc.finish(e.context());
}

const MatrixFunction& gauge_potential(const Context& ctx, int b) {
  if (b < 1 || b > ctx.D) throw std::out_of_range("gauge_potential: axis out of range");
  return ctx.gauge[static_cast<std::size_t>(b - 1)];
}

const MatrixFunction& field_strength_matrix(const Context& ctx, int alpha, int beta) {
  if (alpha < 1 || alpha > ctx.D || beta < 1 || beta > ctx.D)
    throw std::out_of_range("field_strength_matrix: axis out of range");
  return ctx.field[static_cast<std::size_t>((alpha - 1) * ctx.D + (beta - 1))];
}

SectionExpr apply_gauge(const SectionExpr& e, int b) {
  if (b == e.dim()) return SectionExpr(e.context());
  return apply_matrix_function(e, gauge_potential(e.ctx(), b));
}

SectionExpr field_strength(const SectionExpr& e, int alpha, int beta) {
  return apply_matrix_function(e, field_strength_matrix(e.ctx(), alpha, beta));
}

SectionExpr pi(const SectionExpr& e, int alpha) {
  SectionExpr out = derive(e, alpha) * -GaussianRational::i();
  if (alpha != e.dim()) out += apply_gauge(e, alpha);
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  mpz_class num = x.numerator(), den = x.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

namespace {

SectionExpr scale_impl(const SectionExpr& e, const Rational& lambda, bool drop_half, bool& dropped) {
  if (lambda.sign() <= 0) throw std::invalid_argument("scale_argument: lambda must be positive");
  const int D = e.dim();
  const auto root = rational_sqrt(lambda);
  dropped = false;
  if (drop_half && !e.is_zero()) {
    bool all_odd = true;
    for (const auto& entry : e.groups())
      if ((entry.first.hr + entry.first.hu + entry.first.hw) % 2 == 0) all_odd = false;
    dropped = all_odd;
  }
  std::map<GroupKey, Fraction> out;
  for (const auto& [k, f] : e.groups()) {
    GroupKey key = k;
    key.q = k.q * lambda;
    const int twice = k.hr + k.hu + k.hw;
    const bool half = twice % 2 != 0;
    Rational extra(1);
    if (half) {
      if (!dropped) {
        if (!root) throw IrrationalScaleError("scale_argument: sqrt(" + lambda.str() + ") is irrational");
        extra = *root;
      }
    }
    // floor(twice / 2); the odd half goes into `extra`.
    const long base = (twice - (half ? 1 : 0)) / 2 - f.a - f.b - f.c;
    std::vector<Poly::Term> raw;
    raw.reserve(f.num.size());
    for (const auto& [m, c] : f.num.terms()) {
      GaussianRational cc = c;
      cc.scale(lambda.pow(base + mono_degree(m, D)) * extra);
      raw.emplace_back(m, std::move(cc));
    }
    out.emplace(key, Fraction{Poly::from_terms(D, std::move(raw)), f.a, f.b, f.c});
  }
  return SectionExpr::from_groups(e.context(), std::move(out));
}

}  // namespace

SectionExpr scale_argument(const SectionExpr& e, const Rational& lambda) {
  bool dropped = false;
  return scale_impl(e, lambda, false, dropped);
}

SectionExpr scale_argument_up_to_root(const SectionExpr& e, const Rational& lambda, bool& dropped_half) {
  return scale_impl(e, lambda, true, dropped_half);
}

}  // namespace micz::sections
