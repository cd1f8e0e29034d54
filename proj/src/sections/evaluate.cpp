#include "micz/sections/evaluate.hpp"

#include <random>

#include "micz/errors.hpp"

namespace micz::sections {

EvalPoint eval_point_from_integer_vector(const std::vector<long>& v) {
  mpz_class norm2 = 0;
  for (long c : v) norm2 += mpz_class(c) * c;
  if (!mpz_perfect_square_p(norm2.get_mpz_t()) || norm2 == 0)
    throw std::invalid_argument("eval_point_from_integer_vector: norm is not a positive integer");
  mpz_class n;
  mpz_sqrt(n.get_mpz_t(), norm2.get_mpz_t());
  EvalPoint p;
  for (long c : v) p.coords.push_back(Rational(mpz_class(c) * n, mpz_class(1)));
  p.sqrt_r = Rational(n, mpz_class(1));
  p.r = p.sqrt_r * p.sqrt_r;
  return p;
}

std::vector<EvalPoint> make_eval_points(int dim, std::size_t count, std::uint64_t seed, long bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<EvalPoint> out;
  while (out.size() < count) {
    std::vector<long> v(static_cast<std::size_t>(dim));
    long transverse = 0, norm2 = 0;
    for (int a = 0; a < dim; ++a) {
      v[static_cast<std::size_t>(a)] = dist(rng);
      norm2 += v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(a)];
      if (a + 1 < dim) transverse += v[static_cast<std::size_t>(a)] * v[static_cast<std::size_t>(a)];
    }
    if (transverse == 0) continue;
    mpz_class n2 = norm2;
    if (!mpz_perfect_square_p(n2.get_mpz_t())) continue;
    out.push_back(eval_point_from_integer_vector(v));
  }
  return out;
}

std::map<Rational, std::vector<GaussianRational>> evaluate(const SectionExpr& e, const EvalPoint& p) {
  const int D = e.dim();
  if (p.coords.size() != static_cast<std::size_t>(D)) throw std::invalid_argument("evaluate: point dimension");
  const Rational u = p.r + p.coords.back();
  const Rational w = p.r - p.coords.back();
  std::map<Rational, std::vector<GaussianRational>> out;
  for (const auto& [k, f] : e.groups()) {
    if (k.hu || k.hw) throw OracleInapplicableError("evaluate: half-integer power of u or w");
    if ((f.a > 0 && u.is_zero()) || (f.b > 0 && w.is_zero()) || (f.c > 0 && p.r.is_zero()))
      throw DivisionByZero("evaluate: negative power of a vanishing factor");
    GaussianRational num;
    for (const auto& [m, c] : f.num.terms()) {
      Rational val(1);
      for (int a = 0; a < D; ++a) {
        const int ex = mono_exp(m, a);
        if (ex) val *= p.coords[static_cast<std::size_t>(a)].pow(ex);
      }
      if (mono_has_r(m)) val *= p.r;
      GaussianRational t = c;
      num += t.scale(val);
    }
    Rational den = u.pow(f.a) * w.pow(f.b) * p.r.pow(f.c);
    if (k.hr) den /= p.sqrt_r;
    auto& slot = out[k.q];
    if (slot.empty()) slot.resize(e.ctx().spin_dim());
    slot[k.spin] += num.scale(den.reciprocal());
  }
  for (auto it = out.begin(); it != out.end();) {
    bool zero = true;
    for (const auto& z : it->second) zero = zero && z.is_zero();
    it = zero ? out.erase(it) : std::next(it);
  }
  return out;
}

EqualityResult equal(const SectionExpr& a, const SectionExpr& b, std::uint64_t seed, std::size_t points) {
  const SectionExpr diff = a - b;
  if (diff.is_zero()) return {true, false};
  if (!diff.integral_uw())
    throw OracleInapplicableError("equal: canonical forms differ and fractional u/w powers block evaluation");
  for (const auto& p : make_eval_points(a.dim(), std::max<std::size_t>(points, 12), seed))
    if (!evaluate(diff, p).empty()) return {false, false};
  return {true, true};
}

}  // namespace micz::sections
