#include "micz/spectrum/radial.hpp"

#include <sstream>

#include "json.hpp"

#include "micz/errors.hpp"
#include "micz/exact/gamma.hpp"
#include "micz/sections/section.hpp"

namespace micz::spectrum {

Rational LaguerrePoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

LaguerrePoly laguerre(int m, const Rational& alpha) {
  if (m < 0) throw std::invalid_argument("laguerre: negative degree");
  std::vector<Rational> prev, cur{Rational(1)};
  for (int j = 0; j < m; ++j) {
    // next = ((2j + 1 + alpha - x) cur - (j + alpha) prev) / (j + 1)
    std::vector<Rational> next(cur.size() + 1);
    const Rational a = Rational(2 * j + 1) + alpha;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] += a * cur[i];
      next[i + 1] -= cur[i];
    }
    const Rational b = Rational(j) + alpha;
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= b * prev[i];
    const Rational inv = Rational(1, j + 1);
    for (auto& c : next) c *= inv;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return LaguerrePoly{m, alpha, std::move(cur)};
}

RadialExpr RadialExpr::monomial(const Rational& c, const Rational& p, const Rational& q) {
  RadialExpr e;
  if (!c.is_zero()) e.terms_.emplace(Key{p, q}, c);
  return e;
}

RadialExpr RadialExpr::polynomial(const std::vector<Rational>& coeffs, const Rational& lambda, const Rational& p,
                                  const Rational& q) {
  RadialExpr e;
  Rational scale(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    e += monomial(coeffs[i] * scale, p + Rational(static_cast<long>(i)), q);
    scale *= lambda;
  }
  return e;
}

std::string RadialExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    os << (first ? "" : " + ") << '(' << c << ")*r^(" << k.first << ")";
    if (!k.second.is_zero()) os << "*exp((" << k.second << ")*r)";
    first = false;
  }
  return os.str();
}

RadialExpr RadialExpr::derivative() const {
  RadialExpr out;
  for (const auto& [k, c] : terms_) {
    out += monomial(c * k.first, k.first - 1, k.second);
    out += monomial(c * k.second, k.first, k.second);
  }
  return out;
}

RadialExpr RadialExpr::shift(const Rational& s) const {
  RadialExpr out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(Key{k.first + s, k.second}, c);
  return out;
}

RadialExpr RadialExpr::scaled(const Rational& lambda) const {
  RadialExpr out;
  for (const auto& [k, c] : terms_) {
    if (!(k.first * 2).is_integer()) throw IrrationalScaleError("RadialExpr::scaled: exponent " + k.first.str());
    const long twice = (k.first * 2).to_long();
    const bool odd = twice % 2 != 0;
    Rational factor = lambda.pow(odd ? (twice - 1) / 2 : twice / 2);
    if (odd) {
      auto root = sections::rational_sqrt(lambda);
      if (!root) throw IrrationalScaleError("RadialExpr::scaled: sqrt(" + lambda.str() + ") is irrational");
      factor *= *root;
    }
    out += monomial(c * factor, k.first, k.second * lambda);
  }
  return out;
}

RadialExpr& RadialExpr::operator+=(const RadialExpr& o) {
  for (const auto& [k, c] : o.terms_) {
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

RadialExpr& RadialExpr::operator-=(const RadialExpr& o) { return *this += o * Rational(-1); }

RadialExpr& RadialExpr::operator*=(const Rational& s) {
  if (s.is_zero()) terms_.clear();
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

RadialExpr operator*(const RadialExpr& a, const RadialExpr& b) {
  RadialExpr out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out += RadialExpr::monomial(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return out;
}

Rational RadialExpr::integrate() const {
  Rational total(0);
  for (const auto& [k, c] : terms_) {
    const auto& [p, q] = k;
    if (!p.is_integer()) throw DivergentError("RadialExpr::integrate: non-integral power r^" + p.str());
    if (p.sign() < 0 || q.sign() >= 0)
      throw DivergentError("RadialExpr::integrate: divergent term r^" + p.str() + " e^(" + q.str() + " r)");
    const long pl = p.to_long();
    total += c * exact::factorial(pl) / (-q).pow(pl + 1);
  }
  return total;
}

Rational energy(int I, int n, const Rational& mu) {
  const Rational d = Rational(I + n) + mu.abs();
  return Rational(-1, 2) / (d * d);
}

Rational level_mu(int I, int n, const Rational& mu) { return Rational(I + n - 1) + mu.abs(); }

Rational RadialSolution::energy() const { return spectrum::energy(k - 1 + l, n, mu); }

RadialSolution radial_solution(int k, int l, int n, const Rational& mu) {
  if (k < 1 || l < 0) throw std::invalid_argument("radial_solution: need k >= 1, l >= 0");
  RadialSolution s;
  s.k = k;
  s.l = l;
  s.n = n;
  s.mu = mu;
  s.l_mu = level_mu(l, n, mu);
  s.N = s.l_mu + k;
  const LaguerrePoly L = laguerre(k - 1, s.l_mu * 2 + 1);
  s.profile = RadialExpr::polynomial(L.coeffs, Rational(2) / s.N, Rational(l) + mu.abs(), -s.N.reciprocal());
  const Rational norm = (s.profile * s.profile).shift(Rational(2 * n)).integrate();
  if (norm.sign() <= 0) throw MismatchError("radial_solution: non-positive norm " + norm.str());
  s.c_squared = norm.reciprocal();
  return s;
}

RadialExpr radial_operator(const RadialExpr& f, int n, const Rational& l_mu) {
  const RadialExpr d1 = f.derivative();
  RadialExpr out = (d1.derivative() + d1.shift(-1) * Rational(2 * n)) * Rational(-1, 2);
  const Rational centrifugal = (l_mu * (l_mu + 1) - Rational(n * (n - 1))) / 2;
  out += f.shift(-2) * centrifugal;
  out -= f.shift(-1);
  return out;
}

RadialExpr radial_ode_residual(int k, int l, int n, const Rational& mu) {
  const RadialSolution s = radial_solution(k, l, n, mu);
  return radial_operator(s.profile, n, s.l_mu) - s.profile * s.energy();
}

void require_radial_ode(int k, int l, int n, const Rational& mu) {
  const RadialExpr res = radial_ode_residual(k, l, n, mu);
  if (!res.is_zero())
    throw NonZeroResidual("radial ODE residual for k=" + std::to_string(k) + " l=" + std::to_string(l) + ": " +
                          res.str());
}

Rational normalization(int k, int l, int n, const Rational& mu) { return radial_solution(k, l, n, mu).c_squared; }

RadialExpr twisted_profile(int k, int l, int n, const Rational& mu, Rational* factor_squared) {
  const RadialSolution s = radial_solution(k, l, n, mu);
  if (factor_squared) {
    // 2 (n + 1 + l + |mu|) is an integer.
    const long e2 = ((Rational(n + 1 + l) + mu.abs()) * 2).to_long();
    *factor_squared = s.c_squared * s.N.pow(e2);
  }
  const LaguerrePoly L = laguerre(k - 1, s.l_mu * 2 + 1);
  return RadialExpr::polynomial(L.coeffs, Rational(2), Rational(l) + mu.abs() - Rational(1, 2), Rational(-1));
}

Rational twisted_radial_gram(int k, int k2, int l, int n, const Rational& mu) {
  Rational f1, f2;
  const RadialExpr p1 = twisted_profile(k, l, n, mu, &f1);
  const RadialExpr p2 = twisted_profile(k2, l, n, mu, &f2);
  const Rational integral = (p1 * p2).shift(Rational(2 * n)).integrate();
  if (integral.is_zero()) return integral;
  auto f = sections::rational_sqrt(f1 * f2);
  if (!f)
    throw MismatchError("twisted_radial_gram: irrational overlap for k=" + std::to_string(k) +
                        " k'=" + std::to_string(k2));
  return *f * integral;
}

std::string spectrum_markdown(int n, const Rational& mu, const std::vector<SpectrumRow>& rows) {
  std::ostringstream os;
  os << "## spectrum n=" << n << " mu=" << mu << "\n\n| I | E_I | dim H_I |\n|---|---|---|\n";
  for (const auto& r : rows) os << "| " << r.I << " | " << r.energy << " | " << r.dim << " |\n";
  return os.str();
}

std::string spectrum_json(int n, const Rational& mu, const std::vector<SpectrumRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    nlohmann::json j;
    j["table"] = "spectrum";
    j["n"] = n;
    j["mu"] = mu.str();
    j["I"] = r.I;
    j["energy"] = r.energy.str();
    j["dim"] = r.dim.str();
    os << j.dump() << '\n';
  }
  return os.str();
}

}  // namespace micz::spectrum
