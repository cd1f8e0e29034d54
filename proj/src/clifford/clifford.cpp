#include "micz/clifford/clifford.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "micz/errors.hpp"
#include "micz/exact/gamma.hpp"

namespace micz::clifford {

namespace {

const GaussianRational kI = GaussianRational::i();

Matrix pauli(int which) {
  Matrix m(2, 2);
  switch (which) {
    case 1:
      m(0, 1) = GaussianRational(1);
      m(1, 0) = GaussianRational(1);
      break;
    case 2:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    default:
      m(0, 0) = GaussianRational(1);
      m(1, 1) = GaussianRational(-1);
  }
  return m;
}

bool is_diagonal(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (r != c && !m(r, c).is_zero()) return false;
  return true;
}

/// Exponent vectors (m_1..m_d) with sum k, in lexicographically decreasing order.
void enumerate_multisets(std::size_t d, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() + 1 == d) {
    cur.push_back(k);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int m = k; m >= 0; --m) {
    cur.push_back(m);
    enumerate_multisets(d, k - m, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Matrix GammaSystem::gamma_ab(int a, int b) const {
  return commutator(gamma(a), gamma(b)) * GaussianRational(Rational(0), Rational(1, 4));
}

GammaSystem build_gamma(int n) {
  if (n < 1) throw std::invalid_argument("build_gamma: n must be >= 1");
  std::vector<Matrix> g = {pauli(1), pauli(2)};
  for (int level = 2; level <= n; ++level) {
    const std::size_t d = g.front().rows();
    std::vector<Matrix> next;
    next.reserve(g.size() + 2);
    for (const auto& m : g) next.push_back(kron(m, pauli(3)));
    next.push_back(kron(Matrix::identity(d), pauli(1)));
    next.push_back(kron(Matrix::identity(d), pauli(2)));
    g = std::move(next);
  }
  GammaSystem gs;
  gs.n = n;
  gs.dim = g.front().rows();
  gs.gammas = std::move(g);

  // (gamma_1 ... gamma_2n)^2 = (-1)^n, so (-i)^n times the product is an involution.
  Matrix prod = Matrix::identity(gs.dim);
  for (const auto& m : gs.gammas) prod = prod * m;
  GaussianRational phase(1);
  for (int k = 0; k < n; ++k) phase *= -kI;
  gs.chirality = prod * phase;

  // Orient: the basis vector whose H-weights are all +1/2 must lie in s_+.
  for (std::size_t s = 0; s < gs.dim; ++s) {
    bool top = true;
    for (int j = 1; j <= n && top; ++j) {
      const Matrix h = gs.gamma_ab(2 * j - 1, 2 * j) * GaussianRational(-1);
      top = h(s, s) == GaussianRational(Rational(1, 2));
    }
    if (top) {
      if (gs.chirality(s, s) == GaussianRational(-1)) gs.chirality *= GaussianRational(-1);
      break;
    }
  }
  return gs;
}

ChiralProjectors chiral_split(const GammaSystem& gs) {
  const Matrix id = Matrix::identity(gs.dim);
  const GaussianRational half(Rational(1, 2));
  return {(id + gs.chirality) * half, (id - gs.chirality) * half};
}

RepAction::RepAction(int n, Rational mu, std::vector<Matrix> gamma_ab, Matrix gram,
                     std::vector<std::vector<Rational>> weights)
    : n_(n),
      mu_(std::move(mu)),
      dim_(gram.rows()),
      gamma_ab_(std::move(gamma_ab)),
      gram_(std::move(gram)),
      weights_(std::move(weights)) {}

const Matrix& RepAction::gamma_ab(int a, int b) const {
  const int m = 2 * n_;
  if (a < 1 || b < 1 || a > m || b > m) throw std::out_of_range("RepAction::gamma_ab: index");
  return gamma_ab_[static_cast<std::size_t>((a - 1) * m + (b - 1))];
}

RepAction build_rep(int n, const Rational& mu) {
  if (n < 1 || n > 2) throw UnsupportedError("build_rep: n must be 1 or 2");
  if (!mu.is_half_integer()) throw std::invalid_argument("build_rep: mu must be a half-integer");
  if (mu.abs() > Rational(3, 2)) throw UnsupportedError("build_rep: |mu| must not exceed 3/2");
  const int m = 2 * n;

  if (mu.is_zero()) {
    std::vector<Matrix> table(static_cast<std::size_t>(m * m), Matrix(1, 1));
    Matrix gram = Matrix::identity(1);
    return RepAction(n, mu, std::move(table), std::move(gram), {std::vector<Rational>(n, Rational(0))});
  }

  const GammaSystem gs = build_gamma(n);
  if (!is_diagonal(gs.chirality)) throw std::logic_error("build_rep: chirality not diagonal");
  const GaussianRational target(mu.sign() > 0 ? 1 : -1);
  std::vector<std::size_t> chiral_basis;
  for (std::size_t s = 0; s < gs.dim; ++s)
    if (gs.chirality(s, s) == target) chiral_basis.push_back(s);
  const std::size_t d = chiral_basis.size();

  // Generators and weights on the chiral half-spinor space.
  std::vector<Matrix> small(static_cast<std::size_t>(m * m), Matrix(d, d));
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      if (a == b) continue;
      const Matrix full = gs.gamma_ab(a, b);
      Matrix& blk = small[static_cast<std::size_t>((a - 1) * m + (b - 1))];
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) blk(i, j) = full(chiral_basis[i], chiral_basis[j]);
    }
  std::vector<std::vector<Rational>> spin_weights(d, std::vector<Rational>(n));
  for (std::size_t i = 0; i < d; ++i)
    for (int j = 1; j <= n; ++j)
      spin_weights[i][j - 1] = -small[static_cast<std::size_t>((2 * j - 2) * m + (2 * j - 1))](i, i).re();

  // Symmetric power as polynomials of degree k in d variables.
  const int k = static_cast<int>((mu.abs() * Rational(2)).to_long());
  std::vector<std::vector<int>> monos;
  std::vector<int> cur;
  enumerate_multisets(d, k, cur, monos);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t t = 0; t < monos.size(); ++t) index[monos[t]] = t;
  const std::size_t big = monos.size();

  auto derivation = [&](const Matrix& x) {
    Matrix out(big, big);
    for (std::size_t t = 0; t < big; ++t) {
      const auto& mono = monos[t];
      for (std::size_t i = 0; i < d; ++i) {
        if (mono[i] == 0) continue;
        for (std::size_t l = 0; l < d; ++l) {
          if (x(l, i).is_zero()) continue;
          auto target_mono = mono;
          --target_mono[i];
          ++target_mono[l];
          out(index.at(target_mono), t) += x(l, i) * GaussianRational(mono[i]);
        }
      }
    }
    return out;
  };
  std::vector<Matrix> sym(static_cast<std::size_t>(m * m), Matrix(big, big));
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      if (a != b) sym[static_cast<std::size_t>((a - 1) * m + (b - 1))] = derivation(small[static_cast<std::size_t>((a - 1) * m + (b - 1))]);

  std::vector<std::vector<Rational>> mono_weights(big, std::vector<Rational>(n));
  for (std::size_t t = 0; t < big; ++t)
    for (std::size_t i = 0; i < d; ++i)
      for (int j = 0; j < n; ++j) mono_weights[t][j] += spin_weights[i][j] * Rational(monos[t][i]);

  // Highest weight: lexicographically largest monomial weight.
  std::size_t hw = 0;
  for (std::size_t t = 1; t < big; ++t)
    if (std::lexicographical_compare(mono_weights[hw].begin(), mono_weights[hw].end(),
                                     mono_weights[t].begin(), mono_weights[t].end()))
      hw = t;
  std::vector<Rational> expected(n, mu.abs());
  expected.back() = mu;
  if (mono_weights[hw] != expected) throw std::logic_error("build_rep: unexpected highest weight");

  // Cyclic span under all generators.
  std::vector<std::vector<GaussianRational>> span;
  std::vector<GaussianRational> seed(big);
  seed[hw] = GaussianRational(1);
  span.push_back(seed);
  std::size_t frontier = 0;
  auto span_rank = [&]() {
    Matrix s(span.size(), big);
    for (std::size_t r = 0; r < span.size(); ++r)
      for (std::size_t c = 0; c < big; ++c) s(r, c) = span[r][c];
    return exact::rank(s);
  };
  while (frontier < span.size()) {
    const auto v = span[frontier++];
    for (int a = 1; a <= m; ++a)
      for (int b = a + 1; b <= m; ++b) {
        auto w = sym[static_cast<std::size_t>((a - 1) * m + (b - 1))].apply(v);
        bool nonzero = std::any_of(w.begin(), w.end(), [](const auto& z) { return !z.is_zero(); });
        if (!nonzero) continue;
        const std::size_t before = span_rank();
        span.push_back(w);
        if (span_rank() == before) span.pop_back();
      }
  }

  // Weight-homogeneous basis of the span.
  std::map<std::vector<Rational>, std::vector<std::vector<GaussianRational>>> by_weight;
  for (const auto& v : span)
    for (std::size_t t = 0; t < big; ++t) {
      if (v[t].is_zero()) continue;
      auto& bucket = by_weight[mono_weights[t]];
      std::vector<GaussianRational> comp(big);
      for (std::size_t s = 0; s < big; ++s)
        if (mono_weights[s] == mono_weights[t]) comp[s] = v[s];
      bucket.push_back(std::move(comp));
    }
  std::vector<std::vector<GaussianRational>> basis;
  std::vector<std::vector<Rational>> weights;
  for (auto it = by_weight.rbegin(); it != by_weight.rend(); ++it) {
    const auto& vecs = it->second;
    Matrix s(vecs.size(), big);
    for (std::size_t r = 0; r < vecs.size(); ++r)
      for (std::size_t c = 0; c < big; ++c) s(r, c) = vecs[r][c];
    std::vector<std::size_t> piv;
    const Matrix red = exact::rref(s, &piv);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      basis.emplace_back(big);
      for (std::size_t c = 0; c < big; ++c) basis.back()[c] = red(r, c);
      weights.push_back(it->first);
    }
  }
  const std::size_t dim = basis.size();
  if (dim != span_rank()) throw std::logic_error("build_rep: weight decomposition lost vectors");

  // Coordinates: solve B x = y through the rref of [B | Id] restricted to pivots.
  Matrix bmat(big, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < big; ++r) bmat(r, c) = basis[c][r];
  auto coordinates = [&](const std::vector<GaussianRational>& y) {
    Matrix aug(big, dim + 1);
    for (std::size_t r = 0; r < big; ++r) {
      for (std::size_t c = 0; c < dim; ++c) aug(r, c) = bmat(r, c);
      aug(r, dim) = y[r];
    }
    std::vector<std::size_t> piv;
    const Matrix red = exact::rref(aug, &piv);
    if (!piv.empty() && piv.back() == dim) throw std::logic_error("build_rep: span not invariant");
    std::vector<GaussianRational> x(dim);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = red(r, dim);
    return x;
  };

  std::vector<Matrix> table(static_cast<std::size_t>(m * m), Matrix(dim, dim));
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b) {
      if (a == b) continue;
      const Matrix& x = sym[static_cast<std::size_t>((a - 1) * m + (b - 1))];
      Matrix& out = table[static_cast<std::size_t>((a - 1) * m + (b - 1))];
      for (std::size_t c = 0; c < dim; ++c) {
        const auto coords = coordinates(x.apply(basis[c]));
        for (std::size_t r = 0; r < dim; ++r) out(r, c) = coords[r];
      }
    }

  // Induced hermitian form: monomial norms prod(m_i!) / k! in the symmetric power.
  Matrix gram(dim, dim);
  const Rational kfact = exact::factorial(k);
  std::vector<Rational> mono_norm(big);
  for (std::size_t t = 0; t < big; ++t) {
    Rational f(1);
    for (int e : monos[t]) f *= exact::factorial(e);
    mono_norm[t] = f / kfact;
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      GaussianRational s;
      for (std::size_t t = 0; t < big; ++t) {
        if (basis[i][t].is_zero() || basis[j][t].is_zero()) continue;
        s += basis[i][t].conj() * basis[j][t] * GaussianRational(mono_norm[t]);
      }
      gram(i, j) = s;
    }
  return RepAction(n, mu, std::move(table), std::move(gram), std::move(weights));
}

Rational casimir_scalar(const RepAction& rep) {
  const int m = 2 * rep.n();
  Matrix c2(rep.dim(), rep.dim());
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) c2 += rep.gamma_ab(a, b) * rep.gamma_ab(a, b);
  const auto lambda = c2.scalar_value();
  if (!lambda || !lambda->is_real())
    throw NotScalarError("casimir_scalar: Casimir is not a real scalar matrix: " + c2.str());
  return lambda->re();
}

Rational casimir_formula(int n, const Rational& mu) {
  return Rational(n) * (mu * mu + Rational(n - 1) * mu.abs());
}

Matrix closure_residual(const RepAction& rep, int a, int b, int c, int d) {
  auto g = [&](int x, int y) {
    return x == y ? Matrix(rep.dim(), rep.dim()) : rep.gamma_ab(x, y);
  };
  auto delta = [](int x, int y) { return x == y ? 1 : 0; };
  Matrix rhs(rep.dim(), rep.dim());
  if (delta(b, c)) rhs += g(a, d);
  if (delta(a, d)) rhs += g(b, c);
  if (delta(a, c)) rhs -= g(b, d);
  if (delta(b, d)) rhs -= g(a, c);
  return commutator(g(a, b), g(c, d)) - rhs * GaussianRational::i();
}

std::string convention_note(int n) {
  std::ostringstream os;
  os << "gamma matrices: Pauli pair doubled by gamma_a (x) sigma_3, Id (x) sigma_1, Id (x) sigma_2"
     << " (n=" << n << "); chirality = +-(-i)^n gamma_1...gamma_2n, sign fixed so that s_+ contains"
     << " the weight (1/2,...,1/2) of H_j = -gamma_{2j-1,2j}";
  return os.str();
}

}  // namespace micz::clifford
