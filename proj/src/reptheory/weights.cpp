#include "micz/reptheory/weights.hpp"

#include <sstream>

#include "micz/errors.hpp"
#include "micz/spectrum/radial.hpp"

namespace micz::reptheory {

namespace {

Rational half_sum(const Weight& w, int i) {
  // rho_i for i = 0..rank-1.
  const int n = w.rank();
  return w.algebra == Algebra::B ? Rational(2 * (n - i) - 1, 2) : Rational(n - i - 1);
}

bool same_class(const Rational& a, const Rational& b) { return (a - b).is_integer(); }

// Appends every chain lo_i <= x_i <= hi_i with x congruent to `base` mod 1.
void walk(const std::vector<Rational>& lo, const std::vector<Rational>& hi, const Rational& base, Algebra tag,
          std::vector<Rational>& cur, std::vector<Weight>& out) {
  const std::size_t i = cur.size();
  if (i == lo.size()) {
    out.push_back(Weight{tag, cur});
    return;
  }
  // Smallest value >= lo[i] in the class of base.
  const Rational d = base - lo[i];
  Rational start = lo[i] + d - Rational(d.floor(), mpz_class(1));
  for (Rational x = start; x <= hi[i]; x += 1) {
    cur.push_back(x);
    walk(lo, hi, base, tag, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool Weight::dominant() const {
  if (m.empty()) return algebra == Algebra::D;
  for (const auto& x : m)
    if (!x.is_half_integer() || !same_class(x, m.front())) return false;
  const int n = rank();
  for (int i = 0; i + 1 < n; ++i) {
    const Rational& next = (algebra == Algebra::D && i + 2 == n) ? m[n - 1].abs() : m[i + 1];
    if (m[i] < next) return false;
  }
  if (algebra == Algebra::B) return m.back().sign() >= 0;
  return true;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << (algebra == Algebra::B ? 'B' : 'D') << rank() << '(';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << ')';
  return os.str();
}

Weight orbital_weight(int n, const Rational& mu, int l) {
  Weight w{Algebra::B, std::vector<Rational>(n, mu.abs())};
  w.m[0] += l;
  return w;
}

Weight level_weight(int n, const Rational& mu, int I) {
  Weight w{Algebra::D, std::vector<Rational>(n + 1, mu.abs())};
  w.m[0] += I;
  w.m[n] = mu;
  return w;
}

Weight fibre_weight(int n, const Rational& mu) {
  Weight w{Algebra::D, std::vector<Rational>(n, mu.abs())};
  w.m[n - 1] = mu;
  return w;
}

Rational weyl_dim(const Weight& w) {
  if (!w.dominant()) throw NonDominantError("weyl_dim: " + w.str() + " is not dominant");
  const int n = w.rank();
  std::vector<Rational> lr(n), rho(n);
  for (int i = 0; i < n; ++i) {
    rho[i] = half_sum(w, i);
    lr[i] = w.m[i] + rho[i];
  }
  Rational num(1), den(1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= (lr[i] - lr[j]) * (lr[i] + lr[j]);
      den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
    }
    if (w.algebra == Algebra::B) {
      num *= lr[i];
      den *= rho[i];
    }
  }
  return num / den;
}

std::vector<Weight> branch_B_to_D(const Weight& w) {
  if (w.algebra != Algebra::B || !w.dominant()) throw NonDominantError("branch_B_to_D: " + w.str());
  const int n = w.rank();
  std::vector<Rational> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    hi[i] = w.m[i];
    lo[i] = i + 1 < n ? w.m[i + 1] : -w.m[i];
  }
  std::vector<Weight> out;
  std::vector<Rational> cur;
  walk(lo, hi, w.m[0], Algebra::D, cur, out);
  return out;
}

std::vector<Weight> branch_D_to_B(const Weight& w) {
  if (w.algebra != Algebra::D || w.rank() < 2 || !w.dominant()) throw NonDominantError("branch_D_to_B: " + w.str());
  const int n = w.rank() - 1;
  std::vector<Rational> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    hi[i] = w.m[i];
    lo[i] = i + 1 < n ? w.m[i + 1] : w.m[n].abs();
  }
  std::vector<Weight> out;
  std::vector<Rational> cur;
  walk(lo, hi, w.m[0], Algebra::B, cur, out);
  return out;
}

std::vector<DegeneracyRow> degeneracy_table(int n, const Rational& mu, int imax) {
  std::vector<DegeneracyRow> rows;
  Rational orbital_sum(0);
  for (int I = 0; I <= imax; ++I) {
    orbital_sum += weyl_dim(orbital_weight(n, mu, I));
    Rational dim = weyl_dim(level_weight(n, mu, I));
    if (dim != orbital_sum)
      throw MismatchError("degeneracy_table: level " + std::to_string(I) + " has Weyl dimension " + dim.str() +
                          " but orbital sum " + orbital_sum.str());
    rows.push_back({I, spectrum::energy(I, n, mu), dim});
  }
  return rows;
}

std::vector<Rational> module_highest_weight(int n, const Rational& mu) {
  std::vector<Rational> w(n + 2, mu.abs());
  w[0] = -(Rational(n) + mu.abs());
  w[n + 1] = mu;
  return w;
}

ModuleWeightCheck check_module_weight(int n, const Rational& mu) {
  ModuleWeightCheck c;
  c.weight = module_highest_weight(n, mu);
  c.bottom_eigenvalue = spectrum::level_mu(0, n, mu) + 1;
  c.first_matches = c.weight[0] == -c.bottom_eigenvalue;
  const Weight level0 = level_weight(n, mu, 0);
  c.tail_matches = std::vector<Rational>(c.weight.begin() + 1, c.weight.end()) == level0.m;
  return c;
}

}  // namespace micz::reptheory
