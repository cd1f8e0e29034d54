#include "micz/sections/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace micz::sections {

int mono_degree(Mono m, int dim) {
  int d = mono_has_r(m) ? 1 : 0;
  for (int a = 0; a < dim; ++a) d += mono_exp(m, a);
  return d;
}

Mono make_mono(const std::vector<int>& xexp, bool r) {
  if (xexp.size() > static_cast<std::size_t>(kMaxDim)) throw std::invalid_argument("make_mono: too many axes");
  Mono m = r ? kRBit : 0;
  for (std::size_t a = 0; a < xexp.size(); ++a) {
    if (xexp[a] < 0 || static_cast<Mono>(xexp[a]) > kFieldMask) throw std::out_of_range("make_mono: exponent");
    m += static_cast<Mono>(xexp[a]) << (kFieldBits * a);
  }
  return m;
}

Poly Poly::constant(int dim, const GaussianRational& c) { return monomial(dim, 0, c); }

Poly Poly::monomial(int dim, Mono m, const GaussianRational& c) {
  Poly p(dim);
  if (!c.is_zero()) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::sum_squares(int dim, int k) {
  Poly p(dim);
  for (int a = k - 1; a >= 0; --a) p.terms_.emplace_back(2 * mono_x(a), GaussianRational(1));
  std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  return p;
}

Poly Poly::from_terms(int dim, std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
  Poly p(dim);
  p.terms_.reserve(raw.size());
  for (auto& t : raw) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

namespace {

template <bool Subtract>
void merge_into(std::vector<Poly::Term>& dst, const std::vector<Poly::Term>& src) {
  if (src.empty()) return;
  std::vector<Poly::Term> out;
  out.reserve(dst.size() + src.size());
  auto i = dst.begin();
  auto j = src.begin();
  while (i != dst.end() || j != src.end()) {
    if (j == src.end() || (i != dst.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == dst.end() || j->first < i->first) {
      out.emplace_back(j->first, Subtract ? -j->second : j->second);
      ++j;
    } else {
      if constexpr (Subtract)
        i->second -= j->second;
      else
        i->second += j->second;
      if (!i->second.is_zero()) out.push_back(std::move(*i));
      ++i;
      ++j;
    }
  }
  dst = std::move(out);
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  if (dim_ == 0) dim_ = o.dim_;
  merge_into<false>(terms_, o.terms_);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (dim_ == 0) dim_ = o.dim_;
  merge_into<true>(terms_, o.terms_);
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  const int dim = std::max(a.dim_, b.dim_);
  if (a.is_zero() || b.is_zero()) return Poly(dim);
  std::vector<Poly::Term> raw;
  raw.reserve(a.size() * b.size() * 2);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      GaussianRational c = ca * cb;
      if (mono_has_r(ma) && mono_has_r(mb)) {
        const Mono base = (ma & ~kRBit) + (mb & ~kRBit);
        for (int k = 0; k < dim; ++k) raw.emplace_back(base + 2 * mono_x(k), c);
      } else {
        raw.emplace_back(ma + mb, std::move(c));
      }
    }
  return Poly::from_terms(dim, std::move(raw));
}

Poly Poly::times(Mono m, const GaussianRational& c) const {
  if (c.is_zero()) return Poly(dim_);
  const bool one = c == GaussianRational(1);
  if (!mono_has_r(m)) {
    Poly p(dim_);
    p.terms_.reserve(terms_.size());
    for (const auto& [mt, ct] : terms_) p.terms_.emplace_back(mt + m, one ? ct : ct * c);
    return p;
  }
  std::vector<Term> raw;
  raw.reserve(terms_.size() * (dim_ + 1));
  const Mono base = m & ~kRBit;
  for (const auto& [mt, ct] : terms_) {
    GaussianRational cc = one ? ct : ct * c;
    if (mono_has_r(mt)) {
      const Mono b = (mt & ~kRBit) + base;
      for (int k = 0; k < dim_; ++k) raw.emplace_back(b + 2 * mono_x(k), cc);
    } else {
      raw.emplace_back(mt + m, std::move(cc));
    }
  }
  return from_terms(dim_, std::move(raw));
}

Poly Poly::part(bool rpart) const {
  Poly p(dim_);
  for (const auto& [m, c] : terms_)
    if (mono_has_r(m) == rpart) p.terms_.emplace_back(m & ~kRBit, c);
  return p;
}

Poly Poly::combine(const Poly& p0, const Poly& p1) {
  Poly p(std::max(p0.dim_, p1.dim_));
  p.terms_ = p0.terms_;
  std::vector<Term> shifted;
  shifted.reserve(p1.terms_.size());
  for (const auto& [m, c] : p1.terms_) shifted.emplace_back(m | kRBit, c);
  merge_into<false>(p.terms_, shifted);
  return p;
}

Poly Poly::dx(int axis) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    const int e = mono_exp(m, axis);
    if (e == 0) continue;
    raw.emplace_back(m - mono_x(axis), c * GaussianRational(e));
  }
  return from_terms(dim_, std::move(raw));
}

std::optional<Poly> Poly::divide_sum_squares(int k) const {
  if (is_zero()) return Poly(dim_);
  // Slice by the x_1 degree: P = sum_d x_1^d C_d. With S = x_2^2 + ... + x_k^2 the
  // quotient slices obey Q_{d-2} = C_d - S Q_d from the top, and the division is
  // exact iff C_1 = S Q_1 and C_0 = S Q_0. Shifting a sorted slice by a fixed
  // monomial keeps it sorted, so every step is a merge.
  int top = 0;
  for (const auto& [m, c] : terms_) {
    if (mono_has_r(m)) throw std::logic_error("divide_sum_squares: polynomial contains r");
    top = std::max(top, mono_exp(m, 0));
  }
  if (top < 2) return std::nullopt;
  std::vector<Poly> slice(static_cast<std::size_t>(top + 1), Poly(dim_));
  for (const auto& [m, c] : terms_) {
    const int d = mono_exp(m, 0);
    slice[static_cast<std::size_t>(d)].terms_.emplace_back(m - static_cast<Mono>(d) * mono_x(0), c);
  }
  auto times_s = [&](const Poly& q) {
    Poly out(dim_);
    for (int a = 1; a < k; ++a) out += q.times(2 * mono_x(a));
    return out;
  };
  std::vector<Poly> quot(static_cast<std::size_t>(top + 1), Poly(dim_));
  for (int d = top; d >= 2; --d) {
    Poly q = std::move(slice[static_cast<std::size_t>(d)]);
    if (d + 2 <= top) q -= times_s(quot[static_cast<std::size_t>(d)]);
    quot[static_cast<std::size_t>(d - 2)] = std::move(q);
  }
  for (int d = 0; d < 2; ++d) {
    Poly rem = std::move(slice[static_cast<std::size_t>(d)]);
    if (d + 2 <= top) rem -= times_s(quot[static_cast<std::size_t>(d)]);
    if (!rem.is_zero()) return std::nullopt;
  }
  std::vector<Term> raw;
  for (int d = 0; d <= top - 2; ++d)
    for (auto& [m, c] : quot[static_cast<std::size_t>(d)].terms_) raw.emplace_back(m + static_cast<Mono>(d) * mono_x(0), std::move(c));
  return from_terms(dim_, std::move(raw));
}

Poly Poly::conj() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = t.second.conj();
  return p;
}

}  // namespace micz::sections
