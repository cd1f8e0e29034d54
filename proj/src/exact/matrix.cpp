#include "micz/exact/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace micz::exact {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = GaussianRational(1);
  return m;
}

Matrix Matrix::column(const std::vector<GaussianRational>& v) {
  Matrix m(v.size(), 1);
  for (std::size_t k = 0; k < v.size(); ++k) m(k, 0) = v[k];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c).conj();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& z : data_)
    if (!z.is_zero()) return false;
  return true;
}

std::optional<GaussianRational> Matrix::scalar_value() const {
  if (!square()) return std::nullopt;
  if (rows_ == 0) return GaussianRational(0);
  const GaussianRational lambda = (*this)(0, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& z = (*this)(r, c);
      if (r == c ? !(z == lambda) : !z.is_zero()) return std::nullopt;
    }
  return lambda;
}

GaussianRational Matrix::trace() const {
  GaussianRational t;
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

std::vector<GaussianRational> Matrix::col(std::size_t c) const {
  std::vector<GaussianRational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<GaussianRational> Matrix::apply(const std::vector<GaussianRational>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  std::vector<GaussianRational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& z = (*this)(r, c);
      if (!z.is_zero() && !v[c].is_zero()) out[r] += z * v[c];
    }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const GaussianRational& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const auto& y = b(k, c);
        if (!y.is_zero()) m(r, c) += x * y;
      }
    }
  return m;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
  }
  os << ']';
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

Matrix rref(Matrix m, std::vector<std::size_t>* pivots) {
  if (pivots) pivots->clear();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead_row, k));
    const GaussianRational inv = m(lead_row, c).reciprocal();
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      const GaussianRational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!m(lead_row, k).is_zero()) m(r, k) -= f * m(lead_row, k);
    }
    if (pivots) pivots->push_back(c);
    ++lead_row;
  }
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Matrix null_space(const Matrix& m) {
  std::vector<std::size_t> piv;
  const Matrix r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(m.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = GaussianRational(1);
    for (std::size_t row = 0; row < piv.size(); ++row) basis(piv[row], f) = -r(row, free[f]);
  }
  return basis;
}

}  // namespace micz::exact
