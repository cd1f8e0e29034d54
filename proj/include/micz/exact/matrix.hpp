#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "micz/exact/gaussian.hpp"

namespace micz::exact {

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Column matrix from a vector.
  static Matrix column(const std::vector<GaussianRational>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix adjoint() const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_hermitian() const { return *this == adjoint(); }
  /// Returns lambda when the matrix equals lambda * Id.
  std::optional<GaussianRational> scalar_value() const;
  GaussianRational trace() const;

  std::vector<GaussianRational> col(std::size_t c) const;
  std::vector<GaussianRational> apply(const std::vector<GaussianRational>& v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussianRational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const GaussianRational& s) { return a *= s; }
  friend Matrix operator*(const GaussianRational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

/// Reduced row echelon form; `pivots` receives the pivot column of each nonzero row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& m);
/// Basis of the null space, one column per basis vector.
Matrix null_space(const Matrix& m);

}  // namespace micz::exact
