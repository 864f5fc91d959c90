#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subtan/ratfunc.hpp"

namespace subtan {

/// Dense matrix of rational functions, row-major.
class Matrix {
 public:
  Matrix(VarList vars, std::size_t rows, std::size_t cols);

  static Matrix identity(const VarList& vars, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarList& vars() const { return vars_; }

  RatFunc& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const RatFunc& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const RatFunc& f);

  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Determinant by fraction-based Gaussian elimination.
  RatFunc determinant() const;
  /// Inverse by Gauss-Jordan elimination; nullopt if singular.
  std::optional<Matrix> inverse() const;

 private:
  VarList vars_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RatFunc> data_;
};

}  // namespace subtan
