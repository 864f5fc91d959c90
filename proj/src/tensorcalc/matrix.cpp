#include "subtan/matrix.hpp"

#include <utility>

#include "subtan/error.hpp"

namespace subtan {
namespace {

// Smaller is a better pivot: constants first, then short expressions.
std::size_t pivot_cost(const RatFunc& f) {
  if (f.is_constant()) return 0;
  return f.num().terms().size() + f.den().terms().size();
}

}  // namespace

Matrix::Matrix(VarList vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), data_(rows * cols, RatFunc(vars_)) {}

Matrix Matrix::identity(const VarList& vars, std::size_t n) {
  Matrix m(vars, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc::constant(vars, 1);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(vars_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& f : data_)
    if (!f.is_zero()) return false;
  return true;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& f : r.data_) f = -f;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ChartMismatch, "matrix shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ChartMismatch, "matrix shapes differ");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::ChartMismatch, "matrix shapes do not compose");
  Matrix r(a.vars_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RatFunc& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

Matrix operator*(Matrix a, const RatFunc& f) {
  for (auto& e : a.data_) e *= f;
  return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!is_equal(a.data_[k], b.data_[k])) return false;
  return true;
}

RatFunc Matrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorKind::ChartMismatch, "determinant of non-square matrix");
  Matrix m = *this;
  const std::size_t n = rows_;
  RatFunc det = RatFunc::constant(vars_, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t r = c; r < n; ++r)
      if (!m(r, c).is_zero() && (best == n || pivot_cost(m(r, c)) < pivot_cost(m(best, c)))) best = r;
    if (best == n) return RatFunc(vars_);
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(c, j), m(best, j));
      det = -det;
    }
    const RatFunc pivot = m(c, c);
    det *= pivot;
    const RatFunc inv = pivot.inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      RatFunc factor = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!m(c, j).is_zero()) m(r, j) -= factor * m(c, j);
    }
  }
  return det;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::ChartMismatch, "inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix m = *this;
  Matrix inv = identity(vars_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t r = c; r < n; ++r)
      if (!m(r, c).is_zero() && (best == n || pivot_cost(m(r, c)) < pivot_cost(m(best, c)))) best = r;
    if (best == n) return std::nullopt;
    if (best != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(c, j), m(best, j));
        std::swap(inv(c, j), inv(best, j));
      }
    }
    const RatFunc pinv = m(c, c).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      if (!m(c, j).is_zero()) m(c, j) *= pinv;
      if (!inv(c, j).is_zero()) inv(c, j) *= pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero()) continue;
      RatFunc factor = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        if (!m(c, j).is_zero()) m(r, j) -= factor * m(c, j);
        if (!inv(c, j).is_zero()) inv(r, j) -= factor * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace subtan
