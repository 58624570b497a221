#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "lefcorr/errors.hpp"
#include "lefcorr/scalar.hpp"

namespace lefcorr {

/// Dense row-major matrix over an exact ring or field (or std::complex for
/// the floating fallback).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  template <class U, class Fn>
  static Matrix convert(const Matrix<U>& other, Fn&& fn) {
    Matrix out(other.rows(), other.cols());
    for (std::size_t r = 0; r < other.rows(); ++r) {
      for (std::size_t c = 0; c < other.cols(); ++c) out(r, c) = fn(other(r, c));
    }
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  /// Rows and columns selected by the given index lists, in order.
  Matrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    Matrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
      for (std::size_t c = 0; c < col_idx.size(); ++c) out(r, c) = (*this)(row_idx[r], col_idx[c]);
    }
    return out;
  }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& scale) {
    for (auto& entry : data_) entry *= scale;
    return *this;
  }

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, const T& scale) { return lhs *= scale; }
  friend Matrix operator*(const T& scale, Matrix rhs) { return rhs *= scale; }

  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t r = 0; r < lhs.rows_; ++r) {
      for (std::size_t k = 0; k < lhs.cols_; ++k) {
        const T& left = lhs(r, k);
        if (is_zero(left)) continue;
        for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += left * rhs(k, c);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
    return lhs.rows_ == rhs.rows_ && lhs.cols_ == rhs.cols_ && lhs.data_ == rhs.data_;
  }

 private:
  void require_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using ExactMatrix = Matrix<ExactScalar>;
using ComplexMatrix = Matrix<Complex>;

template <class T>
T trace(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeError("trace of a non-square matrix");
  T sum(0);
  for (std::size_t i = 0; i < m.rows(); ++i) sum += m(i, i);
  return sum;
}

/// Fraction-free (Bareiss) elimination; exact over Z, Q and Q(i).
template <class T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T sign(1);
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap = k + 1;
      while (swap < n && is_zero(m(swap, k))) ++swap;
      if (swap == n) return T(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        value /= prev;
        m(i, j) = std::move(value);
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Gauss-Jordan inverse over a field. Throws SingularMatrix.
template <class T>
Matrix<T> inverse(Matrix<T> m) {
  if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(col, c), m(pivot, c));
        std::swap(inv(col, c), inv(pivot, c));
      }
    }
    const T scale = T(1) / m(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      m(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m(r, col))) continue;
      const T factor = m(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= factor * m(col, c);
        inv(r, c) -= factor * inv(col, c);
      }
    }
  }
  return inv;
}

ExactMatrix to_exact(const IntMatrix& m);
/// Requires every entry to be an integer (denominator 1, zero imaginary part).
IntMatrix to_integer(const ExactMatrix& m);
ComplexMatrix to_complex(const ExactMatrix& m);

}  // namespace lefcorr
