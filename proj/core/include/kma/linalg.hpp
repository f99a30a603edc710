#pragma once

#include "kma/error.hpp"
#include "kma/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <type_traits>
#include <vector>

namespace kma {

/// Dense row-major matrix; only what the exact and floating routines need.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix principal_submatrix(const std::vector<std::size_t>& idx) const {
    Matrix s(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) s(a, b) = (*this)(idx[a], idx[b]);
    return s;
  }

  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

template <class To, class From>
Matrix<To> matrix_cast(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<To, double> && std::is_same_v<From, Rational>)
        out(i, j) = to_double(m(i, j));
      else
        out(i, j) = To(m(i, j));
    }
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  Matrix<T> c(a.rows(), b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
  if (a.cols() != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  std::vector<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return out;
}

/// x^T G y for a square Gram matrix G.
template <class T>
T bilinear(const Matrix<T>& gram, const std::vector<T>& x, const std::vector<T>& y) {
  if (gram.rows() != x.size() || gram.cols() != y.size())
    throw Error(ErrorCode::DimensionMismatch, "bilinear form");
  T acc(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == T(0)) continue;
    T row(0);
    for (std::size_t j = 0; j < y.size(); ++j) row += gram(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;
  bool operator==(const Inertia&) const = default;
};

bool is_symmetric(const RationalMatrix& m);
Rational determinant(RationalMatrix m);
RationalMatrix inverse(const RationalMatrix& m);

/// Coefficients c_0..c_n of det(λI − M) = Σ c_k λ^k (c_n = 1), by Faddeev–LeVerrier.
std::vector<Rational> characteristic_polynomial(const RationalMatrix& m);

/// Exact inertia of a symmetric matrix via Descartes' rule on the characteristic polynomial
/// (exact because every root is real).
Inertia signature(const RationalMatrix& m);

}  // namespace kma
