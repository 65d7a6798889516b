#pragma once

// Small dense exact matrices: checked 64-bit integers for Mackey data,
// GMP integers for lattice computations, GMP rationals for cube limits.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <string>
#include <vector>

#include "gwb/common.hpp"

namespace gwb::linalg {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != T(0)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;

// Overflow-checked accumulation; the generic version is for exact GMP types.
inline void mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) {
  std::int64_t prod = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc))
    throw ConsistencyError("64-bit overflow in integer matrix arithmetic");
}
template <class T>
void mul_add(T& acc, const T& a, const T& b) {
  acc += a * b;
}

inline void add_to(std::int64_t& acc, std::int64_t a) {
  if (__builtin_add_overflow(acc, a, &acc)) throw ConsistencyError("64-bit overflow in integer matrix arithmetic");
}
template <class T>
void add_to(T& acc, const T& a) {
  acc += a;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) mul_add(out(i, j), a(i, k), b(k, j));
    }
  return out;
}

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum: shapes differ");
  Matrix<T> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) add_to(out(i, j), b(i, j));
  return out;
}

template <class T>
Matrix<T>& operator+=(Matrix<T>& a, const Matrix<T>& b) {
  a = a + b;
  return a;
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      if constexpr (std::is_same_v<T, std::int64_t>)
        out += std::to_string(m(i, j));
      else
        out += m(i, j).get_str();
    }
    out += ']';
  }
  return out + "]";
}

QMatrix to_rational(const IntMatrix& m);
QMatrix to_rational(const BigMatrix& m);

/// Rows stacked vertically; all blocks must share a column count.
QMatrix vstack(std::span<const QMatrix> blocks, std::size_t cols);

std::size_t rank(const QMatrix& a);

/// Columns of the result form a basis of ker(a).
QMatrix nullspace(const QMatrix& a);

/// The unique X with a X = b when a has full column rank and the system is consistent.
std::optional<QMatrix> solve_unique(const QMatrix& a, const QMatrix& b);

/// Columns of the result form a Z-basis of { x in Z^n : a x = 0 }.
BigMatrix integer_kernel(const BigMatrix& a);

}  // namespace gwb::linalg
