#pragma once

#include <boost/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace wittflags {

using Integer = long long;
// Compare Rationals only against Rationals: boost 1.74 mixed rational/int
// operator== recurses forever under C++20 rewritten comparisons.
using Rational = boost::rational<Integer>;
using IntVector = std::vector<Integer>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (diagram specs, node lists, twists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Vector or matrix sizes that do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A broken internal invariant. Never expected on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
      }
    return out;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw DimensionError("matrix-vector product: size mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Exact inverse by Gauss-Jordan elimination. Throws InternalError if singular.
RationalMatrix invert(const RationalMatrix& m);

RationalMatrix to_rational(const IntMatrix& m);

/// Checked 64-bit arithmetic; throws InternalError on overflow.
Integer checked_add(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);

}  // namespace wittflags
