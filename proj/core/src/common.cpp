#include "wittflags/common.hpp"

#include <utility>

namespace wittflags {

RationalMatrix invert(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DimensionError("invert: matrix is not square");
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == Rational(0)) ++pivot;
    if (pivot == n) throw InternalError("invert: singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Rational scale = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= scale;
      inv(col, j) /= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == Rational(0)) continue;
      const Rational f = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("integer overflow in addition");
  return out;
}

Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("integer overflow in multiplication");
  return out;
}

}  // namespace wittflags
