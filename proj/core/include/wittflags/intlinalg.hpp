#pragma once

// Exact integer linear algebra: unimodular column reduction, saturated
// kernels and Smith invariant factors, over arbitrary precision integers.

#include "wittflags/common.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace wittflags {

using BigInt = boost::multiprecision::cpp_int;
using BigMatrix = Matrix<BigInt>;

BigMatrix to_big(const IntMatrix& m);

struct ColumnReduction {
  BigMatrix reduced;       // a * u, nonzero columns first
  BigMatrix u;             // unimodular
  BigMatrix u_inverse;
  std::size_t rank;        // number of nonzero columns of `reduced`
};

/// Column echelon form a * u by unimodular column operations.
ColumnReduction column_reduce(const BigMatrix& a);

/// Columns form a basis of ker(a) that is saturated in Z^n.
BigMatrix kernel_basis(const BigMatrix& a);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<BigInt> invariant_factors(BigMatrix a);

}  // namespace wittflags
