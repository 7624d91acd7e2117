#pragma once

// Linear algebra over the field with two elements.

#include "wittflags/common.hpp"

#include <boost/dynamic_bitset.hpp>

#include <optional>
#include <string>
#include <vector>

namespace wittflags {

using BitVector = boost::dynamic_bitset<>;

BitVector bits_from(const std::vector<int>& entries);
BitVector reduce_mod2(const IntVector& v);
/// Entries in index order, e.g. "(1,0,1)".
std::string to_string(const BitVector& v);

class F2Matrix {
 public:
  F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
  static F2Matrix reduce(const IntMatrix& m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r][c]; }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r][c] = v; }
  BitVector column(std::size_t c) const;

  BitVector operator*(const BitVector& v) const;

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
};

/// A subspace stored as a reduced row echelon basis, so equal subspaces have
/// identical bases.
class F2Subspace {
 public:
  explicit F2Subspace(std::size_t ambient) : ambient_(ambient) {}
  static F2Subspace span(std::size_t ambient, const std::vector<BitVector>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BitVector>& basis() const { return basis_; }

  bool contains(const BitVector& v) const;
  bool operator==(const F2Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  std::size_t ambient_;
  std::vector<BitVector> basis_;
};

F2Subspace column_space(const F2Matrix& m);

/// Kernel basis in canonical form.
F2Subspace nullspace(const F2Matrix& m);

/// Particular solution of m x = t with free variables set to zero.
std::optional<BitVector> solve(const F2Matrix& m, const BitVector& t);

bool membership(const F2Subspace& s, const BitVector& v);

}  // namespace wittflags
