#include "wittflags/gf2.hpp"

#include <utility>

namespace wittflags {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c]) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

BitVector bits_from(const std::vector<int>& entries) {
  BitVector v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v[i] = (entries[i] & 1) != 0;
  return v;
}

BitVector reduce_mod2(const IntVector& v) {
  BitVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] % 2) != 0;
  return out;
}

std::string to_string(const BitVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i] ? '1' : '0';
  }
  return out + ")";
}

F2Matrix F2Matrix::reduce(const IntMatrix& m) {
  F2Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m(r, c) % 2 != 0);
  return out;
}

BitVector F2Matrix::column(std::size_t c) const {
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = rows_[r][c];
  return out;
}

BitVector F2Matrix::operator*(const BitVector& v) const {
  if (v.size() != cols_) throw DimensionError("F2Matrix * vector: size mismatch");
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) out[r] = (rows_[r] & v).count() % 2 == 1;
  return out;
}

F2Subspace F2Subspace::span(std::size_t ambient, const std::vector<BitVector>& vectors) {
  F2Subspace out(ambient);
  out.basis_ = vectors;
  for (const auto& v : out.basis_)
    if (v.size() != ambient) throw DimensionError("F2Subspace::span: vector length mismatch");
  rref(out.basis_, ambient);
  return out;
}

bool F2Subspace::contains(const BitVector& v) const {
  if (v.size() != ambient_) throw DimensionError("membership: vector length mismatch");
  BitVector rest = v;
  for (const auto& b : basis_) {
    const std::size_t pivot = b.find_first();
    if (rest[pivot]) rest ^= b;
  }
  return rest.none();
}

F2Subspace column_space(const F2Matrix& m) {
  std::vector<BitVector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return F2Subspace::span(m.rows(), cols);
}

F2Subspace nullspace(const F2Matrix& m) {
  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const auto pivots = rref(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<BitVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    BitVector v(m.cols());
    v[f] = true;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i][f]) v[pivots[i]] = true;
    basis.push_back(v);
  }
  return F2Subspace::span(m.cols(), basis);
}

std::optional<BitVector> solve(const F2Matrix& m, const BitVector& t) {
  if (t.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
  // Augmented rows [m | t].
  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BitVector row = m.row(r);
    row.push_back(t[r]);
    rows.push_back(row);
  }
  const auto pivots = rref(rows, m.cols() + 1);
  BitVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;
    x[pivots[i]] = rows[i][m.cols()];
  }
  return x;
}

bool membership(const F2Subspace& s, const BitVector& v) { return s.contains(v); }

}  // namespace wittflags
