#include "wittflags/intlinalg.hpp"

#include <utility>

namespace wittflags {

namespace {

void swap_columns(BigMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void swap_rows(BigMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// column dst += f * column src
void add_column(BigMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}

// row dst += f * row src
void add_row(BigMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}

void negate_column(BigMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}

void negate_row(BigMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

// Floor division, so remainders are nonnegative for positive divisors.
BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

ColumnReduction column_reduce(const BigMatrix& a) {
  const std::size_t n = a.cols();
  ColumnReduction out{a, BigMatrix::identity(n), BigMatrix::identity(n), 0};
  auto& m = out.reduced;
  // Every column operation on (m, u) is mirrored by the inverse row
  // operation on u_inverse, keeping u * u_inverse = 1.
  auto col_swap = [&](std::size_t x, std::size_t y) {
    swap_columns(m, x, y);
    swap_columns(out.u, x, y);
    swap_rows(out.u_inverse, x, y);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    add_column(m, dst, src, f);
    add_column(out.u, dst, src, f);
    add_row(out.u_inverse, src, dst, -f);
  };
  auto col_negate = [&](std::size_t c) {
    negate_column(m, c);
    negate_column(out.u, c);
    negate_row(out.u_inverse, c);
  };

  std::size_t lead = 0;
  for (std::size_t r = 0; r < m.rows() && lead < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t c = lead; c < n; ++c)
        if (m(r, c) != 0 && (best == n || abs(m(r, c)) < abs(m(r, best)))) best = c;
      if (best == n) break;
      col_swap(lead, best);
      bool done = true;
      for (std::size_t c = lead + 1; c < n; ++c) {
        if (m(r, c) == 0) continue;
        col_add(c, lead, -floor_div(m(r, c), m(r, lead)));
        if (m(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (lead < n && m(r, lead) != 0) {
      if (m(r, lead) < 0) col_negate(lead);
      ++lead;
    }
  }
  out.rank = lead;
  return out;
}

BigMatrix kernel_basis(const BigMatrix& a) {
  const auto red = column_reduce(a);
  const std::size_t n = a.cols();
  BigMatrix out(n, n - red.rank);
  for (std::size_t c = red.rank; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) out(r, c - red.rank) = red.u(r, c);
  return out;
}

std::vector<BigInt> invariant_factors(BigMatrix a) {
  std::vector<BigInt> out;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Pivot on the entry of smallest absolute value in the trailing block.
    while (true) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (pr == rows || abs(a(r, c)) < abs(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return out;
      swap_rows(a, t, pr);
      swap_columns(a, t, pc);
      if (a(t, t) < 0) negate_row(a, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        add_row(a, r, t, -floor_div(a(r, t), a(t, t)));
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        add_column(a, c, t, -floor_div(a(t, c), a(t, t)));
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divisible = true;
      for (std::size_t r = t + 1; r < rows && divisible; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            add_row(a, t, r, BigInt(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    out.push_back(a(t, t));
  }
  return out;
}

}  // namespace wittflags
