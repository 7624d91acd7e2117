#include "wittflags/gf2.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace wittflags;

namespace {

F2Matrix random_f2(wittflags::testing::Rng& rng, std::size_t rows, std::size_t cols) {
  F2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, wittflags::testing::uniform(rng, 0, 1));
  return m;
}

BitVector from_mask(std::size_t n, unsigned long mask) { return BitVector(n, mask); }

// Every F2-combination of the columns, by enumeration.
std::set<BitVector> image_by_enumeration(const F2Matrix& m) {
  std::set<BitVector> out;
  for (unsigned long mask = 0; mask < (1ul << m.cols()); ++mask) out.insert(m * from_mask(m.cols(), mask));
  return out;
}

}  // namespace

TEST(Gf2, Conversions) {
  EXPECT_EQ(to_string(bits_from({1, 0, 1})), "(1,0,1)");
  EXPECT_EQ(reduce_mod2({3, -2, -5, 0}), bits_from({1, 0, 1, 0}));
  EXPECT_EQ(to_string(BitVector(0)), "()");
}

TEST(Gf2, ReduceMatrixAndProduct) {
  IntMatrix a(2, 3);
  a(0, 0) = 3;
  a(0, 2) = -1;
  a(1, 1) = 2;
  a(1, 2) = 5;
  const auto m = F2Matrix::reduce(a);
  EXPECT_EQ(m.row(0), bits_from({1, 0, 1}));
  EXPECT_EQ(m.row(1), bits_from({0, 0, 1}));
  EXPECT_EQ(m.column(2), bits_from({1, 1}));
  EXPECT_EQ(m * bits_from({1, 1, 1}), bits_from({0, 1}));
}

TEST(Gf2, SpanIsCanonical) {
  const auto a = F2Subspace::span(3, {bits_from({1, 1, 0}), bits_from({0, 1, 1})});
  const auto b = F2Subspace::span(3, {bits_from({1, 0, 1}), bits_from({1, 1, 0}), bits_from({0, 0, 0})});
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(a.contains(bits_from({0, 0, 0})));
  EXPECT_FALSE(membership(a, bits_from({1, 0, 0})));
  EXPECT_EQ(F2Subspace::span(3, {}).dim(), 0u);
}

TEST(Gf2, SolveExamples) {
  F2Matrix m(2, 2);
  m.set(0, 0);
  m.set(0, 1);
  m.set(1, 0);
  m.set(1, 1);
  EXPECT_FALSE(solve(m, bits_from({1, 0})).has_value());
  const auto x = solve(m, bits_from({1, 1}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, bits_from({1, 0}));
  EXPECT_EQ(nullspace(m), F2Subspace::span(2, {bits_from({1, 1})}));
}

TEST(Gf2, RankNullityAndImageOnRandomMatrices) {
  wittflags::testing::Rng rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t rows = wittflags::testing::uniform(rng, 1, 6);
    const std::size_t cols = wittflags::testing::uniform(rng, 1, 7);
    const auto m = random_f2(rng, rows, cols);
    const auto image = column_space(m);
    const auto kernel = nullspace(m);
    ASSERT_EQ(image.dim() + kernel.dim(), cols);
    for (const auto& k : kernel.basis()) ASSERT_TRUE((m * k).none());

    const auto reachable = image_by_enumeration(m);
    ASSERT_EQ(reachable.size(), 1ul << image.dim());
    for (unsigned long mask = 0; mask < (1ul << rows); ++mask) {
      const auto t = from_mask(rows, mask);
      const bool in_image = reachable.count(t) > 0;
      ASSERT_EQ(image.contains(t), in_image);
      const auto x = solve(m, t);
      ASSERT_EQ(x.has_value(), in_image);
      if (x) ASSERT_EQ(m * *x, t);
    }
  }
}
