#include "wittflags/sweep.hpp"
#include "wittflags/twists.hpp"
#include "wittflags/weyl.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace wittflags;
using wittflags::testing::parabolic;
using wittflags::testing::q;

TEST(TwistVector, Examples) {
  const auto a2 = parabolic("A2", "2");
  EXPECT_EQ(twist_vector(a2, 1), (IntVector{-1}));
  EXPECT_EQ(projection_coeffs(a2, 1), (std::vector<Rational>{q(1, 2)}));

  const auto d4 = parabolic("D4", "1,2,3");
  EXPECT_EQ(projection_coeffs(d4, 1), (std::vector<Rational>{q(1)}));
  EXPECT_EQ(twist_vector(d4, 1), (IntVector{-2}));

  const auto b3 = parabolic("B3", "2,3");
  EXPECT_EQ(twist_vector(b3, 2), (IntVector{-1}));
}

TEST(TwistVector, UnattachedWhiteNodesGetZero) {
  const auto p = parabolic("A5", "1,2");
  // White nodes 3, 4, 5: only node 3 touches the Theta-component.
  EXPECT_EQ(twist_vector(p, 0), (IntVector{-1, 0, 0}));
  EXPECT_EQ(twist_vector(p, 1), (IntVector{-1, 0, 0}));
}

TEST(TwistMatrix, Examples) {
  const auto a2 = self_dual_twist_matrix(parabolic("A2", "2"));
  EXPECT_EQ(a2.rows, (std::vector<int>{0}));
  EXPECT_EQ(a2.columns, (std::vector<int>{1}));
  EXPECT_EQ(a2.m, IntMatrix(1, 1, -1));

  // theta° swaps the two ends of an A3 component, so only its middle node is self-dual.
  const auto a4 = self_dual_twist_matrix(parabolic("A4", "1,2,3"));
  EXPECT_EQ(a4.columns, (std::vector<int>{1}));
  EXPECT_EQ(a4.column(0), (IntVector{-1}));

  const auto none = self_dual_twist_matrix(parabolic("A3", ""));
  EXPECT_TRUE(none.columns.empty());
  EXPECT_EQ(none.rows.size(), 3u);
}

TEST(TwistVector, DualNodesShareTheirVector) {
  for (const auto& t : connected_types(7)) {
    const DynkinDiagram d({t});
    for (const auto& theta : all_thetas(t.rank)) {
      const ParabolicSubset p(d, theta);
      for (int v : p.theta()) ASSERT_EQ(twist_vector(p, v), twist_vector(p, circ_node(p, v))) << case_key(p);
    }
  }
}

TEST(TwistVector, AgreesWithOracleOnRandomParabolics) {
  wittflags::testing::Rng rng(3);
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = wittflags::testing::random_parabolic(rng, 8);
    for (int v : p.theta()) ASSERT_EQ(twist_vector(p, v), twist_vector_oracle(p, v)) << case_key(p);
  }
}

TEST(TwistVector, IsMinusSumOfProjectionCoefficients) {
  wittflags::testing::Rng rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = wittflags::testing::random_parabolic(rng, 8);
    for (int v : p.theta()) {
      const auto cv = projection_coeffs(p, v);
      const auto cd = projection_coeffs(p, circ_node(p, v));
      const auto m = twist_vector(p, v);
      for (std::size_t b = 0; b < m.size(); ++b) ASSERT_EQ(Rational(m[b]), -(cv[b] + cd[b])) << case_key(p);
    }
  }
}

TEST(TwistVector, FullThetaHasNoWhiteNodes) {
  for (const auto& t : connected_types(8)) {
    const DynkinDiagram d({t});
    std::vector<int> all(t.rank);
    for (int i = 0; i < t.rank; ++i) all[i] = i;
    const ParabolicSubset p(d, all);
    for (int v : p.theta()) EXPECT_TRUE(twist_vector(p, v).empty());
  }
}
