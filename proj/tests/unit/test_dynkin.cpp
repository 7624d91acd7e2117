#include "wittflags/dynkin.hpp"
#include "wittflags/sweep.hpp"

#include "closed_forms.hpp"
#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace wittflags;
using wittflags::testing::q;

namespace {

using Vec = std::vector<Integer>;

// Simple roots in an orthonormal basis, all coordinates doubled so that the
// half-integral roots of E and F stay integral.
std::vector<Vec> euclidean_roots(ComponentType t) {
  const int n = t.rank;
  auto e = [](int dim, std::initializer_list<std::pair<int, int>> entries) {
    Vec v(dim, 0);
    for (auto [i, c] : entries) v[i] = 2 * c;
    return v;
  };
  std::vector<Vec> out;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) out.push_back(e(n + 1, {{i, 1}, {i + 1, -1}}));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (int i = 0; i + 1 < n; ++i) out.push_back(e(n, {{i, 1}, {i + 1, -1}}));
      if (t.family == Family::B) out.push_back(e(n, {{n - 1, 1}}));
      if (t.family == Family::C) out.push_back(e(n, {{n - 1, 2}}));
      if (t.family == Family::D) out.push_back(e(n, {{n - 2, 1}, {n - 1, 1}}));
      break;
    case Family::G:
      out = {e(3, {{0, 1}, {1, -1}}), e(3, {{0, -2}, {1, 1}, {2, 1}})};
      break;
    case Family::F:
      out = {e(4, {{1, 1}, {2, -1}}), e(4, {{2, 1}, {3, -1}}), e(4, {{3, 1}}), Vec{1, -1, -1, -1}};
      break;
    case Family::E: {
      std::vector<Vec> e8 = {Vec{1, -1, -1, -1, -1, -1, -1, 1}, e(8, {{0, 1}, {1, 1}}), e(8, {{1, 1}, {0, -1}}),
                             e(8, {{2, 1}, {1, -1}}),           e(8, {{3, 1}, {2, -1}}), e(8, {{4, 1}, {3, -1}}),
                             e(8, {{5, 1}, {4, -1}}),           e(8, {{6, 1}, {5, -1}})};
      out.assign(e8.begin(), e8.begin() + n);
      break;
    }
  }
  return out;
}

Integer dot(const Vec& a, const Vec& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

TEST(Parse, PathA3) {
  const auto d = DynkinDiagram::parse("A3");
  ASSERT_EQ(d.rank(), 3);
  EXPECT_EQ(d.edges().size(), 2u);
  EXPECT_EQ(d.bond(0, 1), 1);
  EXPECT_EQ(d.bond(1, 2), 1);
  EXPECT_EQ(d.bond(0, 2), 0);
}

TEST(Parse, B7DoubleEdgeTowardShortNode) {
  const auto d = DynkinDiagram::parse("B7");
  EXPECT_EQ(d.bond(5, 6), 2);
  EXPECT_LT(d.length_squared(6), d.length_squared(5));
  for (int i = 0; i < 6; ++i) EXPECT_EQ(d.length_squared(i), 2);
}

TEST(Parse, TwoComponents) {
  const auto d = DynkinDiagram::parse("D4;A1");
  ASSERT_EQ(d.components().size(), 2u);
  EXPECT_EQ(d.bond(0, 1), 1);
  EXPECT_EQ(d.bond(1, 2), 1);
  EXPECT_EQ(d.bond(1, 3), 1);
  EXPECT_EQ(d.bond(2, 3), 0);
  EXPECT_EQ(d.component_of(4), 1);
  EXPECT_EQ(d.label(4), "2.1");
  EXPECT_EQ(d.parse_node("2.1"), 4);
  EXPECT_EQ(d.spec(), "D4;A1");
}

TEST(Parse, WhitespaceAroundTokens) { EXPECT_EQ(DynkinDiagram::parse(" B3 ; G2 ").spec(), "B3;G2"); }

TEST(Parse, Rejections) {
  for (const char* bad : {"", "Q3", "D3", "A0", "E9", "F5", "G3", "B1", "A3;", "A", "3", "A-1", "a3"})
    EXPECT_THROW(DynkinDiagram::parse(bad), ParseError) << bad;
}

TEST(Parse, NodeLists) {
  const auto d = DynkinDiagram::parse("A3;B2");
  EXPECT_EQ(parse_node_list(d, "1.1,2.2"), (std::vector<int>{0, 4}));
  EXPECT_THROW(parse_node_list(d, "4"), ParseError);
  EXPECT_THROW(parse_node_list(d, "1.4"), ParseError);
  EXPECT_THROW(parse_node_list(d, "x"), ParseError);
  const auto a = DynkinDiagram::parse("A3");
  EXPECT_EQ(parse_node_list(a, ""), std::vector<int>{});
  EXPECT_EQ(parse_node_list(a, "3,1"), (std::vector<int>{2, 0}));
}

TEST(Cartan, Examples) {
  IntMatrix a2(2, 2);
  a2(0, 0) = a2(1, 1) = 2;
  a2(0, 1) = a2(1, 0) = -1;
  EXPECT_EQ(cartan_matrix(DynkinDiagram::parse("A2")), a2);

  IntMatrix b2(2, 2);
  b2(0, 0) = b2(1, 1) = 2;
  b2(0, 1) = -2;
  b2(1, 0) = -1;
  EXPECT_EQ(cartan_matrix(DynkinDiagram::parse("B2")), b2);

  EXPECT_EQ(cartan_matrix(DynkinDiagram::parse("A1")), IntMatrix(1, 1, 2));
}

TEST(Cartan, MatchesEuclideanRealisation) {
  for (const auto& t : connected_types(8)) {
    const auto roots = euclidean_roots(t);
    const auto c = cartan_matrix(t);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j)
        EXPECT_EQ(c(i, j), 2 * dot(roots[i], roots[j]) / dot(roots[j], roots[j])) << t.name() << " " << i << "," << j;
  }
}

TEST(Cartan, BlockDiagonal) {
  const auto d = DynkinDiagram::parse("B3;G2");
  const auto c = cartan_matrix(d);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 5; ++j) EXPECT_EQ(c(i, j), 0);
  EXPECT_EQ(c(3, 4), -1);  // G2 node 1 short
  EXPECT_EQ(c(4, 3), -3);
}

TEST(InverseCartan, Examples) {
  const auto a3 = inverse_cartan({Family::A, 3});
  const Integer expected[3][3] = {{3, 2, 1}, {2, 4, 2}, {1, 2, 3}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(a3(i, j), q(expected[i][j], 4));
  EXPECT_EQ(inverse_cartan({Family::E, 6})(0, 5), q(2, 3));
  EXPECT_EQ(inverse_cartan({Family::A, 1})(0, 0), q(1, 2));
}

TEST(InverseCartan, IsExactInverseUpToRankNine) {
  for (const auto& t : connected_types(9)) {
    const auto product = inverse_cartan(t) * to_rational(cartan_matrix(t));
    EXPECT_EQ(product, RationalMatrix::identity(t.rank)) << t.name();
  }
}

TEST(InverseCartan, ClosedFormEntries) {
  for (const auto& t : wittflags::testing::closed_form_types(9)) {
    const auto inv = inverse_cartan(t);
    for (const auto& e : wittflags::testing::closed_form_entries(t))
      EXPECT_EQ(inv(e.i - 1, e.j - 1), e.value) << t.name() << " entry " << e.i << "," << e.j;
  }
}

TEST(RootData, CountsAndOrders) {
  EXPECT_EQ(positive_root_count({Family::A, 4}), 10);
  EXPECT_EQ(positive_root_count({Family::B, 3}), 9);
  EXPECT_EQ(positive_root_count({Family::D, 5}), 20);
  EXPECT_EQ(positive_root_count({Family::E, 8}), 120);
  EXPECT_EQ(positive_root_count({Family::F, 4}), 24);
  EXPECT_EQ(positive_root_count({Family::G, 2}), 6);
  EXPECT_EQ(weyl_group_order({Family::A, 5}), 720);
  EXPECT_EQ(weyl_group_order({Family::E, 6}), 51840);
  EXPECT_EQ(weyl_group_order({Family::E, 8}), 696729600);
  EXPECT_EQ(weyl_group_order({Family::G, 2}), 12);
}

TEST(Classify, RoundTripsWholeComponents) {
  for (const auto& t : connected_types(9)) {
    const DynkinDiagram d({t});
    std::vector<int> all(t.rank);
    for (int i = 0; i < t.rank; ++i) all[i] = i;
    const auto c = classify(d, all);
    EXPECT_EQ(c.type, t);
    for (int i = 0; i < t.rank; ++i) EXPECT_EQ(c.nodes[i], i) << t.name();
  }
}

TEST(Classify, SubdiagramTypes) {
  const auto b4 = DynkinDiagram::parse("B4");
  EXPECT_EQ(classify(b4, {2, 3}).type, (ComponentType{Family::B, 2}));
  EXPECT_EQ(classify(b4, {1, 2, 3}).type, (ComponentType{Family::B, 3}));
  const auto c4 = DynkinDiagram::parse("C4");
  EXPECT_EQ(classify(c4, {2, 3}).type, (ComponentType{Family::C, 2}));
  EXPECT_EQ(classify(c4, {1, 2, 3}).type, (ComponentType{Family::C, 3}));
  const auto f4 = DynkinDiagram::parse("F4");
  EXPECT_EQ(classify(f4, {1, 2}).type, (ComponentType{Family::B, 2}));
  EXPECT_EQ(classify(f4, {0, 1, 2}).type, (ComponentType{Family::B, 3}));
  EXPECT_EQ(classify(f4, {1, 2, 3}).type, (ComponentType{Family::C, 3}));
  const auto e8 = DynkinDiagram::parse("E8");
  EXPECT_EQ(classify(e8, {1, 2, 3, 4}).type, (ComponentType{Family::D, 4}));
  EXPECT_EQ(classify(e8, {0, 1, 2, 3, 4, 5, 6}).type, (ComponentType{Family::E, 7}));
  EXPECT_EQ(classify(e8, {1, 2, 3, 4, 5, 6}).type, (ComponentType{Family::D, 6}));
  EXPECT_EQ(classify(e8, {1, 3, 4, 5, 6, 7}).type, (ComponentType{Family::A, 6}));
  EXPECT_EQ(classify(e8, {0, 2, 3, 4, 5, 6, 7}).type, (ComponentType{Family::A, 7}));
  EXPECT_THROW(classify(e8, {0, 4}), InternalError);
}

TEST(Classify, RelabellingPreservesCartanEntries) {
  for (const auto& t : connected_types(7)) {
    const DynkinDiagram d({t});
    for (const auto& theta : all_thetas(t.rank)) {
      const ParabolicSubset p(d, theta);
      for (const auto& c : p.components()) {
        const auto standard = cartan_matrix(c.type);
        for (int i = 0; i < c.size(); ++i)
          for (int j = 0; j < c.size(); ++j) ASSERT_EQ(standard(i, j), d.cartan(c.nodes[i], c.nodes[j]));
      }
    }
  }
}

// Exceptional types never occur as proper subdiagrams with a white neighbour.
TEST(Classify, NoExceptionalProperSubdiagrams) {
  const std::set<ComponentType> exceptional = {{Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
  for (const auto& t : connected_types(9)) {
    const DynkinDiagram d({t});
    for (const auto& theta : all_thetas(t.rank)) {
      const ParabolicSubset p(d, theta);
      for (const auto& c : p.components())
        if (exceptional.count(c.type)) EXPECT_TRUE(p.white_neighbours(c).empty()) << case_key(p);
    }
  }
}

TEST(Parabolic, WhiteNodesAndNeighbours) {
  const auto p = wittflags::testing::parabolic("B8", "2,5,6,7");
  EXPECT_EQ(p.white(), (std::vector<int>{0, 2, 3, 7}));
  ASSERT_EQ(p.components().size(), 2u);
  const auto& a3 = p.component_for(5);
  EXPECT_EQ(a3.type, (ComponentType{Family::A, 3}));
  EXPECT_EQ(p.white_neighbours(a3), (std::vector<int>{3, 7}));
  EXPECT_EQ(p.neighbour_in(3, a3), 4);
  EXPECT_EQ(p.neighbour_in(7, a3), 6);
  EXPECT_FALSE(p.neighbour_in(0, a3).has_value());
  EXPECT_EQ(p.white_index(3), 2);
  EXPECT_EQ(p.white_index(4), -1);
}

TEST(Parabolic, ThetaIsSortedAndDeduplicated) {
  const auto d = DynkinDiagram::parse("A4");
  EXPECT_EQ(ParabolicSubset(d, {3, 1, 3}).theta(), (std::vector<int>{1, 3}));
  EXPECT_THROW(ParabolicSubset(d, {4}), ParseError);
}
