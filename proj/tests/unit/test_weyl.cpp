#include "wittflags/sweep.hpp"
#include "wittflags/weyl.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <set>

using namespace wittflags;
using wittflags::testing::parabolic;

namespace {

Weight w(std::initializer_list<Integer> coords) { return Weight::from_integers(IntVector(coords)); }

// The W_Theta-orbit by breadth-first closure, and its unique dominant member.
Weight dominant_by_orbit(const ParabolicSubset& p, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::deque<Weight> todo{lambda};
  while (!todo.empty()) {
    const Weight cur = todo.front();
    todo.pop_front();
    for (int v : p.theta()) {
      Weight next = reflect(p.diagram(), cur, v);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  std::vector<Weight> dominant;
  for (const auto& x : seen)
    if (std::all_of(p.theta().begin(), p.theta().end(), [&](int v) { return !(x[v] < Rational(0)); }))
      dominant.push_back(x);
  EXPECT_EQ(dominant.size(), 1u);
  return dominant.front();
}

}  // namespace

TEST(Reflect, Examples) {
  const auto a2 = DynkinDiagram::parse("A2");
  EXPECT_EQ(reflect(a2, w({0, -1}), 1), w({-1, 1}));
  const auto b3 = DynkinDiagram::parse("B3");
  EXPECT_EQ(reflect(b3, Weight::fundamental(3, 0), 2), Weight::fundamental(3, 0));
  EXPECT_THROW(reflect(a2, w({0, 1}), 2), ParseError);
  EXPECT_THROW(reflect(a2, w({0, 1, 0}), 0), DimensionError);
}

TEST(Reflect, SimpleRootIsNegated) {
  for (const auto& t : connected_types(8)) {
    const DynkinDiagram d({t});
    for (int i = 0; i < t.rank; ++i) {
      const auto a = Weight::simple_root(d, i);
      EXPECT_EQ(reflect(d, a, i), -a) << t.name();
    }
  }
}

TEST(Reflect, IsAnInvolutionOnRandomWeights) {
  wittflags::testing::Rng rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = wittflags::testing::random_parabolic(rng, 8);
    const auto& d = p.diagram();
    const auto lambda = Weight::from_integers(wittflags::testing::random_vector(rng, d.rank(), 3));
    const int i = wittflags::testing::uniform(rng, 0, d.rank() - 1);
    ASSERT_EQ(reflect(d, reflect(d, lambda, i), i), lambda);
  }
}

TEST(Dominate, Examples) {
  const auto p = parabolic("A2", "2");
  const auto r = dominate(w({0, -1}), p);
  EXPECT_EQ(r.weight, w({-1, 1}));
  EXPECT_EQ(r.steps, 1);

  const auto same = dominate(w({-3, 2}), p);
  EXPECT_EQ(same.weight, w({-3, 2}));
  EXPECT_EQ(same.steps, 0);

  EXPECT_EQ(dominate(w({-1, 0}), parabolic("A2", "1,2")).weight, w({0, 1}));
}

TEST(Dominate, RejectsNonIntegralWeights) {
  Weight half(2);
  half[0] = Rational(1, 2);
  EXPECT_THROW(dominate(half, parabolic("A2", "1")), InternalError);
}

TEST(Dominate, AgreesWithOrbitEnumeration) {
  wittflags::testing::Rng rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const auto p = wittflags::testing::random_parabolic(rng, 5);
    const auto lambda = Weight::from_integers(wittflags::testing::random_vector(rng, p.diagram().rank(), 2));
    ASSERT_EQ(dominate(lambda, p).weight, dominant_by_orbit(p, lambda)) << case_key(p);
  }
}

TEST(Dominate, TerminatesOnAllNegativeFundamentalWeights) {
  for (const auto& t : connected_types(8)) {
    const DynkinDiagram d({t});
    for (const auto& theta : all_thetas(t.rank)) {
      const ParabolicSubset p(d, theta);
      for (int v = 0; v < t.rank; ++v) ASSERT_NO_THROW(dominate(-Weight::fundamental(t.rank, v), p)) << case_key(p);
    }
  }
}

TEST(CircRule, Examples) {
  auto rule = [](const char* diagram) {
    const auto p = parabolic(diagram, "");
    const auto d = DynkinDiagram::parse(diagram);
    std::vector<int> all(d.rank());
    for (int i = 0; i < d.rank(); ++i) all[i] = i;
    return circ_rule(classify(d, all)).image;
  };
  EXPECT_EQ(rule("A4"), (std::vector<int>{4, 3, 2, 1}));
  EXPECT_EQ(rule("D5"), (std::vector<int>{1, 2, 3, 5, 4}));
  EXPECT_EQ(rule("D4"), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(rule("B3"), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(rule("E6"), (std::vector<int>{6, 2, 5, 4, 3, 1}));
  EXPECT_EQ(rule("E7"), (std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
}

TEST(CircOracle, Examples) {
  const auto p = parabolic("A2", "2");
  const auto r = circ_oracle(p, 1);
  EXPECT_EQ(r.node, 1);
  EXPECT_EQ(r.tau, w({-1, 0}));

  const auto b = parabolic("B5", "2,3,4,5");
  for (int v : b.theta()) EXPECT_EQ(circ_oracle(b, v).node, v);

  const auto single = parabolic("E7", "4");
  EXPECT_EQ(circ_oracle(single, 3).node, 3);
  EXPECT_THROW(circ_oracle(single, 0), InternalError);
}

TEST(CircOracle, AgreesWithRuleAndPreservesEdges) {
  for (const auto& t : connected_types(8)) {
    const DynkinDiagram d({t});
    for (const auto& theta : all_thetas(t.rank)) {
      const ParabolicSubset p(d, theta);
      for (int v : p.theta()) {
        const auto oracle = circ_oracle(p, v);
        ASSERT_EQ(oracle.node, circ_node(p, v)) << case_key(p);
        for (int u : p.theta()) ASSERT_EQ(oracle.tau[u], Rational(0));
        ASSERT_EQ(circ_node(p, circ_node(p, v)), v);
        for (int u : d.neighbours(v))
          if (p.contains(u)) ASSERT_EQ(d.bond(circ_node(p, v), circ_node(p, u)), d.bond(v, u)) << case_key(p);
      }
    }
  }
}
