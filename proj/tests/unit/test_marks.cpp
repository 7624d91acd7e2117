#include "wittflags/marks.hpp"
#include "wittflags/sweep.hpp"
#include "wittflags/twists.hpp"

#include "fixtures.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace wittflags;
using wittflags::testing::parabolic;

namespace {

// Mark supports as 1-based node ids.
std::vector<std::vector<int>> supports(const MarkedDiagram& m) {
  std::vector<std::vector<int>> out;
  for (const auto& mark : m.marks) {
    std::vector<int> s;
    for (int v : mark.support) s.push_back(v + 1);
    out.push_back(s);
  }
  return out;
}

using Supports = std::vector<std::vector<int>>;

BitVector indicator(const ParabolicSubset& p, std::initializer_list<int> nodes) {
  BitVector out(p.white().size());
  for (int n : nodes)
    for (std::size_t b = 0; b < p.white().size(); ++b)
      if (p.white()[b] == n - 1) out.set(b);
  return out;
}

}  // namespace

TEST(ComputedMarks, Examples) {
  EXPECT_EQ(supports(computed_marks(parabolic("A2", "2"))), (Supports{{1}}));
  EXPECT_EQ(supports(computed_marks(parabolic("A7", "1,2,4,5,6,7"))), Supports{});
  EXPECT_EQ(supports(computed_marks(parabolic("A3", "2"))), (Supports{{1, 3}}));
  // Duplicate supports collapse.
  EXPECT_EQ(supports(computed_marks(parabolic("A3", "1,3"))), (Supports{{2}}));
}

TEST(RuleMarks, Examples) {
  EXPECT_EQ(supports(rule_marks(parabolic("B7", "2,6"))), (Supports{{1, 3}, {5}}));
  EXPECT_EQ(supports(rule_marks(parabolic("B8", "2,5,6,7"))), (Supports{{1, 3}, {4}}));
  EXPECT_EQ(supports(rule_marks(parabolic("G2", "2"))), (Supports{{1}}));
  EXPECT_EQ(supports(rule_marks(parabolic("A4", "2,3"))), Supports{});
}

TEST(RuleMarks, ExceptionalSimplification) {
  const auto p = parabolic("E8", "2,3,4,5,7");
  const auto rule = rule_marks(p);
  EXPECT_EQ(supports(rule), (Supports{{1}, {6}, {6, 8}}));
  const auto simplified = F2Subspace::span(p.white().size(), {indicator(p, {1}), indicator(p, {6}), indicator(p, {8})});
  EXPECT_EQ(span_of_marks(rule), simplified);
  EXPECT_EQ(span_of_marks(computed_marks(p)), simplified);
}

TEST(Spans, Examples) {
  EXPECT_EQ(span_of_marks(computed_marks(parabolic("A4"))).dim(), 0u);
  EXPECT_EQ(span_of_marks(computed_marks(parabolic("A3", "1,3"))).dim(), 1u);
}

TEST(Spans, IntroductionDiagramsAreUndecorated) {
  for (const auto& [d, theta] : std::vector<std::pair<const char*, const char*>>{
           {"A7", "1,2,4,5,6,7"}, {"D4", "1,2"}, {"D4", "1,2,3"}, {"F4;C3", "1.1,1.2,2.2,2.3"}}) {
    const auto p = parabolic(d, theta);
    EXPECT_EQ(span_of_marks(rule_marks(p)).dim(), 0u) << d << " " << theta;
    EXPECT_EQ(span_of_marks(computed_marks(p)).dim(), 0u) << d << " " << theta;
  }
}

TEST(Spans, RuleAndComputedAgreeOnEveryParabolic) {
  for (const auto& t : connected_types(7)) {
    const DynkinDiagram d({t});
    for (const auto& theta : all_thetas(t.rank)) {
      const ParabolicSubset p(d, theta);
      ASSERT_EQ(span_of_marks(rule_marks(p)), span_of_marks(computed_marks(p))) << case_key(p);
    }
  }
}

TEST(Spans, ComputedSpanIsTheParityColumnSpace) {
  wittflags::testing::Rng rng(43);
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = wittflags::testing::random_parabolic(rng, 8);
    ASSERT_EQ(span_of_marks(computed_marks(p)), column_space(F2Matrix::reduce(self_dual_twist_matrix(p).m)))
        << case_key(p);
  }
}

TEST(Spans, RandomReducibleDiagramsAgree) {
  wittflags::testing::Rng rng(47);
  for (int iter = 0; iter < 150; ++iter) {
    const auto a = wittflags::testing::random_type(rng, 5);
    const auto b = wittflags::testing::random_type(rng, 5);
    const DynkinDiagram d({a, b});
    const ParabolicSubset p(d, wittflags::testing::random_subset(rng, d.rank()));
    ASSERT_EQ(span_of_marks(rule_marks(p)), span_of_marks(computed_marks(p))) << a.name() << "+" << b.name();
  }
}

TEST(Render, Text) {
  EXPECT_EQ(render(computed_marks(parabolic("A2", "2")), RenderFormat::Text), "o-*\nmark: [1]\n");
  EXPECT_EQ(render(computed_marks(parabolic("B2")), RenderFormat::Text), "o=>o\n");
  EXPECT_EQ(render(computed_marks(parabolic("C2")), RenderFormat::Text), "o<=o\n");
  EXPECT_EQ(render(rule_marks(parabolic("G2", "2")), RenderFormat::Text), "o<≡*\nmark: [1]\n");
}

TEST(Render, Dot) {
  const auto dot = render(computed_marks(parabolic("A2", "2")), RenderFormat::Dot);
  EXPECT_EQ(dot.rfind("graph dynkin {", 0), 0u);
  EXPECT_NE(dot.find("n0 -- n1;"), std::string::npos);
  EXPECT_NE(dot.find("subgraph cluster_mark0"), std::string::npos);
  EXPECT_NE(dot.find("mark0 -- n0"), std::string::npos);
  EXPECT_EQ(dot.find("cluster_mark1"), std::string::npos);
}

TEST(Render, Formats) {
  EXPECT_EQ(parse_render_format("text"), RenderFormat::Text);
  EXPECT_EQ(parse_render_format("dot"), RenderFormat::Dot);
  EXPECT_THROW(parse_render_format("svg"), ParseError);
}
