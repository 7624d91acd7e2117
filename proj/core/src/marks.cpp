#include "wittflags/marks.hpp"

#include "wittflags/twists.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wittflags {

namespace {

using Support = std::vector<int>;

struct RuleOutput {
  std::vector<Support> supports;
  std::string rule;
};

class RuleContext {
 public:
  RuleContext(const ParabolicSubset& p, const ClassifiedComponent& c) : p_(p), c_(c) {}

  const DynkinDiagram& d() const { return p_.diagram(); }
  Family ambient() const { return d().components()[c_.ambient_component].family; }
  int ambient_rank() const { return d().components()[c_.ambient_component].rank; }
  int ambient_node(int local) const { return d().node(c_.ambient_component, local); }

  // White neighbours of the given component nodes.
  Support neighbours_of(std::initializer_list<int> locals) const {
    std::set<int> out;
    for (int l : locals)
      for (int w : d().neighbours(c_.nodes[l - 1]))
        if (!c_.contains(w)) out.insert(w);
    return {out.begin(), out.end()};
  }
  Support all_neighbours() const { return p_.white_neighbours(c_); }

 private:
  const ParabolicSubset& p_;
  const ClassifiedComponent& c_;
};

RuleOutput joint(Support s, std::string rule) {
  RuleOutput out{{}, std::move(rule)};
  if (!s.empty()) out.supports.push_back(std::move(s));
  return out;
}

RuleOutput individual(const Support& s, std::string rule) {
  RuleOutput out{{}, std::move(rule)};
  for (int v : s) out.supports.push_back({v});
  return out;
}

RuleOutput unique_neighbour(const RuleContext& ctx, std::string rule) {
  const auto n = ctx.all_neighbours();
  if (n.size() > 1) throw InternalError("rule '" + rule + "' expects at most one neighbour");
  return joint(n, std::move(rule));
}

RuleOutput none(std::string rule) { return {{}, std::move(rule)}; }

[[noreturn]] void unreachable(const ClassifiedComponent& c, Family ambient) {
  throw InternalError("no marking rule for " + c.type.name() + " inside type " + std::string(1, family_letter(ambient)));
}

RuleOutput apply_rule(const ParabolicSubset& p, const ClassifiedComponent& c) {
  const RuleContext ctx(p, c);
  const Family amb = ctx.ambient();
  const int n = ctx.ambient_rank();
  const int l = c.type.rank;
  const Family f = c.type.family;
  const bool odd = l % 2 == 1;
  const std::string tag = c.type.name() + " in " + family_letter(amb) + std::to_string(n);

  switch (amb) {
    case Family::A:
      if (f != Family::A) break;
      return odd ? joint(ctx.all_neighbours(), tag + ": all neighbours") : none(tag + ": even");

    case Family::B:
      if (f == Family::A) {
        if (!odd) return none(tag + ": even");
        auto s = ctx.all_neighbours();
        std::erase(s, ctx.ambient_node(n));
        return joint(s, tag + ": neighbours except the short root");
      }
      if (f == Family::B) return unique_neighbour(ctx, tag + ": unique neighbour");
      break;

    case Family::C:
      // Components through the long end node n ({n} alone, C_l) are inert.
      if (c.contains(ctx.ambient_node(n))) return none(tag + ": contains the long end");
      if (f == Family::A) return odd ? joint(ctx.all_neighbours(), tag + ": all neighbours") : none(tag + ": even");
      break;

    case Family::D:
      if (f == Family::A) {
        if (!odd) return none(tag + ": even");
        if (l == 1) return joint(ctx.all_neighbours(), tag + ": all neighbours");
        return joint(ctx.neighbours_of({1, l}), tag + ": neighbours of the outer roots");
      }
      if (f == Family::D) return odd ? none(tag + ": odd") : unique_neighbour(ctx, tag + ": unique neighbour");
      break;

    case Family::E:
      if (f == Family::A) {
        if (!odd) return none(tag + ": even");
        if (l == 1) return joint(ctx.all_neighbours(), tag + ": all neighbours");
        if (l == 3) return joint(ctx.neighbours_of({1, 3}), tag + ": neighbours of the outer roots");
        if (l == 5) return joint(ctx.neighbours_of({1, 3, 5}), tag + ": neighbours of the outer and central roots");
        if (l == 7 && n == 8) return unique_neighbour(ctx, tag + ": unique neighbour");
        break;
      }
      if (f == Family::D) {
        if (l == 5) {
          const auto a = ctx.neighbours_of({4});
          const auto b = ctx.neighbours_of({5});
          if (a.size() + b.size() > 1) throw InternalError(tag + ": both fork roots have neighbours");
          return joint(a.empty() ? b : a, tag + ": neighbour of a fork root");
        }
        return individual(ctx.all_neighbours(), tag + ": all neighbours individually");
      }
      if (f == Family::E) {
        if (l == 7 && n == 8) return unique_neighbour(ctx, tag + ": unique neighbour");
        if (l == 6 || l == n) return none(tag + ": inert");
      }
      break;

    case Family::F: {
      std::vector<int> locals;
      for (int v : c.nodes) locals.push_back(ctx.d().local_index(v));
      std::sort(locals.begin(), locals.end());
      // Connected node sets of F4 and the marks they carry.
      static const std::map<std::vector<int>, std::vector<int>> table = {
          {{1}, {2}},       {{2}, {1}},    {{3}, {2, 4}},  {{4}, {3}},       {{1, 2}, {}},
          {{2, 3}, {1}},    {{3, 4}, {}},  {{1, 2, 3}, {4}}, {{2, 3, 4}, {1}}, {{1, 2, 3, 4}, {}},
      };
      const auto it = table.find(locals);
      if (it == table.end()) break;
      Support s;
      for (int local : it->second) s.push_back(ctx.ambient_node(local));
      return joint(s, tag + ": F4 table");
    }

    case Family::G:
      if (f == Family::A) return unique_neighbour(ctx, tag + ": unique neighbour");
      if (f == Family::G) return none(tag + ": whole diagram");
      break;
  }
  unreachable(c, amb);
}

void add_mark(MarkedDiagram& m, Support s, std::string provenance) {
  std::sort(s.begin(), s.end());
  for (const auto& existing : m.marks)
    if (existing.support == s) return;
  m.marks.push_back({std::move(s), std::move(provenance)});
}

}  // namespace

MarkedDiagram computed_marks(const ParabolicSubset& p) {
  MarkedDiagram out{p, {}};
  const auto tm = self_dual_twist_matrix(p);
  for (std::size_t c = 0; c < tm.columns.size(); ++c) {
    Support s;
    for (std::size_t r = 0; r < tm.rows.size(); ++r)
      if (tm.m(r, c) % 2 != 0) s.push_back(tm.rows[r]);
    if (!s.empty()) add_mark(out, std::move(s), "m^" + p.diagram().label(tm.columns[c]) + " odd");
  }
  return out;
}

MarkedDiagram rule_marks(const ParabolicSubset& p) {
  MarkedDiagram out{p, {}};
  for (const auto& c : p.components()) {
    auto r = apply_rule(p, c);
    for (auto& s : r.supports) add_mark(out, std::move(s), r.rule);
  }
  return out;
}

F2Subspace span_of_marks(const MarkedDiagram& m) {
  const auto& p = m.parabolic;
  std::vector<BitVector> vectors;
  for (const auto& mark : m.marks) {
    BitVector v(p.white().size());
    for (int beta : mark.support) {
      const int idx = p.white_index(beta);
      if (idx < 0) throw InternalError("mark supported on a Theta-node");
      v[idx] = true;
    }
    vectors.push_back(v);
  }
  return F2Subspace::span(p.white().size(), vectors);
}

RenderFormat parse_render_format(std::string_view name) {
  if (name == "text") return RenderFormat::Text;
  if (name == "dot") return RenderFormat::Dot;
  throw ParseError("unknown render format '" + std::string(name) + "'");
}

namespace {

std::string edge_glyph(const DynkinDiagram& d, int left, int right) {
  const int mult = d.bond(left, right);
  if (mult == 1) return "-";
  const bool right_short = d.length_squared(right) < d.length_squared(left);
  if (mult == 2) return right_short ? "=>" : "<=";
  return right_short ? "≡>" : "<≡";
}

// Main line of a component plus an optional node hanging below main-line position `hang_at`.
struct Layout {
  std::vector<int> line;  // local indices
  int hanging = 0;        // local index, 0 if none
  int hang_at = 0;        // position in `line`
};

Layout layout_of(ComponentType t) {
  Layout out;
  const int n = t.rank;
  if (t.family == Family::D) {
    for (int i = 1; i < n; ++i) out.line.push_back(i);
    out.hanging = n;
    out.hang_at = n - 3;
  } else if (t.family == Family::E) {
    out.line = {1};
    for (int i = 3; i <= n; ++i) out.line.push_back(i);
    out.hanging = 2;
    out.hang_at = 2;
  } else {
    for (int i = 1; i <= n; ++i) out.line.push_back(i);
  }
  return out;
}

std::string render_text(const MarkedDiagram& m) {
  const auto& d = m.diagram();
  const auto& p = m.parabolic;
  auto glyph = [&](int v) { return p.contains(v) ? std::string("*") : std::string("o"); };
  std::string out;
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    const auto t = d.components()[c];
    if (d.components().size() > 1) out += "component " + std::to_string(c + 1) + " (" + t.name() + "):\n";
    const Layout lay = layout_of(t);
    std::string line;
    std::size_t hang_col = 0;
    for (std::size_t i = 0; i < lay.line.size(); ++i) {
      const int v = d.node(static_cast<int>(c), lay.line[i]);
      if (i) line += edge_glyph(d, d.node(static_cast<int>(c), lay.line[i - 1]), v);
      if (static_cast<int>(i) == lay.hang_at && lay.hanging) hang_col = line.size();
      line += glyph(v);
    }
    out += line + "\n";
    if (lay.hanging) {
      out += std::string(hang_col, ' ') + "|\n";
      out += std::string(hang_col, ' ') + glyph(d.node(static_cast<int>(c), lay.hanging)) + "\n";
    }
  }
  for (const auto& mark : m.marks) {
    out += "mark: [";
    for (std::size_t i = 0; i < mark.support.size(); ++i) out += (i ? "," : "") + d.label(mark.support[i]);
    out += "]\n";
  }
  return out;
}

std::string render_dot(const MarkedDiagram& m) {
  const auto& d = m.diagram();
  const auto& p = m.parabolic;
  std::string out = "graph dynkin {\n  node [shape=circle, width=0.3, fixedsize=true];\n";
  for (int v = 0; v < d.rank(); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + d.label(v) + "\"";
    if (p.contains(v)) out += ", style=filled, fillcolor=black, fontcolor=white";
    out += "];\n";
  }
  for (const auto& e : d.edges()) {
    out += "  n" + std::to_string(e.a) + " -- n" + std::to_string(e.b);
    if (e.multiplicity > 1) {
      const int short_end = e.long_end == e.a ? e.b : e.a;
      out += std::string(" [color=\"") + (e.multiplicity == 2 ? "black:invis:black" : "black:black:black") +
             "\", dir=" + (short_end == e.b ? "forward" : "back") + "]";
    }
    out += ";\n";
  }
  for (std::size_t i = 0; i < m.marks.size(); ++i) {
    const std::string id = std::to_string(i);
    out += "  subgraph cluster_mark" + id + " {\n    label=\"mark " + std::to_string(i + 1) + "\";\n    mark" + id +
           " [shape=point];\n  }\n";
    for (int v : m.marks[i].support) out += "  mark" + id + " -- n" + std::to_string(v) + " [style=dashed];\n";
  }
  return out + "}\n";
}

}  // namespace

std::string render(const MarkedDiagram& m, RenderFormat format) {
  return format == RenderFormat::Dot ? render_dot(m) : render_text(m);
}

}  // namespace wittflags
