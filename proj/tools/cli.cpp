#include "cli.hpp"

#include "wittflags/marks.hpp"
#include "wittflags/repring.hpp"
#include "wittflags/serialize.hpp"
#include "wittflags/sweep.hpp"
#include "wittflags/tate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>

namespace wittflags::cli {

namespace {

struct Query {
  std::string diagram;
  std::string theta;
  std::string twist;
  bool json = false;
  bool dot = false;
  int max_rank = 6;
};

ParabolicSubset parabolic(const Query& q) {
  const auto d = DynkinDiagram::parse(q.diagram);
  return ParabolicSubset(d, parse_node_list(d, q.theta));
}

// "3=1,5=-2" over the white nodes; unlisted nodes get exponent zero.
IntVector parse_twist(const ParabolicSubset& p, std::string_view text) {
  IntVector t(p.white().size(), 0);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("twist entry '" + std::string(item) + "' is not node=exponent");
    const int node = p.diagram().parse_node(item.substr(0, eq));
    const int idx = p.white_index(node);
    if (idx < 0) throw ParseError("twist node " + p.diagram().label(node) + " is in Theta");
    const auto value = item.substr(eq + 1);
    Integer e = 0;
    const char* first = value.data();
    if (!value.empty() && value.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, value.data() + value.size(), e);
    if (ec != std::errc() || ptr != value.data() + value.size() || first == value.data() + value.size())
      throw ParseError("bad twist exponent '" + std::string(value) + "'");
    t[idx] += e;
    pos = end + 1;
  }
  return t;
}

std::string node_list(const DynkinDiagram& d, const std::vector<int>& nodes) {
  std::string out = "[";
  for (std::size_t i = 0; i < nodes.size(); ++i) out += (i ? "," : "") + d.label(nodes[i]);
  return out + "]";
}

std::string int_tuple(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string dims(const TateDims& d) { return "(" + std::to_string(d.plus) + "," + std::to_string(d.minus) + ")"; }

void print_subspace(std::ostream& out, const F2Subspace& s) {
  if (s.dim() == 0) out << "  (zero subspace)\n";
  for (const auto& b : s.basis()) out << "  " << to_string(b) << "\n";
}

int cmd_vanishes(const Query& q, std::ostream& out) {
  const auto p = parabolic(q);
  const auto r = rep_ring_model(p);
  const auto t = parse_twist(p, q.twist);
  const auto v = vanishes(r, t);
  const auto span = twist_space(r);
  if (q.json) {
    out << vanishing_json(v, span);
    return 0;
  }
  std::vector<int> j_nodes;
  for (const auto& s : r.self_dual) j_nodes.push_back(s.node);
  if (v.vanishes) {
    out << "VANISHES\ntwist " << to_string(reduce_mod2(t)) << " mod 2 lies outside the span over white nodes "
        << node_list(p.diagram(), p.white()) << ":\n";
    print_subspace(out, span);
  } else {
    out << "NONZERO\nwitness " << to_string(*v.witness) << " over self-dual nodes " << node_list(p.diagram(), j_nodes)
        << "\n";
  }
  return 0;
}

int cmd_marks(const Query& q, std::ostream& out) {
  const auto p = parabolic(q);
  const auto rule = rule_marks(p);
  const auto computed = computed_marks(p);
  if (q.json) {
    out << marks_json(rule, computed);
    return 0;
  }
  if (q.dot) {
    out << render(rule, RenderFormat::Dot);
    return 0;
  }
  out << "rule marks:\n" << render(rule, RenderFormat::Text);
  for (const auto& m : rule.marks) out << "  " << node_list(p.diagram(), m.support) << ": " << m.provenance << "\n";
  out << "computed marks:\n" << render(computed, RenderFormat::Text);
  out << "spans agree: " << (span_of_marks(rule) == span_of_marks(computed) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_twist_space(const Query& q, std::ostream& out) {
  const auto p = parabolic(q);
  const auto span = twist_space(rep_ring_model(p));
  if (q.json) {
    out << twist_space_json(p, span);
    return 0;
  }
  out << "white nodes " << node_list(p.diagram(), p.white()) << "\nnonvanishing twists mod 2, dimension " << span.dim()
      << ":\n";
  print_subspace(out, span);
  return 0;
}

int cmd_h_ring(const Query& q, std::ostream& out) {
  const auto p = parabolic(q);
  const auto r = rep_ring_model(p);
  std::optional<IntVector> t;
  if (!q.twist.empty()) t = parse_twist(p, q.twist);
  const auto h = h_presentation(r, t);
  if (q.json) {
    out << presentation_json(h, r);
    return 0;
  }
  out << "h^+ generators (even degree):\n";
  if (h.gamma_classes.empty() && h.nu.empty() && h.sigma.empty()) out << "  none\n";
  const std::size_t nj = h.mu_nodes.size();
  for (const auto& g : h.gamma_classes) {
    Monomial x{IntVector(nj, 0), g.x_exp};
    out << "  gamma[" << r.label(g.node) << "," << r.label(g.dual) << "] = gamma" << r.label(g.node) << "*gamma"
        << r.label(g.dual) << (to_string(r, x) == "1" ? "" : "*" + to_string(r, x)) << "\n";
  }
  for (std::size_t i = 0; i < h.nu.size(); ++i) {
    std::string name;
    for (std::size_t j = 0; j < nj; ++j)
      if (h.nu[i].lift[j]) name += (name.empty() ? "" : ",") + r.label(h.mu_nodes[j]);
    out << "  nu[" << name << "] = " << to_string(r, h.nu_monomial(i)) << "\n";
  }
  for (std::size_t j = 0; j < h.sigma.size(); ++j)
    out << "  sigma[" << r.label(h.sigma[j].node) << "] = " << to_string(r, h.sigma_monomial(j)) << "\n";
  out << "relations:\n";
  if (h.relations.empty()) out << "  none\n";
  for (const auto& rel : h.relations) out << "  " << rel << "\n";
  out << "h^- = 0\n";
  if (t) out << "zeta = " << (h.zeta ? to_string(r, *h.zeta) : "none") << "\n";
  return 0;
}

int cmd_zeta(const Query& q, std::ostream& out) {
  const auto p = parabolic(q);
  const auto r = rep_ring_model(p);
  const auto z = zeta(r, parse_twist(p, q.twist));
  if (q.json) out << zeta_json(z);
  else out << (z ? to_string(r, *z) : "none") << "\n";
  return 0;
}

int cmd_k0(const Query& q, std::ostream& out) {
  const auto p = parabolic(q);
  const auto t = parse_twist(p, q.twist);
  const auto model = k0_model(p);
  const auto untwisted = tate_dims(model.module);
  const auto twisted = tate_dims(model.module, model.twist_unit(t));
  if (q.json) {
    out << k0_json(model, t, untwisted, twisted);
    return 0;
  }
  out << "rank " << model.module.rank() << "\n"
      << "untwisted (h+,h-) = " << dims(untwisted) << "\n"
      << "twisted by " << int_tuple(t) << " (h+,h-) = " << dims(twisted) << "\n"
      << "validation: ok (window degree " << model.window.degree << ", exponent " << model.window.exponent << ")\n";
  return 0;
}

int cmd_selfcheck(const Query& q, std::ostream& out) {
  SweepOptions options;
  options.max_rank = q.max_rank;
  const auto report = sweep(options);
  if (q.json) {
    out << sweep_json(report);
    return report.ok() ? 0 : 1;
  }
  out << report.cases << " cases up to rank " << q.max_rank << "\n";
  for (const auto& [check, count] : report.checked)
    out << "  " << check << ": " << count << " checked, " << report.failures_of(check) << " failed\n";
  if (report.failures_of("exception")) out << "  exception: " << report.failures_of("exception") << " failed\n";
  for (const auto& f : report.failures) out << "FAIL " << f.check << " " << f.key << ": " << f.detail << "\n";
  out << (report.ok() ? "all checks passed" : "violations found") << "\n";
  return report.ok() ? 0 : 1;
}

int cmd_table1(const Query& q, std::ostream& out) {
  const auto report = table1_report();
  if (q.json) {
    out << table1_json(report);
    return report.pass ? 0 : 1;
  }
  for (const auto& r : report.rows) {
    out << r.space << "  " << r.geometry << "  untwisted " << dims(r.untwisted) << " twisted " << dims(r.twisted)
        << "  expected " << dims(r.expected_untwisted) << "/" << dims(r.expected_twisted);
    if (r.preset_untwisted) out << "  preset " << dims(*r.preset_untwisted) << "/" << dims(*r.preset_twisted);
    out << "  " << (r.pass ? "pass" : r.note.empty() ? "FAIL" : "flagged");
    if (!r.note.empty()) out << " (" << r.note << ")";
    out << "\n";
  }
  out << "table " << (report.pass ? "reproduced" : "NOT reproduced") << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Witt groups of split flag varieties", "witt-flags"};
  app.require_subcommand(1);
  Query q;

  auto with_diagram = [&](CLI::App* sub, bool twist) {
    sub->add_option("diagram", q.diagram, "Dynkin diagram, e.g. A3 or B4;D5")->required();
    sub->add_option("--theta", q.theta, "Theta nodes, e.g. 1,3 or 2.1,2.4");
    if (twist) sub->add_option("--twist", q.twist, "twist exponents over white nodes, e.g. 2=1,4=-1");
    sub->add_flag("--json", q.json, "emit JSON");
  };

  std::vector<std::pair<CLI::App*, int (*)(const Query&, std::ostream&)>> commands;
  auto add = [&](const char* name, const char* help, int (*fn)(const Query&, std::ostream&)) {
    auto* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, fn);
    return sub;
  };
  with_diagram(add("vanishes", "decide vanishing of the twisted Tate cohomology", cmd_vanishes), true);
  auto* marks = add("marks", "rule-based and computed marked diagrams", cmd_marks);
  with_diagram(marks, false);
  marks->add_flag("--dot", q.dot, "emit the rule-marked diagram as DOT");
  with_diagram(add("twist-space", "twists with nonzero Tate cohomology, mod 2", cmd_twist_space), false);
  with_diagram(add("h-ring", "presentation of the Tate cohomology ring", cmd_h_ring), true);
  with_diagram(add("zeta", "self-dual witness monomial for a twist", cmd_zeta), true);
  with_diagram(add("k0", "Tate cohomology of K_0(G/P), type A only", cmd_k0), true);
  auto* selfcheck = add("selfcheck", "exhaustive consistency sweep", cmd_selfcheck);
  selfcheck->add_option("--max-rank", q.max_rank, "largest rank swept")->check(CLI::Range(1, 8));
  selfcheck->add_flag("--json", q.json, "emit JSON");
  add("table1", "Witt groups of some projective spaces and a Grassmannian", cmd_table1)
      ->add_flag("--json", q.json, "emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [sub, fn] : commands)
      if (sub->parsed()) {
        if (sub->get_name() == "k0") {
          const auto d = DynkinDiagram::parse(q.diagram);
          const bool type_a = std::all_of(d.components().begin(), d.components().end(),
                                          [](const ComponentType& t) { return t.family == Family::A; });
          if (!type_a || d.components().size() != 1) {
            err << "error: oracle supports type A only\n";
            return 2;
          }
        }
        return fn(q, out);
      }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace wittflags::cli
