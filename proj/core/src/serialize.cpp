#include "wittflags/serialize.hpp"

#include <nlohmann/json.hpp>

namespace wittflags {

namespace {

using json = nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json bits(const BitVector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v[i] ? 1 : 0);
  return out;
}

json subspace(const F2Subspace& s) {
  json out = json::array();
  for (const auto& b : s.basis()) out.push_back(bits(b));
  return out;
}

json labels(const DynkinDiagram& d, const std::vector<int>& nodes) {
  json out = json::array();
  for (int v : nodes) out.push_back(d.label(v));
  return out;
}

json monomial(const Monomial& m) { return {{"muExp", m.mu}, {"xExp", m.x}}; }

json dims(const TateDims& d) { return {{"plus", d.plus}, {"minus", d.minus}}; }

json marks(const MarkedDiagram& m) {
  json out = json::array();
  for (const auto& mark : m.marks)
    out.push_back({{"support", labels(m.diagram(), mark.support)}, {"provenance", mark.provenance}});
  return out;
}

}  // namespace

std::string presentation_json(const TatePresentation& h, const TwistedPolyRing& r) {
  json gamma = json::array(), nu = json::array(), sigma = json::array();
  for (const auto& g : h.gamma_classes)
    gamma.push_back({{"node", r.label(g.node)}, {"dual", r.label(g.dual)}, {"xExp", g.x_exp}});
  for (const auto& n : h.nu) nu.push_back({{"lift", n.lift}, {"xExp", n.x_exp}});
  for (const auto& s : h.sigma) sigma.push_back({{"node", r.label(s.node)}, {"xExp", s.x_exp}});
  json mu_nodes = json::array(), x_nodes = json::array();
  for (int v : h.mu_nodes) mu_nodes.push_back(r.label(v));
  for (int v : h.x_nodes) x_nodes.push_back(r.label(v));
  return dump({{"gammaClasses", gamma},
               {"nu", nu},
               {"sigma", sigma},
               {"relations", h.relations},
               {"zeta", h.zeta ? monomial(*h.zeta) : json(nullptr)},
               {"muNodes", mu_nodes},
               {"xNodes", x_nodes}});
}

std::string vanishing_json(const VanishingResult& v, const F2Subspace& span) {
  return dump({{"vanishes", v.vanishes},
               {"witness", v.witness ? bits(*v.witness) : json(nullptr)},
               {"span_basis", subspace(span)}});
}

std::string marks_json(const MarkedDiagram& rule, const MarkedDiagram& computed) {
  const auto span = span_of_marks(rule);
  return dump({{"rule", marks(rule)},
               {"computed", marks(computed)},
               {"spans_agree", span == span_of_marks(computed)},
               {"span_basis", subspace(span)},
               {"white", labels(rule.diagram(), rule.parabolic.white())}});
}

std::string twist_space_json(const ParabolicSubset& p, const F2Subspace& span) {
  return dump({{"basis", subspace(span)}, {"white", labels(p.diagram(), p.white())}});
}

std::string zeta_json(const std::optional<Monomial>& z) {
  return dump({{"zeta", z ? monomial(*z) : json(nullptr)}});
}

std::string k0_json(const QuotientModel& m, const IntVector& twist, const TateDims& untwisted, const TateDims& twisted) {
  return dump({{"basis", m.module.labels()},
               {"rank", m.module.rank()},
               {"twist", twist},
               {"untwisted", dims(untwisted)},
               {"twisted", dims(twisted)},
               {"validated", true},
               {"window", {{"degree", m.window.degree}, {"exponent", m.window.exponent}}}});
}

std::string table1_json(const Table1Report& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row = {{"space", r.space},
                {"geometry", r.geometry},
                {"untwisted", dims(r.untwisted)},
                {"twisted", dims(r.twisted)},
                {"expected", {{"untwisted", dims(r.expected_untwisted)}, {"twisted", dims(r.expected_twisted)}}},
                {"pass", r.pass},
                {"note", r.note}};
    if (r.preset_untwisted)
      row["preset"] = {{"untwisted", dims(*r.preset_untwisted)}, {"twisted", dims(*r.preset_twisted)}};
    rows.push_back(std::move(row));
  }
  return dump({{"rows", rows}, {"grassmannianMatches", report.grassmannian_matches}, {"pass", report.pass}});
}

std::string sweep_json(const SweepReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) failures.push_back({{"check", f.check}, {"case", f.key}, {"detail", f.detail}});
  return dump({{"cases", report.cases}, {"checked", report.checked}, {"failures", failures}, {"ok", report.ok()}});
}

std::string canonical_json(std::string_view text) {
  try {
    return dump(json::parse(text));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace wittflags
