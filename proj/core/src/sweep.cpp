#include "wittflags/sweep.hpp"

#include "wittflags/marks.hpp"
#include "wittflags/twists.hpp"
#include "wittflags/weyl.hpp"

#include <algorithm>

namespace wittflags {

std::vector<ComponentType> connected_types(int max_rank) {
  std::vector<ComponentType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int r = 1; r <= max_rank; ++r) {
      try {
        validate_component_type({f, r});
      } catch (const ParseError&) {
        continue;
      }
      out.push_back({f, r});
    }
  return out;
}

std::vector<std::vector<int>> all_thetas(int rank) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> theta;
    for (int i = 0; i < rank; ++i)
      if (mask >> i & 1) theta.push_back(i);
    out.push_back(std::move(theta));
  }
  return out;
}

std::string case_key(const ParabolicSubset& p) {
  std::string out = p.diagram().spec() + " {";
  for (std::size_t i = 0; i < p.theta().size(); ++i) out += (i ? "," : "") + p.diagram().label(p.theta()[i]);
  return out + "}";
}

bool relations_hold(const TatePresentation& h) {
  for (const auto& nu : h.nu) {
    IntVector rhs(h.x_nodes.size(), 0);
    for (std::size_t j = 0; j < nu.lift.size(); ++j)
      for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] += nu.lift[j] * h.sigma[j].x_exp[k];
    for (std::size_t k = 0; k < rhs.size(); ++k)
      if (2 * nu.x_exp[k] != rhs[k]) return false;
  }
  return true;
}

std::size_t SweepReport::failures_of(const std::string& check) const {
  return static_cast<std::size_t>(
      std::count_if(failures.begin(), failures.end(), [&](const SweepFailure& f) { return f.check == check; }));
}

SweepReport sweep(const SweepOptions& options) {
  SweepReport report;
  auto fail = [&](std::string check, std::string key, std::string detail) {
    report.failures.push_back({std::move(check), std::move(key), std::move(detail)});
  };
  for (const auto& type : connected_types(options.max_rank)) {
    const DynkinDiagram d({type});
    for (const auto& theta : all_thetas(type.rank)) {
      const ParabolicSubset p(d, theta);
      const std::string key = case_key(p);
      ++report.cases;
      try {
        if (options.marks) {
          for (int v : p.theta()) {
            ++report.checked["circ"];
            const int oracle = circ_oracle(p, v).node;
            if (oracle != circ_node(p, v))
              fail("circ", key, "node " + d.label(v) + ": rule " + d.label(circ_node(p, v)) + ", oracle " + d.label(oracle));
            ++report.checked["twist"];
            if (twist_vector(p, v) != twist_vector_oracle(p, v)) fail("twist", key, "node " + d.label(v));
          }
          ++report.checked["marks"];
          const auto rule = span_of_marks(rule_marks(p));
          const auto computed = span_of_marks(computed_marks(p));
          if (!(rule == computed)) fail("marks", key, "rule span differs from computed span");
        }
        if (options.presentations && type.rank <= options.presentation_max_rank) {
          const auto ring = rep_ring_model(p);
          const auto h = h_presentation(ring);
          ++report.checked["relations"];
          if (!relations_hold(h)) fail("relations", key, "nu^2 = sigma^lift fails");
          ++report.checked["presentation"];
          const IntVector zero(ring.k_nodes.size(), 0);
          const auto brute = brute_fixed_monomials(ring, zero, options.max_mu, options.max_x);
          const auto products = presentation_products(h, options.max_mu, options.max_x);
          if (brute != products)
            fail("presentation", key,
                 std::to_string(brute.size()) + " fixed monomials, " + std::to_string(products.size()) + " products");
        }
      } catch (const Error& e) {
        fail("exception", key, e.what());
      }
    }
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const SweepFailure& a, const SweepFailure& b) { return a.check < b.check; });
  return report;
}

}  // namespace wittflags
