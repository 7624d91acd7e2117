#pragma once

// Marked Dynkin diagrams: the per-component marking rules, the marks read off
// twist-vector parities, their spans in Pic/2, and rendering.

#include "wittflags/dynkin.hpp"
#include "wittflags/gf2.hpp"

#include <string>
#include <vector>

namespace wittflags {

/// One vector of Pic/2: the sum of the classes of the supporting white nodes.
struct Mark {
  std::vector<int> support;  // sorted global white nodes
  std::string provenance;
};

struct MarkedDiagram {
  ParabolicSubset parabolic;
  std::vector<Mark> marks;  // deduplicated by support

  const DynkinDiagram& diagram() const { return parabolic.diagram(); }
};

/// One mark per self-dual theta with m^theta not zero mod 2.
MarkedDiagram computed_marks(const ParabolicSubset& p);

/// Marks prescribed by the per-type rules, one Theta-component at a time.
/// Throws InternalError if a component matches no rule.
MarkedDiagram rule_marks(const ParabolicSubset& p);

/// Span of the marks as a subspace of (Z/2)^{white nodes}.
F2Subspace span_of_marks(const MarkedDiagram& m);

enum class RenderFormat { Text, Dot };

RenderFormat parse_render_format(std::string_view name);

std::string render(const MarkedDiagram& m, RenderFormat format);

}  // namespace wittflags
