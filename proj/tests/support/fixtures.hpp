#pragma once

#include "wittflags/dynkin.hpp"

#include <string_view>

namespace wittflags::testing {

inline ParabolicSubset parabolic(std::string_view diagram, std::string_view theta = "") {
  const auto d = DynkinDiagram::parse(diagram);
  return ParabolicSubset(d, parse_node_list(d, theta));
}

inline Rational q(Integer num, Integer den = 1) { return Rational(num, den); }

}  // namespace wittflags::testing
