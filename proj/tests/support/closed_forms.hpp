#pragma once

// Closed-form inverse Cartan entries C-bar^{i,j} (1-based) as tabulated for
// the classical families and for E6, E7. Used as an oracle for inverse_cartan.

#include "wittflags/dynkin.hpp"

#include <optional>
#include <vector>

namespace wittflags::testing {

struct ClosedFormEntry {
  int i;
  int j;
  Rational value;
};

inline std::vector<ClosedFormEntry> closed_form_entries(ComponentType t) {
  std::vector<ClosedFormEntry> out;
  const int l = t.rank;
  auto add = [&](int i, int j, Rational v) { out.push_back({i, j, v}); };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
          add(i, j, i <= j ? Rational(i * (l + 1 - j), l + 1) : Rational(j * (l + 1 - i), l + 1));
      break;
    case Family::B:
      for (int i = 1; i <= l; ++i) {
        add(i, 1, i < l ? Rational(1) : Rational(1, 2));
        add(i, l, i < l ? Rational(i) : Rational(l, 2));
      }
      break;
    case Family::C:
      for (int i = 1; i <= l; ++i) {
        add(i, 1, Rational(1));
        add(i, l, Rational(i, 2));
      }
      break;
    case Family::D:
      for (int i = 1; i <= l; ++i) {
        add(i, 1, i < l - 1 ? Rational(1) : Rational(1, 2));
        add(i, l, i < l - 1 ? Rational(i, 2) : i == l - 1 ? Rational(l - 2, 4) : Rational(l, 4));
      }
      break;
    case Family::E:
      if (l == 6) {
        const Rational v[] = {Rational(2, 3), Rational(1), Rational(4, 3), Rational(2), Rational(5, 3), Rational(4, 3)};
        for (int i = 1; i <= 6; ++i) add(i, 6, v[i - 1]);
      } else if (l == 7) {
        const Rational v[] = {Rational(1), Rational(3, 2), Rational(2), Rational(3), Rational(5, 2), Rational(2),
                              Rational(3, 2)};
        for (int i = 1; i <= 7; ++i) add(i, 7, v[i - 1]);
      }
      break;
    default:
      break;
  }
  return out;
}

/// Types carrying closed forms: A, B, C, D up to max_rank, plus E6 and E7.
inline std::vector<ComponentType> closed_form_types(int max_rank) {
  std::vector<ComponentType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = 1; r <= max_rank; ++r) {
      try {
        validate_component_type({f, r});
      } catch (const ParseError&) {
        continue;
      }
      out.push_back({f, r});
    }
  out.push_back({Family::E, 6});
  out.push_back({Family::E, 7});
  return out;
}

}  // namespace wittflags::testing
