#pragma once

// Canonical JSON output: keys sorted, integers only, two-space indent.

#include "wittflags/marks.hpp"
#include "wittflags/repring.hpp"
#include "wittflags/sweep.hpp"
#include "wittflags/tate.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace wittflags {

/// {gammaClasses, muNodes, nu, relations, sigma, xNodes, zeta}
std::string presentation_json(const TatePresentation& h, const TwistedPolyRing& r);

/// {span_basis, vanishes, witness}
std::string vanishing_json(const VanishingResult& v, const F2Subspace& span);

/// {computed, rule, span_basis, spans_agree, white}
std::string marks_json(const MarkedDiagram& rule, const MarkedDiagram& computed);

/// {basis, white}
std::string twist_space_json(const ParabolicSubset& p, const F2Subspace& span);

/// {zeta: {muExp, xExp} | null}
std::string zeta_json(const std::optional<Monomial>& z);

/// {basis, rank, twist, twisted, untwisted, validated, window}
std::string k0_json(const QuotientModel& m, const IntVector& twist, const TateDims& untwisted, const TateDims& twisted);

/// {grassmannianMatches, pass, rows: [{expected, geometry, note, pass, space, twisted, untwisted, ...}]}
std::string table1_json(const Table1Report& report);

/// {cases, checked, failures, ok}
std::string sweep_json(const SweepReport& report);

/// Parses and re-emits in canonical form. Throws ParseError on invalid JSON.
std::string canonical_json(std::string_view text);

}  // namespace wittflags
