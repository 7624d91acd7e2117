#pragma once

// Exhaustive consistency sweep over connected diagrams and all Theta.

#include "wittflags/dynkin.hpp"
#include "wittflags/tate.hpp"

#include <map>
#include <string>
#include <vector>

namespace wittflags {

/// Connected types of rank <= max_rank, by family then rank.
std::vector<ComponentType> connected_types(int max_rank);

/// All 2^rank subsets of a connected diagram, by bitmask (bit i = node i + 1).
std::vector<std::vector<int>> all_thetas(int rank);

/// "D4 {1,3,4}"
std::string case_key(const ParabolicSubset& p);

/// The relations nu^2 = sigma^lift hold as exponent identities.
bool relations_hold(const TatePresentation& h);

struct SweepOptions {
  int max_rank = 6;
  bool marks = true;               // marks spans, involution and twist-vector oracles
  bool presentations = true;       // fixed monomials vs presentation products (t = 0)
  int presentation_max_rank = 6;
  int max_mu = 4;
  int max_x = 6;
};

struct SweepFailure {
  std::string check;
  std::string key;
  std::string detail;
};

struct SweepReport {
  std::size_t cases = 0;
  std::map<std::string, std::size_t> checked;  // per check name
  std::vector<SweepFailure> failures;           // sorted by (check, key)

  bool ok() const { return failures.empty(); }
  std::size_t failures_of(const std::string& check) const;
};

/// Check names: "marks", "circ", "twist", "presentation", "relations", "exception".
SweepReport sweep(const SweepOptions& options);

}  // namespace wittflags
