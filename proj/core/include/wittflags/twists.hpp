#pragma once

// Twist vectors m^theta over the white nodes: the coordinates of
// tau(omega_theta) = -pi(omega_theta) - pi(omega_theta°), where pi is the
// projection away from the Theta-roots.

#include "wittflags/dynkin.hpp"

#include <vector>

namespace wittflags {

/// c_{theta beta} for every white beta, in white() order.
std::vector<Rational> projection_coeffs(const ParabolicSubset& p, int v);

/// m^theta_beta for every white beta, from inverse Cartan entries.
IntVector twist_vector(const ParabolicSubset& p, int v);

/// m^theta read off circ_oracle; uses no inverse Cartan matrices.
IntVector twist_vector_oracle(const ParabolicSubset& p, int v);

struct TwistMatrix {
  std::vector<int> rows;     // white nodes
  std::vector<int> columns;  // self-dual Theta-nodes, in node order
  IntMatrix m;               // m(r, c) = m^{columns[c]}_{rows[r]}

  IntVector column(std::size_t c) const { return m.column(c); }
};

TwistMatrix self_dual_twist_matrix(const ParabolicSubset& p);

}  // namespace wittflags
