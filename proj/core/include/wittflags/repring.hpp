#pragma once

// Type A verification oracle: orbit sums in Z[X]^{W_Theta}, the ring
// K_0(G/P) = Rep(P) / (rank zero classes of Rep(G)) as a free Z-module with
// involution, and the projective space table.

#include "wittflags/dynkin.hpp"
#include "wittflags/tate.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wittflags {

/// Finite formal sum of weights (integral, fundamental-weight coordinates).
using InvariantElement = std::map<IntVector, Integer>;

/// Monomials w^b x^a stored as one exponent vector over all nodes: Theta
/// coordinates carry the w-exponents (>= 0), white coordinates the x-exponents.
using GeneratorPolynomial = std::map<IntVector, Integer>;

/// Orbit of `delta` under the group generated by the given simple reflections.
/// Throws InternalError beyond 10000 elements.
std::vector<IntVector> weyl_orbit(const DynkinDiagram& d, const IntVector& delta, const std::vector<int>& reflectors);

/// S(delta): the orbit sum over W_Theta.
InvariantElement orbit_sum(const ParabolicSubset& p, const IntVector& delta);

InvariantElement multiply(const InvariantElement& u, const InvariantElement& v);

/// Unique P with Phi(P) = u, where Phi sends w_theta to S(omega_theta) and
/// x_beta to e^{omega_beta}. Requires a type A ambient and W_Theta-invariant u.
GeneratorPolynomial to_generator_polynomial(const InvariantElement& u, const ParabolicSubset& p);

/// Phi(P), the inverse of to_generator_polynomial.
InvariantElement expand(const GeneratorPolynomial& poly, const ParabolicSubset& p);

std::string to_string(const GeneratorPolynomial& poly, const ParabolicSubset& p);

struct Window {
  int degree = 4;    // total w-degree of the outer window
  int exponent = 2;  // bound on each |x|-exponent of the outer window

  bool operator==(const Window&) const = default;
};

struct QuotientModel {
  InvolutiveZModule module;
  std::vector<IntVector> basis;       // standard monomials
  std::vector<IntVector> x_units;     // x_beta in basis coordinates, per white node
  std::vector<IntVector> x_inverses;  // x_beta^{-1}
  Window window;                      // window that succeeded
  int attempts = 1;

  /// x^t in basis coordinates.
  IntVector twist_unit(const IntVector& t) const;
};

/// |W| / |W_Theta| for a single A_n component.
Integer expected_k0_rank(const ParabolicSubset& p);

/// K_0(G/P) for a single-component type A diagram. The window is doubled on
/// failure, up to `max_attempts` tries.
QuotientModel k0_model(const ParabolicSubset& p, Window initial = {}, int max_attempts = 4);

/// Z[H] / (H - 1)^{n+1} with H* = H^{-1}, basis 1, H, ..., H^n.
QuotientModel projective_space_preset(int n);

struct Table1Row {
  std::string space;     // display name
  std::string geometry;  // diagram and Theta used
  TateDims untwisted;
  TateDims twisted;
  TateDims expected_untwisted;
  TateDims expected_twisted;
  bool pass;
  std::optional<TateDims> preset_untwisted;  // projective spaces only
  std::optional<TateDims> preset_twisted;
  std::string note;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  /// Which of the two Grassmannian readings reproduces the expected dims.
  std::vector<std::string> grassmannian_matches;
  bool pass;
};

Table1Report table1_report();

}  // namespace wittflags
