#pragma once

// Weyl group action on weights written in fundamental-weight coordinates.

#include "wittflags/dynkin.hpp"

#include <vector>

namespace wittflags {

/// Coordinate i is the pairing with the simple coroot i, so omega_i is the
/// i-th standard basis vector and alpha_j is row j of the Cartan matrix.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, Rational(0)) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  static Weight from_integers(const IntVector& v);

  static Weight fundamental(std::size_t rank, int i);
  static Weight simple_root(const DynkinDiagram& d, int j);

  std::size_t rank() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool integral() const;
  /// Throws InternalError unless integral.
  IntVector to_integers() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(const Rational& s) const;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight& o) const { return coords_ <=> o.coords_; }

 private:
  std::vector<Rational> coords_;
};

/// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
Weight reflect(const DynkinDiagram& d, const Weight& lambda, int i);

struct Dominated {
  Weight weight;
  int steps;
};

/// Representative of the W_Theta-orbit of an integral weight with every
/// Theta-coordinate nonnegative. Always reflects at the smallest-index
/// negative Theta-coordinate.
Dominated dominate(const Weight& lambda, const ParabolicSubset& p);

/// theta -> theta° on one classified component, as a permutation of its
/// Bourbaki indices: image[i - 1] is the index of the image of node i.
struct CircInvolution {
  std::vector<int> image;

  int operator()(int local) const { return image[local - 1]; }
  bool operator==(const CircInvolution&) const = default;
};

CircInvolution circ_rule(const ClassifiedComponent& c);

/// Global node of theta° for a Theta-node, via circ_rule.
int circ_node(const ParabolicSubset& p, int v);

struct CircOracleResult {
  int node;    // theta°
  Weight tau;  // dominate(-omega_v) - omega_{theta°}
};

/// Independent computation of theta° and of tau(omega_theta) through dominate.
CircOracleResult circ_oracle(const ParabolicSubset& p, int v);

}  // namespace wittflags
