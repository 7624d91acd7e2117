#pragma once

// Dynkin diagrams of split simply connected semisimple groups, with Bourbaki
// numbering, and parabolic subsets of their nodes.
//
// Nodes are addressed by a global 0-based index. Component c (0-based) owns the
// contiguous block [offset(c), offset(c) + rank(c)); the node with Bourbaki
// index i (1-based) in that component is offset(c) + i - 1.

#include "wittflags/common.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wittflags {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

struct ComponentType {
  Family family;
  int rank;

  std::string name() const;  // e.g. "B7"
  auto operator<=>(const ComponentType&) const = default;
};

/// Throws ParseError unless the family/rank pair names a valid diagram.
void validate_component_type(ComponentType t);

struct Edge {
  int a;             // global node, a < b
  int b;
  int multiplicity;  // 1, 2 or 3
  int long_end;      // endpoint carrying the longer root; -1 when multiplicity == 1
};

class DynkinDiagram {
 public:
  explicit DynkinDiagram(std::vector<ComponentType> components);

  /// Grammar: FAMILY RANK (';' FAMILY RANK)*, whitespace around tokens ignored.
  static DynkinDiagram parse(std::string_view text);

  const std::vector<ComponentType>& components() const { return components_; }
  int rank() const { return static_cast<int>(component_of_.size()); }
  int offset(int component) const { return offsets_[component]; }
  int component_of(int node) const { return component_of_[node]; }
  int local_index(int node) const { return node - offsets_[component_of_[node]] + 1; }
  int node(int component, int local) const { return offsets_[component] + local - 1; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbours(int node) const { return adjacency_[node]; }
  /// Bond multiplicity between two nodes, 0 if not adjacent.
  int bond(int a, int b) const;
  /// Squared root length relative to the shortest root of the component (1, 2 or 3).
  int length_squared(int node) const { return length_sq_[node]; }

  /// <alpha_row, alpha_col^vee>.
  int cartan(int row, int col) const;

  /// "i" for single-component diagrams, "c.i" otherwise (both 1-based).
  std::string label(int node) const;
  /// Inverse of label(); also accepts "1.i" on single-component diagrams.
  int parse_node(std::string_view text) const;

  std::string spec() const;

  bool operator==(const DynkinDiagram& other) const { return components_ == other.components_; }

 private:
  std::vector<ComponentType> components_;
  std::vector<int> offsets_;
  std::vector<int> component_of_;
  std::vector<int> length_sq_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

inline DynkinDiagram parse_diagram(std::string_view text) { return DynkinDiagram::parse(text); }

/// Block-diagonal Cartan matrix, entry (i, j) = <alpha_i, alpha_j^vee>.
IntMatrix cartan_matrix(const DynkinDiagram& d);

/// Cartan matrix of a single component type in its own Bourbaki indexing.
IntMatrix cartan_matrix(ComponentType t);

/// Exact inverse of cartan_matrix(t).
RationalMatrix inverse_cartan(ComponentType t);

/// Number of positive roots of an irreducible root system of the given type.
int positive_root_count(ComponentType t);

/// Order of the Weyl group of the given type.
Integer weyl_group_order(ComponentType t);

/// A connected set of nodes identified with a standard diagram.
struct ClassifiedComponent {
  ComponentType type;
  std::vector<int> nodes;  // nodes[i - 1] is the global node with Bourbaki index i
  int ambient_component;

  int size() const { return static_cast<int>(nodes.size()); }
  bool contains(int node) const;
  /// Bourbaki index (1-based) of a global node, or 0 if absent.
  int local_of(int node) const;
};

/// Identifies a connected node set of `d` with a standard diagram. The
/// relabelling is checked to be an isomorphism of edge-labelled trees. A
/// two-node double bond is reported as C2 inside a C ambient and B2 otherwise.
ClassifiedComponent classify(const DynkinDiagram& d, std::vector<int> nodes);

class ParabolicSubset {
 public:
  ParabolicSubset(DynkinDiagram diagram, std::vector<int> theta);

  const DynkinDiagram& diagram() const { return diagram_; }
  const std::vector<int>& theta() const { return theta_; }
  const std::vector<int>& white() const { return white_; }
  const std::vector<ClassifiedComponent>& components() const { return components_; }

  bool contains(int node) const { return in_theta_[node]; }
  /// Index into components() of the Theta-component holding `node`; -1 for white nodes.
  int component_index(int node) const { return component_index_[node]; }
  const ClassifiedComponent& component_for(int node) const;
  /// Position of a white node in white(); -1 for Theta nodes.
  int white_index(int node) const { return white_index_[node]; }

  /// Unique neighbour of white node `beta` inside Theta-component `c`, if any.
  std::optional<int> neighbour_in(int beta, const ClassifiedComponent& c) const;
  /// White nodes adjacent to some node of the component, in node order.
  std::vector<int> white_neighbours(const ClassifiedComponent& c) const;

 private:
  DynkinDiagram diagram_;
  std::vector<int> theta_;
  std::vector<int> white_;
  std::vector<bool> in_theta_;
  std::vector<ClassifiedComponent> components_;
  std::vector<int> component_index_;
  std::vector<int> white_index_;
};

/// Parses a comma-separated node list such as "1,2,4" or "1.2,2.1".
std::vector<int> parse_node_list(const DynkinDiagram& d, std::string_view text);

}  // namespace wittflags
