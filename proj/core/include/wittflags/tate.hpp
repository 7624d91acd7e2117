#pragma once

// Tate cohomology h^+ = ker(1 - *) / im(1 + *), h^- = ker(1 + *) / im(1 - *):
// a symbolic presentation for twisted polynomial rings, a Smith normal form
// engine for free Z-modules with involution, and a monomial enumeration oracle.

#include "wittflags/dynkin.hpp"
#include "wittflags/gf2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wittflags {

/// Z[gamma_i, gamma_i', mu_j, x_k^{+-1}] with
///   gamma_i* = gamma_i' x^{c^i},  mu_j* = mu_j x^{m^j},  x_k* = x_k^{-1}.
struct TwistedPolyRing {
  struct Pair {
    int node;  // gamma
    int dual;  // gamma'
    IntVector c;
  };
  struct SelfDual {
    int node;
    IntVector m;
  };

  std::vector<int> k_nodes;
  std::vector<Pair> pairs;
  std::vector<SelfDual> self_dual;
  std::vector<std::string> labels;  // display label per node id; defaults to the id + 1

  std::string label(int node) const;
  /// The |K| x |J| matrix M whose columns are the m^j.
  IntMatrix twist_matrix() const;
  /// Throws DimensionError on inconsistent vector lengths.
  void validate() const;
};

/// The representation ring of the parabolic P_Theta as a twisted polynomial ring.
TwistedPolyRing rep_ring_model(const ParabolicSubset& p);

/// mu^mu x^x, exponents over J and K.
struct Monomial {
  IntVector mu;
  IntVector x;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// e.g. "mu1*mu3*x2^-1", "1" for the unit.
std::string to_string(const TwistedPolyRing& r, const Monomial& m);

/// True iff the monomial is fixed by the x^t-twisted involution: M mu - 2x = -t.
bool is_self_dual(const TwistedPolyRing& r, const Monomial& m, const IntVector& t);

struct VanishingResult {
  bool vanishes;
  std::optional<BitVector> witness;  // solution of M-bar j = t-bar when nonzero
};

VanishingResult vanishes(const TwistedPolyRing& r, const IntVector& t);

/// Column space of M mod 2: the twists over K whose Tate cohomology is nonzero.
F2Subspace twist_space(const TwistedPolyRing& r);

struct TatePresentation {
  struct GammaClass {
    int node;
    int dual;
    IntVector x_exp;  // gamma gamma' x^{c}
  };
  struct Nu {
    std::vector<int> lift;  // 0/1 over J
    IntVector x_exp;        // M lift / 2
  };
  struct Sigma {
    int node;
    IntVector x_exp;  // m^j
  };

  std::vector<int> mu_nodes;
  std::vector<int> x_nodes;
  std::vector<GammaClass> gamma_classes;
  std::vector<Nu> nu;
  std::vector<Sigma> sigma;
  std::vector<std::string> relations;
  std::optional<Monomial> zeta;

  Monomial nu_monomial(std::size_t i) const;
  Monomial sigma_monomial(std::size_t i) const;
};

/// Generators and relations of h(A); h^- is zero for these rings. When a twist
/// is given, zeta is filled in for it (and left empty if the twist vanishes).
TatePresentation h_presentation(const TwistedPolyRing& r, const std::optional<IntVector>& t = std::nullopt);

/// mu^{j0} x^{(M j0 + t)/2} for the particular solution j0 with free variables zero.
std::optional<Monomial> zeta(const TwistedPolyRing& r, const IntVector& t);

/// All mu^j x^k with j in [0, D]^|J|, k in [-E, E]^|K| and M j - 2k = -t, sorted.
std::vector<Monomial> brute_fixed_monomials(const TwistedPolyRing& r, const IntVector& t, int max_mu, int max_x);

/// Products of presentation generators (nu at most once each, sigma freely)
/// whose exponents stay within the same bounds, sorted.
std::vector<Monomial> presentation_products(const TatePresentation& h, int max_mu, int max_x);

/// Free Z-module with an involution and optional commutative ring structure.
class InvolutiveZModule {
 public:
  /// Column j of s is the image of basis element j.
  explicit InvolutiveZModule(IntMatrix s, std::vector<std::string> labels = {});
  /// mult[i][j] holds the coordinates of e_i * e_j.
  InvolutiveZModule(IntMatrix s, IntVector unit, std::vector<std::vector<IntVector>> mult,
                    std::vector<std::string> labels = {});

  std::size_t rank() const { return s_.rows(); }
  const IntMatrix& involution() const { return s_; }
  bool has_ring() const { return !mult_.empty() || rank() == 0; }
  const IntVector& unit() const { return unit_; }
  const std::vector<std::string>& labels() const { return labels_; }

  IntVector apply(const IntVector& v) const;
  IntVector multiply(const IntVector& a, const IntVector& b) const;
  IntVector basis_vector(std::size_t i) const;

 private:
  void validate_ring() const;

  IntMatrix s_;
  IntVector unit_;
  std::vector<std::vector<IntVector>> mult_;
  std::vector<std::string> labels_;
};

struct TateDims {
  int plus;
  int minus;

  bool operator==(const TateDims&) const = default;
};

/// F_2-dimensions of h^+ and h^-, for the involution twisted by `twist`
/// (v -> S(v) * twist) when given.
TateDims tate_dims(const InvolutiveZModule& m, const std::optional<IntVector>& twist = std::nullopt);

/// Dimensions for an explicit involution matrix (no ring data needed).
TateDims tate_dims(const IntMatrix& s);

/// Kronecker product of two involutions.
IntMatrix tensor_involution(const IntMatrix& a, const IntMatrix& b);

}  // namespace wittflags
