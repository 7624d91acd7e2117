#include "wittflags/tate.hpp"

#include "wittflags/intlinalg.hpp"
#include "wittflags/twists.hpp"
#include "wittflags/weyl.hpp"

#include <algorithm>

namespace wittflags {

namespace {

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = checked_add(a[i], b[i]);
  return a;
}

IntVector times(const IntMatrix& m, const IntVector& v) {
  IntVector out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] = checked_add(out[r], checked_mul(m(r, c), v[c]));
  return out;
}

IntVector halve(const IntVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] % 2 != 0) throw InternalError("odd entry where an even one is required");
    out[i] = v[i] / 2;
  }
  return out;
}

bool within(const Monomial& m, int max_mu, int max_x) {
  for (auto e : m.mu)
    if (e < 0 || e > max_mu) return false;
  for (auto e : m.x)
    if (e < -max_x || e > max_x) return false;
  return true;
}

// Calls f(j) for every j in [0, bound]^n.
template <class F>
void for_each_box(std::size_t n, int bound, F&& f) {
  IntVector j(n, 0);
  while (true) {
    f(j);
    std::size_t i = 0;
    while (i < n && j[i] == bound) j[i++] = 0;
    if (i == n) return;
    ++j[i];
  }
}

}  // namespace

std::string TwistedPolyRing::label(int node) const {
  if (node >= 0 && static_cast<std::size_t>(node) < labels.size()) return labels[node];
  return std::to_string(node + 1);
}

IntMatrix TwistedPolyRing::twist_matrix() const {
  IntMatrix m(k_nodes.size(), self_dual.size());
  for (std::size_t c = 0; c < self_dual.size(); ++c)
    for (std::size_t r = 0; r < k_nodes.size(); ++r) m(r, c) = self_dual[c].m[r];
  return m;
}

void TwistedPolyRing::validate() const {
  for (const auto& p : pairs)
    if (p.c.size() != k_nodes.size()) throw DimensionError("twist vector length differs from |K|");
  for (const auto& s : self_dual)
    if (s.m.size() != k_nodes.size()) throw DimensionError("twist vector length differs from |K|");
}

TwistedPolyRing rep_ring_model(const ParabolicSubset& p) {
  TwistedPolyRing r;
  r.k_nodes = p.white();
  for (int v = 0; v < p.diagram().rank(); ++v) r.labels.push_back(p.diagram().label(v));
  for (int v : p.theta()) {
    const int dual = circ_node(p, v);
    if (dual == v) {
      r.self_dual.push_back({v, twist_vector(p, v)});
    } else if (v < dual) {
      auto c = twist_vector(p, v);
      if (c != twist_vector(p, dual)) throw InternalError("m^theta differs from m^theta°");
      r.pairs.push_back({v, dual, std::move(c)});
    }
  }
  r.validate();
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.mu.size() != b.mu.size() || a.x.size() != b.x.size()) throw DimensionError("monomial shapes differ");
  return {add(a.mu, b.mu), add(a.x, b.x)};
}

bool is_self_dual(const TwistedPolyRing& r, const Monomial& m, const IntVector& t) {
  if (t.size() != r.k_nodes.size() || m.x.size() != t.size() || m.mu.size() != r.self_dual.size())
    throw DimensionError("is_self_dual: size mismatch");
  const IntVector mj = times(r.twist_matrix(), m.mu);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (mj[i] - 2 * m.x[i] != -t[i]) return false;
  return true;
}

VanishingResult vanishes(const TwistedPolyRing& r, const IntVector& t) {
  if (t.size() != r.k_nodes.size()) throw DimensionError("vanishes: twist length differs from |K|");
  auto sol = solve(F2Matrix::reduce(r.twist_matrix()), reduce_mod2(t));
  if (!sol) return {true, std::nullopt};
  return {false, std::move(sol)};
}

std::string to_string(const TwistedPolyRing& r, const Monomial& m) {
  std::string out;
  auto factor = [&](const std::string& name, Integer e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  for (std::size_t j = 0; j < m.mu.size(); ++j) factor("mu" + r.label(r.self_dual[j].node), m.mu[j]);
  for (std::size_t k = 0; k < m.x.size(); ++k) factor("x" + r.label(r.k_nodes[k]), m.x[k]);
  return out.empty() ? "1" : out;
}

F2Subspace twist_space(const TwistedPolyRing& r) {
  return column_space(F2Matrix::reduce(r.twist_matrix()));
}

std::optional<Monomial> zeta(const TwistedPolyRing& r, const IntVector& t) {
  const auto v = vanishes(r, t);
  if (v.vanishes) return std::nullopt;
  IntVector j0(r.self_dual.size());
  for (std::size_t i = 0; i < j0.size(); ++i) j0[i] = (*v.witness)[i] ? 1 : 0;
  Monomial z{j0, halve(add(times(r.twist_matrix(), j0), t))};
  if (!is_self_dual(r, z, t)) throw InternalError("zeta is not self-dual");
  return z;
}

Monomial TatePresentation::nu_monomial(std::size_t i) const {
  return {IntVector(nu[i].lift.begin(), nu[i].lift.end()), nu[i].x_exp};
}

Monomial TatePresentation::sigma_monomial(std::size_t i) const {
  IntVector mu(mu_nodes.size(), 0);
  mu[i] = 2;
  return {mu, sigma[i].x_exp};
}

TatePresentation h_presentation(const TwistedPolyRing& r, const std::optional<IntVector>& t) {
  r.validate();
  TatePresentation h;
  for (const auto& s : r.self_dual) h.mu_nodes.push_back(s.node);
  h.x_nodes = r.k_nodes;
  for (const auto& p : r.pairs) h.gamma_classes.push_back({p.node, p.dual, p.c});
  for (const auto& s : r.self_dual) h.sigma.push_back({s.node, s.m});

  const IntMatrix m = r.twist_matrix();
  const auto kernel = nullspace(F2Matrix::reduce(m));
  for (const auto& b : kernel.basis()) {
    TatePresentation::Nu nu;
    for (std::size_t j = 0; j < b.size(); ++j) nu.lift.push_back(b[j] ? 1 : 0);
    nu.x_exp = halve(times(m, IntVector(nu.lift.begin(), nu.lift.end())));
    std::string name, rhs;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) continue;
      const std::string l = r.label(r.self_dual[j].node);
      name += (name.empty() ? "" : ",") + l;
      rhs += (rhs.empty() ? "" : "*") + ("sigma[" + l + "]");
    }
    h.relations.push_back("nu[" + name + "]^2 = " + rhs);
    h.nu.push_back(std::move(nu));
  }
  if (t) h.zeta = zeta(r, *t);
  return h;
}

std::vector<Monomial> brute_fixed_monomials(const TwistedPolyRing& r, const IntVector& t, int max_mu, int max_x) {
  if (max_mu <= 0 || max_x <= 0) throw DimensionError("brute_fixed_monomials: bounds must be positive");
  if (t.size() != r.k_nodes.size()) throw DimensionError("brute_fixed_monomials: twist length differs from |K|");
  const IntMatrix m = r.twist_matrix();
  std::vector<Monomial> out;
  // For each j the fixed-point equation determines k, so the (j, k) grid
  // reduces to a scan over j.
  for_each_box(r.self_dual.size(), max_mu, [&](const IntVector& j) {
    const IntVector s = add(times(m, j), t);
    for (auto e : s)
      if (e % 2 != 0) return;
    Monomial mono{j, halve(s)};
    if (within(mono, max_mu, max_x)) out.push_back(std::move(mono));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> presentation_products(const TatePresentation& h, int max_mu, int max_x) {
  const std::size_t nj = h.mu_nodes.size(), nk = h.x_nodes.size();
  std::vector<Monomial> out;
  const std::size_t subsets = std::size_t(1) << h.nu.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    Monomial base{IntVector(nj, 0), IntVector(nk, 0)};
    for (std::size_t i = 0; i < h.nu.size(); ++i)
      if (mask >> i & 1) base = base * h.nu_monomial(i);
    if (std::any_of(base.mu.begin(), base.mu.end(), [&](Integer e) { return e > max_mu; })) continue;
    // Sigma exponents r with base.mu + 2r inside the mu-box.
    for_each_box(nj, max_mu / 2, [&](const IntVector& rexp) {
      Monomial prod = base;
      for (std::size_t j = 0; j < nj; ++j) {
        if (rexp[j] == 0) continue;
        prod.mu[j] += 2 * rexp[j];
        for (std::size_t k = 0; k < nk; ++k) prod.x[k] += rexp[j] * h.sigma[j].x_exp[k];
      }
      if (within(prod, max_mu, max_x)) out.push_back(std::move(prod));
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

InvolutiveZModule::InvolutiveZModule(IntMatrix s, std::vector<std::string> labels)
    : s_(std::move(s)), labels_(std::move(labels)) {
  if (s_.rows() != s_.cols()) throw DimensionError("involution matrix is not square");
  if (s_ * s_ != IntMatrix::identity(s_.rows())) throw InternalError("involution does not square to the identity");
}

InvolutiveZModule::InvolutiveZModule(IntMatrix s, IntVector unit, std::vector<std::vector<IntVector>> mult,
                                     std::vector<std::string> labels)
    : InvolutiveZModule(std::move(s), std::move(labels)) {
  unit_ = std::move(unit);
  mult_ = std::move(mult);
  validate_ring();
}

IntVector InvolutiveZModule::basis_vector(std::size_t i) const {
  IntVector v(rank(), 0);
  v[i] = 1;
  return v;
}

IntVector InvolutiveZModule::apply(const IntVector& v) const {
  if (v.size() != rank()) throw DimensionError("apply: vector length differs from rank");
  return times(s_, v);
}

IntVector InvolutiveZModule::multiply(const IntVector& a, const IntVector& b) const {
  if (a.size() != rank() || b.size() != rank()) throw DimensionError("multiply: vector length differs from rank");
  if (mult_.empty()) throw InternalError("multiply: module has no ring structure");
  IntVector out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (b[j] == 0) continue;
      const Integer f = checked_mul(a[i], b[j]);
      const auto& e = mult_[i][j];
      for (std::size_t k = 0; k < rank(); ++k) out[k] = checked_add(out[k], checked_mul(f, e[k]));
    }
  }
  return out;
}

void InvolutiveZModule::validate_ring() const {
  const std::size_t n = rank();
  if (unit_.size() != n || mult_.size() != n) throw DimensionError("ring data does not match the rank");
  for (const auto& row : mult_) {
    if (row.size() != n) throw DimensionError("multiplication table is not square");
    for (const auto& e : row)
      if (e.size() != n) throw DimensionError("structure constant vector has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto ei = basis_vector(i);
    if (multiply(unit_, ei) != ei) throw InternalError("ring validation: unit fails");
    for (std::size_t j = 0; j < n; ++j) {
      const auto ej = basis_vector(j);
      if (mult_[i][j] != mult_[j][i]) throw InternalError("ring validation: not commutative");
      if (apply(mult_[i][j]) != multiply(apply(ei), apply(ej)))
        throw InternalError("ring validation: involution is not multiplicative");
      for (std::size_t k = 0; k < n; ++k) {
        const auto ek = basis_vector(k);
        if (multiply(mult_[i][j], ek) != multiply(ei, mult_[j][k]))
          throw InternalError("ring validation: not associative");
      }
    }
  }
}

namespace {

// dim_F2 of ker(a) / im(b), where im(b) sits inside ker(a) with 2 ker(a) inside im(b).
int quotient_dim(const IntMatrix& a, const IntMatrix& b) {
  const auto red = column_reduce(to_big(a));
  const std::size_t n = a.cols(), k = n - red.rank;
  if (k == 0) return 0;
  const BigMatrix coords = red.u_inverse * to_big(b);
  BigMatrix y(k, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (r < red.rank) {
        if (coords(r, c) != 0) throw InternalError("tate_dims: image is not inside the kernel");
      } else {
        y(r - red.rank, c) = coords(r, c);
      }
    }
  const auto factors = invariant_factors(y);
  if (factors.size() != k) throw InternalError("tate_dims: image has smaller rank than the kernel");
  int dim = 0;
  for (const auto& f : factors) {
    if (f == 2) ++dim;
    else if (f != 1) throw InternalError("tate_dims: quotient is not an elementary 2-group");
  }
  return dim;
}

}  // namespace

TateDims tate_dims(const IntMatrix& s) {
  const std::size_t n = s.rows();
  if (s * s != IntMatrix::identity(n)) throw InternalError("tate_dims: involution does not square to the identity");
  IntMatrix minus = s, plus = s;
  for (std::size_t i = 0; i < n; ++i) {
    minus(i, i) -= 1;
    plus(i, i) += 1;
  }
  return {quotient_dim(minus, plus), quotient_dim(plus, minus)};
}

TateDims tate_dims(const InvolutiveZModule& m, const std::optional<IntVector>& twist) {
  if (!twist) return tate_dims(m.involution());
  if (!m.has_ring()) throw InternalError("tate_dims: twisting needs ring data");
  if (m.multiply(*twist, m.apply(*twist)) != m.unit())
    throw InternalError("tate_dims: twist unit l does not satisfy l * l^* = 1");
  const std::size_t n = m.rank();
  IntMatrix s(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = m.multiply(m.apply(m.basis_vector(j)), *twist);
    for (std::size_t i = 0; i < n; ++i) s(i, j) = col[i];
  }
  return tate_dims(s);
}

IntMatrix tensor_involution(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace wittflags
