#include "wittflags/weyl.hpp"

#include <numeric>

namespace wittflags {

Weight Weight::from_integers(const IntVector& v) {
  Weight w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rational(v[i]);
  return w;
}

Weight Weight::fundamental(std::size_t rank, int i) {
  Weight w(rank);
  w[i] = 1;
  return w;
}

Weight Weight::simple_root(const DynkinDiagram& d, int j) {
  Weight w(d.rank());
  for (int i = 0; i < d.rank(); ++i) w[i] = d.cartan(j, i);
  return w;
}

bool Weight::integral() const {
  for (const auto& c : coords_)
    if (c.denominator() != 1) return false;
  return true;
}

IntVector Weight::to_integers() const {
  IntVector out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].denominator() != 1) throw InternalError("weight is not integral");
    out[i] = coords_[i].numerator();
  }
  return out;
}

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw DimensionError("weight rank mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < rank(); ++i) out[i] += o[i];
  return out;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Weight Weight::operator*(const Rational& s) const {
  Weight out = *this;
  for (auto& c : out.coords_) c *= s;
  return out;
}

Weight reflect(const DynkinDiagram& d, const Weight& lambda, int i) {
  if (i < 0 || i >= d.rank()) throw ParseError("reflect: unknown node");
  if (lambda.rank() != static_cast<std::size_t>(d.rank())) throw DimensionError("reflect: weight rank mismatch");
  const Rational c = lambda[i];
  if (c == Rational(0)) return lambda;
  Weight out = lambda;
  for (int j = 0; j < d.rank(); ++j) out[j] -= c * d.cartan(i, j);
  return out;
}

Dominated dominate(const Weight& lambda, const ParabolicSubset& p) {
  if (!lambda.integral()) throw InternalError("dominate: weight is not integral");
  int cap = 1;
  for (const auto& c : p.components()) cap += positive_root_count(c.type);
  Dominated out{lambda, 0};
  while (true) {
    int next = -1;
    for (int v : p.theta())
      if (out.weight[v] < Rational(0)) {
        next = v;
        break;
      }
    if (next < 0) return out;
    if (++out.steps > cap) throw InternalError("dominate: iteration cap exceeded");
    out.weight = reflect(p.diagram(), out.weight, next);
  }
}

CircInvolution circ_rule(const ClassifiedComponent& c) {
  const int l = c.type.rank;
  CircInvolution out{std::vector<int>(l)};
  std::iota(out.image.begin(), out.image.end(), 1);
  switch (c.type.family) {
    case Family::A:
      for (int i = 1; i <= l; ++i) out.image[i - 1] = l + 1 - i;
      break;
    case Family::D:
      if (l % 2 == 1) std::swap(out.image[l - 2], out.image[l - 1]);
      break;
    case Family::E:
      if (l == 6) {
        std::swap(out.image[0], out.image[5]);
        std::swap(out.image[2], out.image[4]);
      }
      break;
    default:
      break;
  }
  return out;
}

int circ_node(const ParabolicSubset& p, int v) {
  const auto& c = p.component_for(v);
  return c.nodes[circ_rule(c)(c.local_of(v)) - 1];
}

CircOracleResult circ_oracle(const ParabolicSubset& p, int v) {
  if (!p.contains(v)) throw InternalError("circ_oracle: node is not in Theta");
  const std::size_t n = p.diagram().rank();
  const Weight lambda = dominate(-Weight::fundamental(n, v), p).weight;
  int image = -1;
  for (int u : p.theta()) {
    if (lambda[u] == Rational(0)) continue;
    if (lambda[u] != Rational(1) || image >= 0) throw InternalError("circ_oracle: Theta-part is not a fundamental weight");
    image = u;
  }
  if (image < 0) throw InternalError("circ_oracle: Theta-part vanishes");
  CircOracleResult out{image, lambda - Weight::fundamental(n, image)};
  for (int u : p.theta())
    if (out.tau[u] != Rational(0)) throw InternalError("circ_oracle: tau is not orthogonal to Theta");
  return out;
}

}  // namespace wittflags
