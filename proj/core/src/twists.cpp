#include "wittflags/twists.hpp"

#include "wittflags/weyl.hpp"

namespace wittflags {

namespace {

// C-bar entries of v's component between v and the neighbour of each white node.
template <class F>
void for_each_attachment(const ParabolicSubset& p, int v, F&& f) {
  const auto& comp = p.component_for(v);
  const RationalMatrix inv = inverse_cartan(comp.type);
  const auto& white = p.white();
  for (std::size_t b = 0; b < white.size(); ++b) {
    const auto nb = p.neighbour_in(white[b], comp);
    if (!nb) continue;
    f(b, comp, inv, *nb, p.diagram().cartan(*nb, white[b]));
  }
}

}  // namespace

std::vector<Rational> projection_coeffs(const ParabolicSubset& p, int v) {
  std::vector<Rational> out(p.white().size(), Rational(0));
  for_each_attachment(p, v, [&](std::size_t b, const ClassifiedComponent& comp, const RationalMatrix& inv, int nb,
                                int edge) {
    out[b] = -inv(comp.local_of(v) - 1, comp.local_of(nb) - 1) * edge;
  });
  return out;
}

IntVector twist_vector(const ParabolicSubset& p, int v) {
  const int dual = circ_node(p, v);
  IntVector out(p.white().size(), 0);
  for_each_attachment(p, v, [&](std::size_t b, const ClassifiedComponent& comp, const RationalMatrix& inv, int nb,
                                int edge) {
    const int j = comp.local_of(nb) - 1;
    const Rational m = (inv(comp.local_of(v) - 1, j) + inv(comp.local_of(dual) - 1, j)) * edge;
    if (m.denominator() != 1) throw InternalError("twist_vector: non-integral entry in " + comp.type.name());
    out[b] = m.numerator();
  });
  return out;
}

IntVector twist_vector_oracle(const ParabolicSubset& p, int v) {
  const auto tau = circ_oracle(p, v).tau;
  IntVector out;
  out.reserve(p.white().size());
  for (int beta : p.white()) {
    if (tau[beta].denominator() != 1) throw InternalError("twist_vector_oracle: non-integral tau");
    out.push_back(tau[beta].numerator());
  }
  return out;
}

TwistMatrix self_dual_twist_matrix(const ParabolicSubset& p) {
  TwistMatrix out;
  out.rows = p.white();
  for (int v : p.theta())
    if (circ_node(p, v) == v) out.columns.push_back(v);
  out.m = IntMatrix(out.rows.size(), out.columns.size());
  for (std::size_t c = 0; c < out.columns.size(); ++c) {
    const auto col = twist_vector(p, out.columns[c]);
    for (std::size_t r = 0; r < col.size(); ++r) out.m(r, c) = col[r];
  }
  return out;
}

}  // namespace wittflags
