#include "octc/gkz/gkz.hpp"

#include <algorithm>

#include "octc/exact/lattice.hpp"

namespace octc {

std::vector<int> complement_indices(const ExtendedStackyFan& fan, const Cone3& sigma) {
  std::vector<int> out;
  for (int i = 1; i <= fan.R(); ++i)
    if (i != sigma[0] && i != sigma[1] && i != sigma[2]) out.push_back(i);
  return out;
}

int cone_index(const ExtendedStackyFan& fan, const Cone3& sigma) {
  auto s = sorted_cone(sigma);
  const auto& cs = fan.cones();
  auto it = std::find(cs.begin(), cs.end(), s);
  if (it == cs.end()) throw PreconditionError("cone " + to_string(s) + " not in fan " + fan.name());
  return static_cast<int>(it - cs.begin());
}

GKZData gkz_data(const ExtendedStackyFan& fan, const std::optional<IntMatrix>& charges) {
  GKZData g;
  g.k = fan.k();
  const IntMatrix beta = fan.beta();
  if (charges) {
    const IntMatrix& c = *charges;
    if (c.rows() != static_cast<std::size_t>(fan.R()) || c.cols() != static_cast<std::size_t>(g.k))
      throw CheckFailure("charge matrix must be R x (R-3)");
    IntMatrix prod = beta * c;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j)
        if (prod(i, j) != 0) throw CheckFailure("charge vector " + std::to_string(j + 1) + " is not in ker(beta)");
    if (g.k > 0) {
      auto sm = smith(c);
      for (const auto& d : sm.diag)
        if (d != 1) throw CheckFailure("charge vectors do not form a Z-basis of ker(beta)");
    }
    g.L_basis = c;
  } else {
    g.L_basis = kernel_basis(beta);
  }
  for (int i = 0; i < fan.R(); ++i) g.D.push_back(to_rat(g.L_basis.row(i)));
  for (const auto& sigma : fan.cones()) {
    std::vector<RatVec> gens;
    for (int i : complement_indices(fan, sigma)) gens.push_back(g.d(i));
    g.nef_sigma.emplace_back(g.k, gens);
  }
  if (g.k == 0) {
    g.nef = RationalCone(0);
    g.nef_h.dim = 0;
  } else {
    g.nef = cone_intersect(g.nef_sigma);
    g.nef_h = facets(g.nef);
    if (cone_dimension(g.nef) != static_cast<std::size_t>(g.k))
      throw CheckFailure("extended Nef cone is not full-dimensional");
  }
  std::vector<RatVec> orb;
  for (int i : fan.orbifold()) orb.push_back(g.d(i));
  g.pic_rank = g.k - (orb.empty() ? 0 : static_cast<int>(rank(RatMatrix::from_rows(orb, g.k))));
  return g;
}


}  // namespace octc
