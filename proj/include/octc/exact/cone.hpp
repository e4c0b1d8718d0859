#pragma once

#include "octc/exact/matrix.hpp"

#include <vector>

namespace octc {

class RationalCone {
 public:
  explicit RationalCone(std::size_t dim = 0, std::vector<RatVec> generators = {});
  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& generators() const { return gens_; }

 private:
  std::size_t dim_;
  std::vector<RatVec> gens_;
};

// {x : e.x = 0 for e in equalities, a.x >= 0 for a in inequalities}
struct HalfspaceForm {
  std::size_t dim = 0;
  std::vector<RatVec> equalities;
  std::vector<RatVec> inequalities;
  bool contains(const RatVec& v) const;
};

// Exact rational LP feasibility of v = G lambda, lambda >= 0.
bool cone_contains(const RationalCone& c, const RatVec& v);
std::size_t cone_dimension(const RationalCone& c);
HalfspaceForm facets(const RationalCone& c);
// Extreme rays (plus +- lineality generators) of a halfspace cone; primitive
// integer generators, deduplicated and sorted.
RationalCone cone_from_halfspaces(const HalfspaceForm& h);
RationalCone cone_intersect(const std::vector<RationalCone>& cones);

}  // namespace octc
