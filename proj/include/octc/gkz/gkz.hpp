#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "octc/exact/cone.hpp"
#include "octc/fan/stacky_fan.hpp"

namespace octc {

struct GKZData {
  int k = 0;
  IntMatrix L_basis;              // R x k, columns a Z-basis of ker(beta)
  std::vector<RatVec> D;          // D[i-1] in L^dual = Z^k
  std::vector<RationalCone> nef_sigma;  // parallel to fan.cones()
  RationalCone nef;
  HalfspaceForm nef_h;
  int pic_rank = 0;
  const RatVec& d(int i) const { return D.at(i - 1); }
};

// charges, when given, must be a Z-basis of ker(beta) (columns); otherwise a
// normalized basis is computed.
GKZData gkz_data(const ExtendedStackyFan& fan, const std::optional<IntMatrix>& charges = std::nullopt);

// Indices of points not among the cone's vertices (rays off the cone plus all
// orbifold points), ascending.
std::vector<int> complement_indices(const ExtendedStackyFan& fan, const Cone3& sigma);
int cone_index(const ExtendedStackyFan& fan, const Cone3& sigma);

struct PBasis {
  std::vector<RatVec> p;    // integer vectors after rescaling
  std::vector<int> A_K;     // 1-based, ascending
  std::vector<int> A_orb;   // 1-based, ascending
  std::map<int, int> iota;  // orbifold point -> a
  std::vector<IntMatrix> s; // per cone of the fan, k x R
  int k() const { return static_cast<int>(p.size()); }
  const IntMatrix& s_matrix(const ExtendedStackyFan& fan, const Cone3& sigma) const;
};

class PBasisError : public CheckFailure {
 public:
  PBasisError(std::string condition, const std::string& detail)
      : CheckFailure(condition + ": " + detail), condition_(std::move(condition)) {}
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

// Checks conditions (i)-(iv) and nef membership; throws PBasisError naming the
// condition. Does not rescale.
PBasis check_pbasis(const ExtendedStackyFan& fan, const GKZData& gkz, const std::vector<RatVec>& p);
// Rescales each p_a (a in A_K) by the lcm of the denominators of its
// expansion coefficients over all cones of all the given fans.
std::vector<RatVec> integral_rescaling(const std::vector<const ExtendedStackyFan*>& fans,
                                       const std::vector<const GKZData*>& gkzs,
                                       const std::vector<RatVec>& p, const std::vector<bool>& rescalable);

constexpr int kPBasisSearchBound = 20;

PBasis select_pbasis(const ExtendedStackyFan& fan, const GKZData& gkz,
                     const std::optional<std::vector<RatVec>>& hints = std::nullopt);

IntVec s_monomial(const ExtendedStackyFan& fan, const PBasis& pb, const Cone3& sigma, int i);

// Exponent vector of q^alpha for an inner brane, with the divisibility checks.
IntVec q_alpha(const ExtendedStackyFan& fan, const GKZData& gkz, const PBasis& pb, const Brane& brane);
// Same exponents computed from the intersection numbers of the compact curve.
RatVec q_alpha_pairing(const ExtendedStackyFan& fan, const GKZData& gkz, const PBasis& pb, const Brane& brane);

// Integer points of Z^k with coordinate absolute sum <= bound, ordered by
// (sum, lexicographic).
std::vector<RatVec> lattice_points_by_size(int k, int bound);

}  // namespace octc
