#pragma once

#include "octc/exact/matrix.hpp"

namespace octc {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  BigRational value = 0;
  RatVec x;
};

// maximize c.x subject to a x = b, x >= 0. Two-phase tableau simplex with
// Bland's rule, exact over the rationals.
LpResult simplex_maximize(const RatMatrix& a, const RatVec& b, const RatVec& c);

}  // namespace octc
