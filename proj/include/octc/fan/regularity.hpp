#pragma once

#include <string>
#include <vector>

#include "octc/fan/stacky_fan.hpp"

namespace octc {

struct RegularityResult {
  bool regular = false;
  std::vector<BigRational> heights;
  BigRational slack = 0;
  // edges or orbifold points whose convexity constraint is tight at the optimum
  std::vector<std::string> binding;
};

constexpr long kHeightBound = 1000000;

// Maximizes the convexity slack t in [0, 1] over heights in [-B, B].
RegularityResult regularity_lp(const ExtendedStackyFan& fan);

}  // namespace octc
