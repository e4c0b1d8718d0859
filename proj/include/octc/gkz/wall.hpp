#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octc/curve/monomial.hpp"
#include "octc/gkz/gkz.hpp"

namespace octc {

enum class WallKind { flop, resolution };
enum class WallCase { I, IIa, IIb, III };
std::string to_string(WallKind k);
std::string to_string(WallCase c);

struct WallData {
  WallKind kind = WallKind::flop;
  Edge tau_ex_minus{0, 0};  // flop only
  Edge tau_ex_plus{0, 0};
  int i_ex = 0;  // resolution only
  std::vector<Cone3> removed;  // cones of the minus fan replaced
  std::vector<Cone3> added;    // cones of the plus fan replacing them
};

// Throws CheckFailure("not a single wall: ...") unless the two
// triangulations differ by one flop or one star subdivision, the plus fan
// being the finer one for a resolution.
WallData classify_wall_crossing(const ExtendedStackyFan& plus, const ExtendedStackyFan& minus);

struct Transport {
  WallCase kase = WallCase::I;
  // Case III: the brane on the edge through i3 of the minus flag first.
  std::vector<Brane> branes_plus;
  // f_minus = f_plus - b (Cases I, II); f_plus2 = f_plus - b' (Case III)
  long b = 0;
  long b_prime = 0;
};

class UnsupportedCase : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};

// Framings of branes_plus follow brane_minus.framing through the shifts.
Transport transport_brane(const ExtendedStackyFan& plus, const ExtendedStackyFan& minus, const WallData& wall,
                          const Brane& brane_minus);

struct WallHints {
  std::optional<RatVec> p1_plus, p1_minus;
  std::optional<std::vector<RatVec>> shared;
};

struct WallPBases {
  PBasis plus, minus;
  HalfspaceForm wall;  // Nef(+) intersected with Nef(-)
};

// Shared p2..pk on the wall, p1 on either side; both bases rescaled together.
WallPBases select_wall_pbases(const ExtendedStackyFan& plus, const GKZData& gkz_plus, const ExtendedStackyFan& minus,
                              const GKZData& gkz_minus, const WallData& wall, const WallHints& hints = {});

struct Case3Data {
  long l1 = 0, l2 = 0;
  BigRational s14 = 0;
  long b_prime = 0;
  // plus chart (x, y) in terms of the second-brane chart is not needed; these
  // send the second chart's variables to plus-chart monomials
  SubstitutionMap subst2;
};

struct WallCrossing {
  WallCase kase = WallCase::I;
  WallData wall;
  RatVec c;  // c_1 > 0
  // minus-chart variable -> plus-chart monomial (q's, x, y, and z when inner)
  SubstitutionMap subst;
  // f_minus = f_plus - framing_shift
  long framing_shift = 0;
  Brane brane_minus;
  std::vector<Brane> branes_plus;
  std::optional<Case3Data> case3;
  std::optional<int> a0;  // inner branes
  BigRational s14 = 0;
  long m4 = 0;
};

WallCrossing parameter_relations(const ExtendedStackyFan& plus, const GKZData& gkz_plus, const PBasis& pb_plus,
                                 const ExtendedStackyFan& minus, const GKZData& gkz_minus, const PBasis& pb_minus,
                                 const WallData& wall, const Brane& brane_minus);

// Index a0 in A_K with q_a0 dividing q^alpha; exclude_first for the minus
// side of a wall.
int select_a0(const ExtendedStackyFan& fan, const GKZData& gkz, const PBasis& pb, const Brane& brane,
              bool exclude_first);

}  // namespace octc
