#pragma once

#include <optional>
#include <vector>

#include "octc/curve/curve.hpp"
#include "octc/series/series.hpp"

namespace octc {

// Conductor for a job involving the given l values: lcm of 2l over all of them.
unsigned series_conductor(std::initializer_list<long> ells);

// The curve, framing bound, cleared of negative y powers: sum_j coeffs[j] y^j.
template <class C>
struct CurvePoly {
  std::vector<Series<C>> coeffs;
  long ell = 1;
  long y_shift = 0;  // power of y multiplied in
  std::vector<std::size_t> open_vars;  // roster indices of x (and z)
  Series<C> eval(const Series<C>& y) const;
  Series<C> derivative_eval(const Series<C>& y) const;
};

// Roster: q1..qk, x for outer branes; q-hat, x, z (z = q_a0 / x) for inner.
template <class C>
CurvePoly<C> curve_poly(const CurveEquation& bound, int order, const C& proto, std::optional<int> a0 = std::nullopt);

template <class C>
C lrl_root(const C& proto, long ell, long j);

// The ell local roots kappa_j, j = 1..ell, each verified H(kappa_j) = 0
// through `order`. Throws CheckFailure("degenerate start") if H_y is not a unit.
template <class C>
std::vector<Series<C>> newton_roots(const CurvePoly<C>& poly);

template <class C>
std::vector<Series<C>> newton_roots(const CurveEquation& bound, int order, const C& proto,
                                    std::optional<int> a0 = std::nullopt) {
  return newton_roots(curve_poly(bound, order, proto, a0));
}

// Product of the roots restricted to x = z = 0 equals (-1)^l and their
// elementary symmetric functions rebuild the restricted equation. Returns
// false (nothing checked) when that equation has y powers outside [0, l],
// i.e. when x = 0 does not cut out exactly the l local roots.
template <class C>
bool check_restricted_invariants(const CurvePoly<C>& poly, const std::vector<Series<C>>& roots);

template <class C>
struct ExtraBranches {
  std::vector<Series<C>> roots;  // in the second chart's y
  Monomial prefactor;            // y_plus = prefactor * y_second
};

// Case III: the l2 branches from the second-flag curve (framing bound).
template <class C>
ExtraBranches<C> newton_roots_case3_extra(const CurveEquation& plus2_bound, const Case3Data& c3, int order,
                                          const C& proto);

}  // namespace octc
