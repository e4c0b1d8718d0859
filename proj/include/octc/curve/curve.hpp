#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octc/curve/monomial.hpp"
#include "octc/gkz/gkz.hpp"
#include "octc/gkz/wall.hpp"

namespace octc {

struct CurveEquation {
  std::vector<Monomial> terms;  // terms[i-1] belongs to point i
  FlagFrame frame;
  // nullopt: exponents carry the framing symbolically
  std::optional<long> framing;
  int k = 0;

  const Monomial& term(int i) const { return terms.at(i - 1); }
  int R() const { return static_cast<int>(terms.size()); }
  // Terms in index order joined by " + ".
  std::string str() const;
  CurveEquation bind_framing(long f) const;
  // Largest and smallest y exponent; needs a bound framing.
  std::pair<BigRational, BigRational> y_range() const;
};

// The curve in (x, y) with x~ = x y^-f; symbolic framing unless `framing`.
CurveEquation build_curve(const ExtendedStackyFan& fan, const PBasis& pb, const Brane& brane,
                          std::optional<long> framing = std::nullopt);
// Unframed curve sum s_i x~^m_i y~^n_i for a flag.
CurveEquation build_flag_curve(const ExtendedStackyFan& fan, const PBasis& pb, const Flag& flag);

struct Reparametrization {
  CurveEquation curve;  // in the new flag's variables
  Monomial prefactor;   // old(after rules) = prefactor * new, term by term
  SubstitutionMap rules;  // old x, y -> monomials in new x, y, q
};

// Throws CheckFailure naming the first mismatching term.
Reparametrization reparametrize_flag(const ExtendedStackyFan& fan, const PBasis& pb, const CurveEquation& curve,
                                     const Flag& new_flag);
// Solves x_old = ..., y_old = ... for the new variables.
SubstitutionMap invert_xy_rules(const SubstitutionMap& rules);

// Replaces f by f + framing_shift first, then applies the rules.
CurveEquation substitute(const CurveEquation& c, const SubstitutionMap& rules, const BigRational& framing_shift = 0);

struct TermMismatch {
  int index;
  std::string expected, got;
};

struct IdentificationReport {
  bool ok = false;
  std::vector<TermMismatch> mismatches;
  std::optional<bool> second_ok;  // Case III identity with the second brane
  std::vector<TermMismatch> second_mismatches;
  std::string detail() const;
};

// Term-by-term check H_plus = H_minus under the wall relations, and in Case
// III also H_plus = y^l1 H_plus2. Curves must be built with symbolic framing.
IdentificationReport verify_wall_identification(const CurveEquation& plus, const CurveEquation& minus,
                                                const WallCrossing& wc,
                                                const std::optional<CurveEquation>& plus2 = std::nullopt);
// Same check with the x rule replaced.
IdentificationReport check_with_x_rule(const CurveEquation& plus, const CurveEquation& minus, const WallCrossing& wc,
                                       const Monomial& x_rule);

// For inner branes: every term with m_i < 0 is divisible by (q^alpha/x)^(-m_i).
void check_inner_divisibility(const CurveEquation& c, const IntVec& q_alpha_exps);

}  // namespace octc
