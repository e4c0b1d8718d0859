#include "doctest.h"

#include "octc/curve/curve.hpp"
#include "octc/io/corpus.hpp"
#include "octc/io/report.hpp"

using namespace octc;

namespace {

struct Setup {
  FanSpec spec;
  GKZData gkz;
  PBasis pb;
};
Setup setup(const std::string& name) {
  FanSpec s = builtin_fan(name);
  GKZData g = gkz_data(s.fan, s.charges);
  PBasis pb = select_pbasis(s.fan, g, s.pbasis);
  return {s, g, pb};
}

std::string curve_of(const std::string& name, int brane = 1, std::optional<long> f = std::nullopt) {
  Setup s = setup(name);
  const BraneSpec& bs = s.spec.branes.at(brane - 1);
  return build_curve(s.spec.fan, s.pb, make_brane(s.spec.fan, bs.edge, 0, bs.cone), f).str();
}

}  // namespace

TEST_CASE("affine exponents and monomials render canonically") {
  CHECK(to_string(Affine(BigRational(-1, 2))) == "-1/2");
  CHECK(to_string(Affine(0, BigRational(1, 2))) == "f/2");
  CHECK(to_string(Affine(-1, -3)) == "-3*f-1");
  Monomial m = Monomial::var("y", Affine(0, -1)) * Monomial::var("x");
  CHECK(m.str() == "x*y^-f");
  Monomial q = Monomial::var("q1", Affine(BigRational(1, 2)));
  CHECK(q.str() == "q1^(1/2)");
  CHECK((q * q).str() == "q1");
  CHECK(q.inverse().str() == "q1^(-1/2)");
  CHECK(Monomial().str() == "1");
  SubstitutionMap rules;
  rules.emplace("x", Monomial::var("x") * Monomial::var("q1", Affine(0, BigRational(1, 2))));
  CHECK(m.substitute(rules).str() == "q1^(f/2)*x*y^-f");
  CHECK(m.shift_framing(1).str() == "x*y^(-f-1)");
  CHECK(m.bind_framing(2).str() == "x*y^-2");
}

TEST_CASE("mirror curves of the fixtures") {
  CHECK(curve_of("a1") == "x*y^-f + q1*y + 1 + y^2");
  CHECK(curve_of("a1", 1, 0L) == "x + q1*y + 1 + y^2");
  CHECK(curve_of("c3", 1, 0L) == "x + y + 1");
  CHECK(curve_of("a2res", 1) == "x*y^-f + y^2 + 1 + q1*y^3 + q2*y");
  CHECK(curve_of("a2res", 2, 0L) == "x + 1 + q1^2*y^-2 + y + q1*q2*y^-1");
  CHECK(curve_of("kp2") == "x*y^-f + y + 1 + q1*x^3*y^(-3*f-1)");
  CHECK(curve_of("c3z3") == "q1*x*y^-f + y + 1 + x^3*y^(-3*f-1)");
  CHECK(curve_of("flop_plus") == "x*y^-f + y + 1 + q1*x*y^(-f-1)");
}

TEST_CASE("A2 resolution: change of flag") {
  Setup s = setup("a2res");
  Brane b1 = make_brane(s.spec.fan, {2, 3}, 0), b2 = make_brane(s.spec.fan, {2, 4}, 0);
  CurveEquation H1 = build_flag_curve(s.spec.fan, s.pb, b1.primary);
  CurveEquation H2 = build_flag_curve(s.spec.fan, s.pb, b2.primary);
  CHECK(H1.str() == "x + y^2 + 1 + q1*y^3 + q2*y");
  CHECK(H2.str() == "x + 1 + q1^2*y^-2 + y + q1*q2*y^-1");
  Reparametrization rp = reparametrize_flag(s.spec.fan, s.pb, H1, b2.primary);
  CHECK(rp.curve.str() == H2.str());
  // H1 = y1^2 H2, y1 = q1^-1 y2
  CHECK(rp.prefactor.str() == "q1^-2*y^2");
  CHECK(to_string(invert_xy_rules(rp.rules)) == "x -> x*y^-2, y -> q1*y");
}

TEST_CASE("every pair of flags reparametrizes consistently") {
  for (const char* name : {"a1", "kp1o", "a2res", "kp2", "c3z3", "flop_plus", "case1_minus", "a1p"}) {
    CAPTURE(name);
    Setup s = setup(name);
    auto flags = enumerate_flags(s.spec.fan);
    for (const auto& a : flags) {
      CurveEquation Ha = build_flag_curve(s.spec.fan, s.pb, a.flag);
      for (const auto& b : flags) CHECK_NOTHROW(reparametrize_flag(s.spec.fan, s.pb, Ha, b.flag));
    }
  }
}

TEST_CASE("wall identification holds term by term with symbolic framing") {
  std::vector<std::pair<const char*, const char*>> pairs = {{"kp1o", "a1"},          {"a2res", "a2"},
                                                            {"kp2", "c3z3"},         {"flop_plus", "flop_minus"},
                                                            {"case1_plus", "case1_minus"}, {"a1pres", "a1p"}};
  for (auto [p, m] : pairs) {
    CAPTURE(p);
    WallJob j = prepare_wall(builtin_fan(p), builtin_fan(m));
    CHECK(j.ident.ok);
    if (j.wc.case3) CHECK(j.ident.second_ok.value_or(false));
  }
}

TEST_CASE("A1: the x relation with f/2 passes and with f fails") {
  WallJob j = prepare_wall(builtin_fan("kp1o"), builtin_fan("a1"));
  FramingRelationCheck fr = framing_relation_check(j);
  CHECK(fr.applicable);
  CHECK(fr.certified == "x- = q1^(f/2)*x");
  CHECK(fr.certified_passes);
  CHECK(fr.alternative == "x- = q1^f*x");
  CHECK_FALSE(fr.alternative_passes);
  CHECK_FALSE(fr.alternative_mismatches.empty());
}

TEST_CASE("perturbed relations fail") {
  WallJob j = prepare_wall(builtin_fan("flop_plus"), builtin_fan("flop_minus"));
  WallCrossing wc = j.wc;
  wc.subst.at("x") = wc.subst.at("x") * Monomial::var("q1");
  CHECK_FALSE(verify_wall_identification(j.H_plus, j.H_minus, wc).ok);
  wc = j.wc;
  wc.framing_shift += 1;
  CHECK_FALSE(verify_wall_identification(j.H_plus, j.H_minus, wc).ok);
}

TEST_CASE("inner brane divisibility") {
  Setup s = setup("a1p");
  Brane b = make_brane(s.spec.fan, {3, 4}, 0, Cone3{1, 3, 4});
  CurveEquation H = build_curve(s.spec.fan, s.pb, b);
  CHECK_NOTHROW(check_inner_divisibility(H, q_alpha(s.spec.fan, s.gkz, s.pb, b)));
  CHECK(H.str() == "x*y^-f + q2*y + 1 + y^2 + q1*x^-1*y^f");
}
