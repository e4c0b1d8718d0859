#include "doctest.h"

#include "octc/gkz/gkz.hpp"
#include "octc/gkz/wall.hpp"
#include "octc/io/corpus.hpp"

using namespace octc;

namespace {

struct Loaded {
  FanSpec spec;
  GKZData gkz;
};
Loaded load(const std::string& name) {
  FanSpec s = builtin_fan(name);
  return {s, gkz_data(s.fan, s.charges)};
}

RatVec rv(std::initializer_list<long> v) { return to_rat_vec(std::vector<long>(v)); }

}  // namespace

TEST_CASE("A1 divisor classes and Nef cone") {
  auto a1 = load("a1");
  REQUIRE(a1.gkz.k == 1);
  std::vector<RatVec> want = {rv({0}), rv({-2}), rv({1}), rv({1})};
  CHECK(a1.gkz.D == want);
  REQUIRE(a1.gkz.nef.generators().size() == 1);
  CHECK(a1.gkz.nef.generators()[0] == rv({-2}));
  CHECK(cone_contains(a1.gkz.nef, rv({-2})));
  CHECK_FALSE(cone_contains(a1.gkz.nef, rv({1})));
  CHECK(a1.gkz.pic_rank == 0);
}

TEST_CASE("K_P1 + O Nef cone is the positive ray") {
  auto k = load("kp1o");
  REQUIRE(k.gkz.nef.generators().size() == 1);
  CHECK(k.gkz.nef.generators()[0] == rv({1}));
  CHECK(k.gkz.pic_rank == 1);
}

TEST_CASE("C3 has no Kahler parameters") {
  auto c = load("c3");
  CHECK(c.gkz.k == 0);
  CHECK(c.gkz.D.size() == 3);
}

TEST_CASE("D vectors satisfy the linear relations of the points") {
  // sum_i <b_i, u> D_i = 0 for every u
  for (const char* name : {"a1", "kp1o", "a2", "a2res", "kp2", "c3z3", "flop_plus", "case1_minus", "an4"}) {
    CAPTURE(name);
    auto l = load(name);
    for (int coord = 0; coord < 3; ++coord) {
      RatVec sum(l.gkz.k, 0);
      for (int i = 1; i <= l.spec.fan.R(); ++i)
        for (int a = 0; a < l.gkz.k; ++a) sum[a] += l.spec.fan.point(i)[coord] * l.gkz.d(i)[a];
      CHECK(is_zero(sum));
    }
    CHECK(cone_dimension(l.gkz.nef) == static_cast<std::size_t>(l.gkz.k));
  }
}

TEST_CASE("p-basis hints") {
  auto a1 = load("a1");
  PBasis pb = select_pbasis(a1.spec.fan, a1.gkz, std::vector<RatVec>{rv({-2})});
  CHECK(pb.A_orb == std::vector<int>{1});
  CHECK(pb.A_K.empty());
  CHECK(pb.iota.at(2) == 1);
  Cone3 sigma{1, 3, 4};
  CHECK(s_monomial(a1.spec.fan, pb, sigma, 2) == to_int_vec({1}));
  CHECK(s_monomial(a1.spec.fan, pb, sigma, 1) == to_int_vec({0}));
  CHECK(s_monomial(a1.spec.fan, pb, sigma, 3) == to_int_vec({0}));
  CHECK_THROWS_AS(select_pbasis(a1.spec.fan, a1.gkz, std::vector<RatVec>{rv({1})}), PBasisError);

  auto z3 = load("c3z3");
  PBasis pz = select_pbasis(z3.spec.fan, z3.gkz, std::vector<RatVec>{z3.gkz.d(1)});
  CHECK(pz.A_orb == std::vector<int>{1});
  CHECK(pz.A_K.empty());
}

TEST_CASE("p-basis search finds valid bases for the corpus") {
  for (const char* name : {"a1", "kp1o", "a1p", "a1pres", "a2", "a2res", "kp2", "c3z3", "flop_plus", "flop_minus",
                           "case1_plus", "case1_minus", "an3"}) {
    CAPTURE(name);
    auto l = load(name);
    PBasis pb = select_pbasis(l.spec.fan, l.gkz);
    CHECK(pb.k() == l.gkz.k);
    CHECK(static_cast<int>(pb.A_K.size()) == l.gkz.pic_rank);
    // every s exponent is a nonnegative integer and vanishes on the cone's vertices
    for (const auto& sigma : l.spec.fan.cones()) {
      for (int i = 1; i <= l.spec.fan.R(); ++i) {
        IntVec s = s_monomial(l.spec.fan, pb, sigma, i);
        for (const auto& e : s) CHECK(e >= 0);
        bool vertex = i == sigma[0] || i == sigma[1] || i == sigma[2];
        if (vertex) CHECK(is_zero(to_rat(s)));
      }
    }
    // the found basis passes its own validation
    CHECK_NOTHROW(select_pbasis(l.spec.fan, l.gkz, pb.p));
  }
}

TEST_CASE("orbifold points on a cone give q_iota") {
  auto l = load("a2");
  PBasis pb = select_pbasis(l.spec.fan, l.gkz, l.spec.pbasis);
  for (int i : l.spec.fan.orbifold()) {
    IntVec s = s_monomial(l.spec.fan, pb, l.spec.fan.cones()[0], i);
    for (int a = 1; a <= pb.k(); ++a) CHECK(s[a - 1] == (pb.iota.at(i) == a ? 1 : 0));
  }
}

TEST_CASE("q^alpha for the inner brane agrees with the intersection pairing") {
  auto l = load("a1p");
  PBasis pb = select_pbasis(l.spec.fan, l.gkz, l.spec.pbasis);
  Brane b = make_brane(l.spec.fan, {3, 4}, 0, Cone3{1, 3, 4});
  IntVec qa = q_alpha(l.spec.fan, l.gkz, pb, b);
  CHECK(to_rat(qa) == q_alpha_pairing(l.spec.fan, l.gkz, pb, b));
}

TEST_CASE("lattice points by size") {
  auto pts = lattice_points_by_size(2, 1);
  CHECK(pts.size() == 5);
  CHECK(is_zero(pts[0]));
}

TEST_CASE("wall classification") {
  auto check = [](const char* p, const char* m, WallKind kind, WallCase kase) {
    CAPTURE(p);
    auto P = load(p), M = load(m);
    WallData w = classify_wall_crossing(P.spec.fan, M.spec.fan);
    CHECK(w.kind == kind);
    WallPBases wp = select_wall_pbases(P.spec.fan, P.gkz, M.spec.fan, M.gkz, w);
    Brane bm = make_brane(M.spec.fan, M.spec.branes[0].edge, 0, M.spec.branes[0].cone);
    WallCrossing wc = parameter_relations(P.spec.fan, P.gkz, wp.plus, M.spec.fan, M.gkz, wp.minus, w, bm);
    CHECK(wc.kase == kase);
    CHECK(wc.c[0] > 0);
    return wc;
  };
  auto flop = check("flop_plus", "flop_minus", WallKind::flop, WallCase::IIa);
  CHECK(to_string(flop.c) == "(1)");
  CHECK(flop.subst.at("q1").str() == "q1^-1");
  CHECK(flop.subst.at("x").str() == "q1*x");
  CHECK(flop.framing_shift == -1);  // f- = f+ + 1

  auto a1 = check("kp1o", "a1", WallKind::resolution, WallCase::III);
  CHECK(to_string(a1.c) == "(1/2)");
  CHECK(a1.subst.at("x").str() == "q1^(f/2)*x");
  REQUIRE(a1.case3);
  CHECK(a1.case3->l1 == 1);
  CHECK(a1.case3->l2 == 1);
  CHECK(a1.case3->b_prime == -1);

  auto a2 = check("a2res", "a2", WallKind::resolution, WallCase::III);
  CHECK(to_string(a2.c) == "(2/3,-1/3)");
  CHECK(a2.case3->l1 == 2);
  CHECK(a2.case3->l2 == 1);

  check("kp2", "c3z3", WallKind::resolution, WallCase::IIb);
  auto c1 = check("case1_plus", "case1_minus", WallKind::flop, WallCase::I);
  CHECK(c1.subst.at("x").str() == "x");
  auto inner = check("a1pres", "a1p", WallKind::resolution, WallCase::III);
  CHECK(inner.a0.has_value());
}

TEST_CASE("wall classification errors") {
  auto a1 = load("a1"), kp = load("kp1o"), c3 = load("c3");
  CHECK_THROWS_WITH_AS(classify_wall_crossing(a1.spec.fan, a1.spec.fan), doctest::Contains("not a single wall"),
                       CheckFailure);
  CHECK_THROWS_WITH_AS(classify_wall_crossing(a1.spec.fan, kp.spec.fan), doctest::Contains("swap"), CheckFailure);
  CHECK_THROWS_AS(classify_wall_crossing(c3.spec.fan, a1.spec.fan), CheckFailure);
}
