#include "doctest.h"

#include <cmath>

#include "octc/io/corpus.hpp"
#include "octc/io/report.hpp"
#include "octc/numeric/numeric.hpp"

using namespace octc;

namespace {

CurveEquation bound_curve(const std::string& name, long f = 0) {
  FanSpec s = builtin_fan(name);
  GKZData g = gkz_data(s.fan, s.charges);
  PBasis pb = select_pbasis(s.fan, g, s.pbasis);
  const BraneSpec& bs = s.branes.at(0);
  return build_curve(s.fan, pb, make_brane(s.fan, bs.edge, 0, bs.cone), f);
}

// q1 values -> continuous log path; x fixed.
std::vector<LogPoint> q_path(const std::vector<cplx>& qs, cplx x = 0) {
  std::vector<LogPoint> out;
  for (cplx q : qs) {
    std::map<std::string, cplx, VarLess> v{{"q1", q}};
    if (x != 0.0) v["x"] = x;
    out.push_back(out.empty() ? log_point(v) : continue_logs(v, out.back()));
  }
  return out;
}

std::vector<cplx> segment(cplx a, cplx b, int n) {
  std::vector<cplx> out;
  for (int i = 0; i <= n; ++i) out.push_back(a + (b - a) * (double(i) / n));
  return out;
}

// From base b to the circle |q - c| = r, once around (sign = orientation), and back.
std::vector<cplx> loop(cplx b, cplx c, double r, int sign = 1) {
  cplx d = (b - c) / std::abs(b - c);
  std::vector<cplx> out = segment(b, c + r * d, 16);
  for (int i = 1; i <= 96; ++i) out.push_back(c + r * d * std::polar(1.0, sign * 2 * M_PI * i / 96));
  auto back = segment(c + r * d, b, 16);
  out.insert(out.end(), back.begin() + 1, back.end());
  return out;
}

std::vector<cplx> concat(std::vector<cplx> a, const std::vector<cplx>& b) {
  a.insert(a.end(), b.begin() + 1, b.end());
  return a;
}

Permutation loop_perm(const NumericCurve& c, const std::vector<cplx>& qs) {
  auto path = q_path(qs);
  auto start = roots_at(c, path.front());
  return track(c, path, start, {}, start).permutation;
}

}  // namespace

TEST_CASE("polynomial roots") {
  // (y - 1)(y + 2)(y - 3i) = y^3 + (1 - 3i) y^2 + (-2 - 3i) y + 6i
  cplx I(0, 1);
  auto r = polynomial_roots({6.0 * I, -2.0 - 3.0 * I, 1.0 - 3.0 * I, 1.0});
  REQUIRE(r.size() == 3);
  for (cplx want : {cplx(1), cplx(-2), 3.0 * I}) {
    double best = 1;
    for (cplx z : r) best = std::min(best, std::abs(z - want));
    CHECK(best < 1e-13);
  }
}

TEST_CASE("roots at a point") {
  NumericCurve c3(bound_curve("c3"));
  auto r = roots_at(c3, log_point({{"x", 0.1}}));
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0] + 1.1) < 1e-14);

  NumericCurve a1(bound_curve("a1"));
  double q = 0.3, x = 0.05;
  auto ra = roots_at(a1, log_point({{"q1", q}, {"x", x}}));
  REQUIRE(ra.size() == 2);
  cplx s = std::sqrt(cplx(q * q - 4 * (1 + x)));
  for (cplx want : {(-q + s) / 2.0, (-q - s) / 2.0}) {
    double best = 1;
    for (cplx z : ra) best = std::min(best, std::abs(z - want));
    CHECK(best < 1e-13);
  }
}

TEST_CASE("permutation helpers") {
  Permutation a{1, 0, 2}, b{0, 2, 1};
  CHECK(to_string(a) == "(1 2)");
  CHECK(to_string(Permutation{0, 1, 2}) == "()");
  // a after b: 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
  CHECK(to_string(compose(a, b)) == "(1 2 3)");
  CHECK(is_identity(compose(compose(a, b), inverse(compose(a, b)))));
}

TEST_CASE("A1 restricted curve: loops and their permutations") {
  NumericCurve c(restricted_curve(bound_curve("a1")));  // y^2 + q y + 1, discriminant at q = +-2
  cplx base(0.5, 0.5);
  CHECK(is_identity(loop_perm(c, {base, base * 1.01, base})));
  Permutation around2 = loop_perm(c, loop(base, 2.0, 0.5));
  CHECK(to_string(around2) == "(1 2)");
  CHECK(is_identity(loop_perm(c, loop(base, cplx(0.5, 2.0), 0.5))));  // encloses nothing
  // reversed loop gives the inverse
  auto rev = loop(base, 2.0, 0.5, -1);
  CHECK(loop_perm(c, rev) == inverse(around2));
  // concatenation composes
  auto around_m2 = loop(base, -2.0, 0.5);
  Permutation pm2 = loop_perm(c, around_m2);
  CHECK(to_string(pm2) == "(1 2)");
  CHECK(loop_perm(c, concat(loop(base, 2.0, 0.5), around_m2)) == compose(pm2, around2));
}

TEST_CASE("tracking is deterministic and follows the analytic branch") {
  NumericCurve c(bound_curve("a1"));
  std::vector<cplx> qs = segment(cplx(0.01), cplx(0.5, 0.3), 8);
  auto path = q_path(qs, 0.02);
  auto start = roots_at(c, path.front());
  auto r1 = track(c, path, start);
  auto r2 = track(c, path, start);
  CHECK(r1.end_roots == r2.end_roots);
  for (std::size_t j = 0; j < start.size(); ++j) {
    // the root of y^2 + q y + 1 + x continued from near +-i
    cplx q = qs.back(), x = 0.02;
    cplx sgn = start[j].imag() > 0 ? 1.0 : -1.0;
    cplx want = (-q + sgn * cplx(0, 1) * std::sqrt(4.0 * (1.0 + x) - q * q)) / 2.0;
    CHECK(std::abs(r1.end_roots[j] - want) < 1e-10);
  }
}

TEST_CASE("tracking through a collision fails loudly") {
  NumericCurve c(restricted_curve(bound_curve("a1")));
  auto path = q_path(segment(1.0, 3.0, 4));
  auto start = roots_at(c, path.front());
  bool failed = false;
  try {
    auto r = track(c, path, start);
    failed = r.status != "ok";
  } catch (const TrackFailure&) {
    failed = true;
  }
  CHECK(failed);
}

TEST_CASE("monodromy groups of the restricted curves") {
  struct Want {
    const char* name;
    std::size_t order;
  };
  for (Want w : {Want{"a1", 2}, Want{"a2", 6}, Want{"an3", 24}}) {
    CAPTURE(w.name);
    MonodromyReport m = monodromy_check(restricted_curve(bound_curve(w.name)), 1);
    CHECK(m.group_order == w.order);
    CHECK(m.transitive);
  }
  MonodromyReport m = monodromy_check(restricted_curve(bound_curve("a2")), 7, Permutation{0, 2, 1});
  CHECK(m.target_realized);
  // replaying the word reproduces the target
  Permutation p{0, 1, 2};
  for (int g : m.target_word) p = compose(m.generators.at(g), p);
  CHECK(p == Permutation{0, 2, 1});
}

TEST_CASE("numeric open/closed transition on the wall pairs") {
  for (auto [p, mi] : std::vector<std::pair<const char*, const char*>>{
           {"kp1o", "a1"}, {"flop_plus", "flop_minus"}, {"kp2", "c3z3"}, {"case1_plus", "case1_minus"}, {"a2res", "a2"}}) {
    CAPTURE(p);
    WallJob j = prepare_wall(builtin_fan(p), builtin_fan(mi));
    NumericConfig cfg;
    OctcVerdict v = verify_octc(j.wc, j.H_plus, j.H_minus, j.H_plus2, cfg);
    CHECK(v.chart.ok);
    CHECK(v.matching.ok);
    CHECK(v.derivative.ok);
    CHECK(v.monodromy.ok);
  }
}
