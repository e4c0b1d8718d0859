#include "doctest.h"

#include <cmath>

#include "octc/io/corpus.hpp"
#include "octc/io/report.hpp"
#include "octc/series/disk.hpp"
#include "octc/series/newton.hpp"

using namespace octc;

namespace {

CurveEquation bound_curve(const std::string& name, long f = 0, int brane = 1) {
  FanSpec s = builtin_fan(name);
  GKZData g = gkz_data(s.fan, s.charges);
  PBasis pb = select_pbasis(s.fan, g, s.pbasis);
  const BraneSpec& bs = s.branes.at(brane - 1);
  return build_curve(s.fan, pb, make_brane(s.fan, bs.edge, 0, bs.cone), f);
}

CycloNumber cyc(unsigned n, long a, long b = 1) { return CycloNumber(n, BigRational(a, b)); }
CycloNumber icyc(unsigned n, long a, long b = 1) { return CycloNumber::root_of_unity(n, n / 4) * BigRational(a, b); }

}  // namespace

TEST_CASE("conductor") {
  CHECK(series_conductor({1}) == 2);
  CHECK(series_conductor({2}) == 4);
  CHECK(series_conductor({3}) == 6);
  CHECK(series_conductor({2, 3}) == 12);
}

TEST_CASE("series arithmetic") {
  ExactSeries s({"x"}, {1}, 8, CycloNumber(2));
  ExactSeries one = s.constant(BigRational(1));
  ExactSeries x = s.like();
  x.add_term({1}, cyc(2, 1));
  ExactSeries u = one + x;
  ExactSeries inv = u.inverse();
  // 1/(1+x) = sum (-x)^n
  for (int n = 0; n <= 8; ++n) CHECK(inv.coeff({n}) == cyc(2, n % 2 ? -1 : 1));
  CHECK((u * inv - one).is_zero());
  // log(1+x) = sum (-1)^(n-1) x^n / n
  ExactSeries l = u.log1p_unit();
  for (int n = 1; n <= 8; ++n) CHECK(l.coeff({n}) == cyc(2, n % 2 ? 1 : -1, n));
  // (x d/dx)^-2 x^n = x^n / n^2
  ExactSeries p = s.like();
  for (int n = 1; n <= 8; ++n) p.add_term({n}, cyc(2, 1));
  ExactSeries a = p.x_log_antiderivative(2);
  for (int n = 1; n <= 8; ++n) CHECK(a.coeff({n}) == cyc(2, 1, n * n));
  CHECK(a.x_log_derivative().x_log_derivative() == p);
  CHECK(x.compose(0, x * x).coeff({2}) == cyc(2, 1));
}

TEST_CASE("C3: the single root is -1 - x") {
  auto roots = newton_roots(bound_curve("c3"), 8, CycloNumber(series_conductor({1})));
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].coeff({0}) == cyc(2, -1));
  CHECK(roots[0].coeff({1}) == cyc(2, -1));
  CHECK(roots[0].terms().size() == 2);
}

TEST_CASE("C3 disk potential is the dilogarithm series") {
  auto roots = newton_roots(bound_curve("c3"), 8, CycloNumber(2));
  auto dp = disk_potential(roots, 1);
  REQUIRE(dp.W.size() == 1);
  for (int d = 1; d <= 8; ++d) {
    CAPTURE(d);
    CHECK(dp.W[0].coeff({d}) == cyc(2, d % 2 ? 1 : -1, d * d));
  }
}

TEST_CASE("A1: roots match the quadratic formula") {
  // x + q y + 1 + y^2 = 0: y = -q/2 +- i sqrt(1 + x - q^2/4)
  unsigned n = series_conductor({2});
  auto roots = newton_roots(bound_curve("a1"), 6, CycloNumber(n));
  REQUIRE(roots.size() == 2);
  const auto& k1 = roots[0];
  CHECK(k1.coeff({0, 0}) == icyc(n, 1));
  CHECK(k1.coeff({1, 0}) == cyc(n, -1, 2));
  CHECK(k1.coeff({0, 1}) == icyc(n, 1, 2));
  CHECK(k1.coeff({2, 0}) == icyc(n, -1, 8));
  CHECK(k1.coeff({0, 2}) == icyc(n, -1, 8));
  CHECK(roots[1].coeff({0, 0}) == icyc(n, -1));
  for (const auto& [e, c] : k1.terms()) CHECK(roots[1].coeff(e) == c.conj());

  double q = 0.02, x = 0.01;  // truncation error ~ 0.02^7
  std::complex<double> want = -q / 2 + std::complex<double>(0, 1) * std::sqrt(1 + x - q * q / 4);
  CHECK(std::abs(k1.evaluate({{"q1", q}, {"x", x}}) - want) < 1e-12);
  auto fl = newton_roots(bound_curve("a1"), 12, std::complex<double>(0));
  CHECK(std::abs(fl[0].evaluate({{"q1", q}, {"x", x}}) - want) < 1e-12);
}

TEST_CASE("order zero keeps only the local roots") {
  auto roots = newton_roots(bound_curve("an3"), 0, CycloNumber(series_conductor({4})));
  REQUIRE(roots.size() == 4);
  for (long j = 1; j <= 4; ++j) {
    CHECK(roots[j - 1].terms().size() == 1);
    CHECK(roots[j - 1].constant_term() == CycloNumber::root_of_unity(8, 2 * j - 1));
  }
}

TEST_CASE("truncation is stable under raising the order") {
  auto lo = newton_roots(bound_curve("a2"), 4, CycloNumber(series_conductor({3})));
  auto hi = newton_roots(bound_curve("a2"), 7, CycloNumber(series_conductor({3})));
  for (std::size_t j = 0; j < lo.size(); ++j) CHECK(hi[j].truncated(4) == lo[j]);
}

TEST_CASE("U matrices are unitary up to m") {
  for (long m = 1; m <= 6; ++m) {
    CAPTURE(m);
    UMatrix U = u_matrix(m);
    CHECK((U * U.conjugate_transpose()).is_scalar(BigRational(m)));
    CHECK(U.at(m, m) == CycloNumber(U.at(m, m).conductor(), BigRational(1)));
    CHECK(std::abs(U.at(1, 1).embed() - std::polar(1.0, -2 * M_PI / m)) < 1e-14);
  }
}

TEST_CASE("disk potentials are rational on every fixture") {
  for (const char* name : {"c3", "a1", "kp1o", "a2", "a2res", "an3", "kp2", "c3z3", "flop_plus", "case1_minus"}) {
    CAPTURE(name);
    CurveEquation H = bound_curve(name);
    long ell = H.frame.l;
    auto roots = newton_roots(H, 5, CycloNumber(series_conductor({ell})));
    CHECK(roots.size() == std::size_t(ell));
    DiskPotential<CycloNumber> dp;
    REQUIRE_NOTHROW(dp = disk_potential(roots, ell));
    for (const auto& W : dp.W)
      for (const auto& [e, c] : W.terms()) CHECK(c.is_rational());
  }
}

TEST_CASE("A1 disk potentials") {
  auto roots = newton_roots(bound_curve("a1"), 4, CycloNumber(4));
  auto dp = disk_potential(roots, 2);
  // W_2 = sum over h_2 = g_1 + g_2 = x d/dx log(kappa_1 kappa_2) = x d/dx log(1 + x)
  for (int d = 1; d <= 4; ++d) CHECK(dp.W[1].coeff({0, d}) == cyc(4, d % 2 ? 1 : -1, d * d));
  CHECK(dp.W[1].coeff({1, 1}).is_zero());
}

TEST_CASE("exact and float backends agree") {
  auto ex = disk_potential(newton_roots(bound_curve("a2"), 5, CycloNumber(6)), 3);
  auto fl = disk_potential(newton_roots(bound_curve("a2"), 5, std::complex<double>(0)), 3);
  std::map<std::string, std::complex<double>> at{{"q1", 0.07}, {"q2", -0.05}, {"x", 0.03}};
  for (int j = 0; j < 3; ++j) CHECK(std::abs(ex.W[j].evaluate(at) - fl.W[j].evaluate(at)) < 1e-12);
}

TEST_CASE("restricted invariants") {
  auto poly = curve_poly(bound_curve("an3"), 4, CycloNumber(8));
  auto roots = newton_roots(poly);
  CHECK(check_restricted_invariants(poly, roots));
  auto p2 = curve_poly(bound_curve("kp1o"), 4, CycloNumber(2));
  CHECK_FALSE(check_restricted_invariants(p2, newton_roots(p2)));
}

TEST_CASE("second-flag branches") {
  for (const char* name : {"kp1o", "a2res"}) {
    CAPTURE(name);
    WallJob j = prepare_wall(builtin_fan(name), builtin_fan(std::string(name) == "kp1o" ? "a1" : "a2"));
    REQUIRE(j.wc.case3);
    REQUIRE(j.H_plus2);
    auto extra = newton_roots_case3_extra(j.H_plus2->bind_framing(-j.wc.case3->b_prime), *j.wc.case3, 4,
                                          CycloNumber(4));
    CHECK(extra.roots.size() == 1);
    if (std::string(name) == "kp1o") CHECK(extra.prefactor.str() == "q1^-1");
  }
}

TEST_CASE("degenerate start") {
  // 1 + 2y + y^2 has a double root
  auto poly = curve_poly(bound_curve("a1"), 3, CycloNumber(4));
  poly.coeffs[poly.y_shift + 1] = poly.coeffs[poly.y_shift + 1] + poly.coeffs[0].constant(BigRational(2));
  CHECK_THROWS_AS(newton_roots(poly), CheckFailure);
}
