#include "doctest.h"

#include <random>

#include "octc/exact/cone.hpp"
#include "octc/exact/cyclotomic.hpp"
#include "octc/exact/lattice.hpp"
#include "octc/exact/simplex.hpp"

using namespace octc;

namespace {

// beta of A1 with columns (1,0,1),(0,1,1),(0,0,1),(0,2,1)
IntMatrix a1_beta() { return IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 2}, {1, 1, 1, 1}}; }

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

CycloNumber random_cyclo(std::mt19937& rng, unsigned n) {
  std::uniform_int_distribution<int> d(-5, 5);
  CycloNumber a(n);
  for (unsigned k = 0; k < euler_phi(n); ++k)
    a += CycloNumber::root_of_unity(n, k) * BigRational(d(rng), 1 + (k % 3));
  return a;
}

}  // namespace

TEST_CASE("hnf of identity and diagonal") {
  auto id = IntMatrix::identity(3);
  auto h = hnf(id);
  CHECK(h.h == id);
  CHECK(h.u == id);
  IntMatrix d{{2, 0}, {0, 3}};
  auto hd = hnf(d);
  CHECK(hd.h == d);
  CHECK(hd.u == IntMatrix::identity(2));
}

TEST_CASE("hnf of the A1 beta matrix has unit pivots") {
  auto h = hnf(a1_beta());
  CHECK(h.rank == 3);
  CHECK(h.h(0, 0) == 1);
  CHECK(h.h(1, 1) == 1);
  CHECK(h.h(2, 2) == 1);
  CHECK(h.u * a1_beta() == h.h);
}

TEST_CASE("smith forms") {
  CHECK(smith(IntMatrix{{2}}).diag == IntVec{2});
  auto s = smith(a1_beta());
  CHECK(s.diag == IntVec{1, 1, 1});
  CHECK(kernel_basis(a1_beta()).cols() == 1);
  // columns b1, b4, b3 of A1
  IntMatrix cone{{1, 0, 0}, {0, 2, 0}, {1, 1, 1}};
  CHECK(abs(determinant(cone)) == 2);
  auto sc = smith(cone);
  CHECK(sc.diag == IntVec{1, 1, 2});
}

TEST_CASE("kernel basis") {
  auto k = kernel_basis(a1_beta());
  REQUIRE(k.cols() == 1);
  CHECK(k.col(0) == to_int_vec({0, -2, 1, 1}));
  CHECK(kernel_basis(IntMatrix{{2, 1}, {1, 1}}).cols() == 0);
  CHECK(kernel_basis(IntMatrix{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}).cols() == 0);
}

TEST_CASE("rank plus kernel rank equals column count") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial * 7) % 5;
    auto m = random_matrix(rng, r, c);
    auto h = hnf(m);
    auto k = kernel_basis(m);
    CHECK(h.rank + k.cols() == c);
    CHECK(rank(to_rat(m)) == h.rank);
    auto s = smith(m);
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
      if (s.diag[i] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
  }
}

TEST_CASE("kernel basis is saturated") {
  // 2x + 4y + 6z = 0 has kernel index 1 basis, not a sublattice
  IntMatrix m{{2, 4, 6}};
  auto k = kernel_basis(m);
  REQUIRE(k.cols() == 2);
  auto s = smith(k);
  CHECK(s.diag == IntVec{1, 1});
}

TEST_CASE("cyclotomic arithmetic") {
  auto z4 = CycloNumber::root_of_unity(4, 1);
  CHECK(z4 * z4 == CycloNumber(4, -1));
  auto w3 = CycloNumber::root_of_unity(3, 1);
  CHECK(w3 * w3 * w3 == CycloNumber(3, 1));
  auto xi3 = CycloNumber::root_of_unity(6, -1);
  auto e = xi3.embed();
  CHECK(e.real() == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(e.imag() == doctest::Approx(-0.8660254037844386).epsilon(1e-14));
  CHECK_THROWS_AS(CycloNumber(5).inverse(), DivisionByZero);
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic field axioms and embedding homomorphism") {
  std::mt19937 rng(11);
  for (unsigned n = 1; n <= 24; ++n) {
    for (int t = 0; t < 3; ++t) {
      auto a = random_cyclo(rng, n), b = random_cyclo(rng, n);
      if (a.is_zero()) continue;
      CHECK((a * b) * a.inverse() == b);
      auto ea = a.embed(), eb = b.embed();
      CHECK(std::abs((a * b).embed() - ea * eb) < 1e-9 * (1 + std::abs(ea * eb)));
      CHECK(std::abs((a + b).embed() - (ea + eb)) < 1e-12 * (1 + std::abs(ea) + std::abs(eb)));
      CHECK(std::abs(a.conj().embed() - std::conj(ea)) < 1e-9 * (1 + std::abs(ea)));
    }
  }
}

TEST_CASE("cyclotomic lift preserves values") {
  auto w3 = CycloNumber::root_of_unity(3, 1);
  CHECK(w3.lift(6) == CycloNumber::root_of_unity(6, 2));
  CHECK(std::abs(w3.lift(12).embed() - w3.embed()) < 1e-12);
}

TEST_CASE("simplex") {
  // maximize x + y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6
  RatMatrix a{{1, 2, 1, 0}, {3, 1, 0, 1}};
  auto r = simplex_maximize(a, to_rat_vec({4, 6}), to_rat_vec({1, 1, 0, 0}));
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == BigRational(14, 5));
  RatMatrix inf{{1, 1}};
  CHECK(simplex_maximize(inf, to_rat_vec({-1}), to_rat_vec({0, 0})).status == LpStatus::infeasible);
  RatMatrix unb{{1, -1}};
  CHECK(simplex_maximize(unb, to_rat_vec({0}), to_rat_vec({1, 0})).status == LpStatus::unbounded);
}

TEST_CASE("cone membership") {
  RationalCone a1(1, {to_rat_vec({-2})});
  CHECK(cone_contains(a1, to_rat_vec({0})));
  CHECK(cone_contains(a1, to_rat_vec({-2})));
  CHECK_FALSE(cone_contains(a1, to_rat_vec({1})));
  RationalCone quad(2, {to_rat_vec({1, 0}), to_rat_vec({0, 1})});
  CHECK(cone_contains(quad, to_rat_vec({1, 1})));
  CHECK(cone_contains(RationalCone(2), to_rat_vec({0, 0})));
  CHECK_FALSE(cone_contains(RationalCone(2), to_rat_vec({0, 1})));
}

TEST_CASE("cone membership agrees with brute-force enumeration") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 30; ++t) {
    std::vector<RatVec> g;
    for (int i = 0; i < 2; ++i) g.push_back(to_rat_vec({d(rng), d(rng)}));
    RationalCone c(2, g);
    for (int x = -4; x <= 4; ++x)
      for (int y = -4; y <= 4; ++y) {
        // brute force: lambda in (1/12)Z, 0..12
        bool found = false;
        for (int l1 = 0; l1 <= 48 && !found; ++l1)
          for (int l2 = 0; l2 <= 48 && !found; ++l2) {
            BigRational a(l1, 4), b(l2, 4);
            if (a * g[0][0] + b * g[1][0] == x && a * g[0][1] + b * g[1][1] == y) found = true;
          }
        if (found) CHECK(cone_contains(c, to_rat_vec({x, y})));
        // halfspace form agrees with the LP everywhere
        CHECK(facets(c).contains(to_rat_vec({x, y})) == cone_contains(c, to_rat_vec({x, y})));
      }
  }
}

TEST_CASE("cone intersection") {
  RationalCone c(2, {to_rat_vec({1, 0}), to_rat_vec({1, 2})});
  auto same = cone_intersect({c});
  CHECK(same.generators() == c.generators());
  auto origin = cone_intersect({RationalCone(1, {to_rat_vec({1})}), RationalCone(1, {to_rat_vec({-1})})});
  CHECK(origin.generators().empty());
  // K_P1 + O: cone{D4} and cone{D3}, both the ray +1
  auto kp1 = cone_intersect({RationalCone(1, {to_rat_vec({1})}), RationalCone(1, {to_rat_vec({1})})});
  REQUIRE(kp1.generators().size() == 1);
  CHECK(kp1.generators()[0] == to_rat_vec({1}));
  auto wedge = cone_intersect({RationalCone(2, {to_rat_vec({1, 0}), to_rat_vec({0, 1})}),
                               RationalCone(2, {to_rat_vec({1, 1}), to_rat_vec({-1, 1})})});
  CHECK(wedge.generators() == std::vector<RatVec>{to_rat_vec({0, 1}), to_rat_vec({1, 1})});
  auto line = cone_intersect({RationalCone(2, {to_rat_vec({1, 0}), to_rat_vec({-1, 0}), to_rat_vec({0, 1})}),
                              RationalCone(2, {to_rat_vec({1, 0}), to_rat_vec({-1, 0}), to_rat_vec({0, -1})})});
  CHECK(cone_dimension(line) == 1);
}
