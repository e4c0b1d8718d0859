#include "octc/fan/regularity.hpp"

#include "octc/exact/lattice.hpp"
#include "octc/exact/simplex.hpp"

namespace octc {

namespace {

struct Constraint {
  std::string label;
  RatVec coef;  // coef . h >= t
};

// Coefficients of h_j - phi_T(b_j), phi_T the affine interpolant on cone T.
RatVec lift_gap(const ExtendedStackyFan& fan, const Cone3& t, int j) {
  RatMatrix m(3, 3);
  for (int c = 0; c < 3; ++c)
    for (int r = 0; r < 3; ++r) m(r, c) = fan.point(t[c])[r];
  RatVec bj{BigRational(fan.point(j)[0]), BigRational(fan.point(j)[1]), BigRational(fan.point(j)[2])};
  auto lambda = solve(m, bj);
  if (!lambda) throw CheckFailure("degenerate cone in regularity check");
  RatVec coef(fan.R(), BigRational(0));
  coef[j - 1] += 1;
  for (int c = 0; c < 3; ++c) coef[t[c] - 1] -= (*lambda)[c];
  return coef;
}

bool contains_point(const ExtendedStackyFan& fan, const Cone3& t, int j) {
  const auto &a = fan.point(t[0]), &b = fan.point(t[1]), &c = fan.point(t[2]), &p = fan.point(j);
  long o = orient(a, b, c);
  long s1 = orient(a, b, p), s2 = orient(b, c, p), s3 = orient(c, a, p);
  if (o < 0) {
    s1 = -s1;
    s2 = -s2;
    s3 = -s3;
  }
  return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

bool is_vertex(const Cone3& t, int j) { return t[0] == j || t[1] == j || t[2] == j; }

}  // namespace

RegularityResult regularity_lp(const ExtendedStackyFan& fan) {
  const int R = fan.R();
  std::vector<Constraint> cons;
  for (const auto& e : fan.edges()) {
    auto adj = fan.cones_containing(e);
    if (adj.size() != 2) continue;
    int d = 0;
    for (int v : adj[1])
      if (v != e[0] && v != e[1]) d = v;
    cons.push_back({"edge " + to_string(e), lift_gap(fan, adj[0], d)});
  }
  for (int j : fan.orbifold())
    for (const auto& t : fan.cones())
      if (contains_point(fan, t, j)) {
        cons.push_back({"point " + std::to_string(j), lift_gap(fan, t, j)});
        break;
      }

  const std::size_t C = cons.size();
  const std::size_t nvar = 2 * R + C + 2;
  const std::size_t t_col = R, s0 = R + 1, u0 = R + 1 + C, w_col = nvar - 1;
  const BigRational B(kHeightBound);
  RatMatrix a(C + R + 1, nvar);
  RatVec rhs(C + R + 1, BigRational(0)), obj(nvar, BigRational(0));
  for (std::size_t c = 0; c < C; ++c) {
    for (int i = 0; i < R; ++i) a(c, i) = cons[c].coef[i];
    a(c, t_col) = -1;
    a(c, s0 + c) = -1;
  }
  for (int i = 0; i < R; ++i) {
    a(C + i, i) = 1;
    a(C + i, u0 + i) = 1;
    rhs[C + i] = 2 * B;
  }
  a(C + R, t_col) = 1;
  a(C + R, w_col) = 1;
  rhs[C + R] = 1;
  obj[t_col] = 1;
  auto lp = simplex_maximize(a, rhs, obj);
  if (lp.status != LpStatus::optimal) throw CheckFailure("regularity LP did not reach an optimum");

  RegularityResult res;
  res.slack = lp.value;
  for (int i = 0; i < R; ++i) res.heights.push_back(lp.x[i] - B);
  res.regular = res.slack > 0;
  for (const auto& c : cons) {
    BigRational v = dot(c.coef, res.heights);
    if (v < res.slack) throw CheckFailure("regularity LP solution violates its own constraint");
    if (!res.regular && v == 0) res.binding.push_back(c.label);
  }
  if (res.regular) {
    // global certificate: every non-vertex point lies strictly above every cone's plane
    for (const auto& t : fan.cones())
      for (int j = 1; j <= R; ++j)
        if (!is_vertex(t, j) && dot(lift_gap(fan, t, j), res.heights) <= 0)
          throw CheckFailure("regularity heights fail the global convexity re-check");
  }
  return res;
}

}  // namespace octc
