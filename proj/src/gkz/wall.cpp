#include "octc/gkz/wall.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "octc/exact/lattice.hpp"

namespace octc {

std::string to_string(WallKind k) { return k == WallKind::flop ? "flop" : "resolution"; }

std::string to_string(WallCase c) {
  switch (c) {
    case WallCase::I: return "I";
    case WallCase::IIa: return "IIa";
    case WallCase::IIb: return "IIb";
    case WallCase::III: return "III";
  }
  return "?";
}

namespace {

std::vector<Edge> cone_edges(const Cone3& c) { return {Edge{c[0], c[1]}, Edge{c[0], c[2]}, Edge{c[1], c[2]}}; }

std::optional<Edge> shared_edge(const Cone3& a, const Cone3& b) {
  for (const auto& e : cone_edges(a))
    for (const auto& f : cone_edges(b))
      if (e == f) return e;
  return std::nullopt;
}

bool in_closed(const ExtendedStackyFan& fan, const Cone3& c, int i) {
  const auto& p = fan.point(i);
  long o = orient(fan.point(c[0]), fan.point(c[1]), fan.point(c[2]));
  long s0 = orient(p, fan.point(c[1]), fan.point(c[2]));
  long s1 = orient(fan.point(c[0]), p, fan.point(c[2]));
  long s2 = orient(fan.point(c[0]), fan.point(c[1]), p);
  auto same = [&](long s) { return s == 0 || (s > 0) == (o > 0); };
  return same(s0) && same(s1) && same(s2);
}

bool on_segment(const ExtendedStackyFan& fan, const Edge& e, int i) {
  const auto& a = fan.point(e[0]);
  const auto& b = fan.point(e[1]);
  const auto& p = fan.point(i);
  if (orient(a, b, p) != 0) return false;
  for (int c = 0; c < 2; ++c)
    if (p[c] < std::min(a[c], b[c]) || p[c] > std::max(a[c], b[c])) return false;
  return i != e[0] && i != e[1];
}

int third_vertex(const Cone3& c, const Edge& e) {
  for (int v : c)
    if (v != e[0] && v != e[1]) return v;
  throw PreconditionError("edge not in cone");
}

long sign(long v) { return (v > 0) - (v < 0); }

}  // namespace

WallData classify_wall_crossing(const ExtendedStackyFan& plus, const ExtendedStackyFan& minus) {
  if (plus.points() != minus.points()) throw CheckFailure("not a single wall: the lattice point lists differ");
  std::set<Cone3> P(plus.cones().begin(), plus.cones().end()), M(minus.cones().begin(), minus.cones().end());
  WallData w;
  for (const auto& c : M)
    if (!P.count(c)) w.removed.push_back(c);
  for (const auto& c : P)
    if (!M.count(c)) w.added.push_back(c);
  if (w.removed.empty() && w.added.empty()) throw CheckFailure("not a single wall: identical triangulations");
  const auto& rp = plus.rays();
  const auto& rm = minus.rays();
  if (rp == rm) {
    if (w.removed.size() != 2 || w.added.size() != 2)
      throw CheckFailure("not a single wall: triangulations differ in more than one quadrilateral");
    auto em = shared_edge(w.removed[0], w.removed[1]);
    auto ep = shared_edge(w.added[0], w.added[1]);
    std::set<int> vm, vp;
    for (const auto& c : w.removed) vm.insert(c.begin(), c.end());
    for (const auto& c : w.added) vp.insert(c.begin(), c.end());
    if (!em || !ep || vm != vp || vm.size() != 4 || *em == *ep)
      throw CheckFailure("not a single wall: changed cones are not two diagonals of one quadrilateral");
    w.kind = WallKind::flop;
    w.tau_ex_minus = *em;
    w.tau_ex_plus = *ep;
    return w;
  }
  auto extra = [](const std::vector<int>& big, const std::vector<int>& small) -> int {
    if (big.size() != small.size() + 1) return 0;
    std::vector<int> d;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(d));
    return d.size() == 1 && std::includes(big.begin(), big.end(), small.begin(), small.end()) ? d[0] : 0;
  };
  if (extra(rm, rp)) throw CheckFailure("orientation: the minus fan is the finer one; swap the fans");
  int iex = extra(rp, rm);
  if (!iex) throw CheckFailure("not a single wall: ray sets differ by more than one point");
  std::set<Cone3> expect;
  for (const auto& c : w.removed) {
    if (!in_closed(minus, c, iex))
      throw CheckFailure("not a single wall: replaced cone " + to_string(c) + " does not contain the new ray");
    for (const auto& e : cone_edges(c))
      if (!on_segment(minus, e, iex)) expect.insert(sorted_cone({e[0], e[1], iex}));
  }
  if (std::set<Cone3>(w.added.begin(), w.added.end()) != expect)
    throw CheckFailure("not a single wall: new cones are not a star subdivision at point " + std::to_string(iex));
  w.kind = WallKind::resolution;
  w.i_ex = iex;
  return w;
}

Transport transport_brane(const ExtendedStackyFan& plus, const ExtendedStackyFan& minus, const WallData& wall,
                          const Brane& brane_minus) {
  const Edge tau = brane_minus.primary.tau;
  const Cone3 sig = brane_minus.primary.sigma;
  const long f = brane_minus.framing;
  Transport t;
  if (wall.kind == WallKind::flop && tau == wall.tau_ex_minus)
    throw UnsupportedCase("brane on the flopped edge " + to_string(tau) + " induces no brane on the other side");
  const auto& edges = plus.edges();
  bool tau_kept = std::binary_search(edges.begin(), edges.end(), tau);
  if (tau_kept) {
    bool sig_kept = plus.has_cone(sig);
    bool sec_kept = !brane_minus.secondary || plus.has_cone(brane_minus.secondary->sigma);
    if (sig_kept && sec_kept) {
      t.kase = WallCase::I;
      t.branes_plus.push_back(make_brane(plus, tau, f, sig));
      return t;
    }
    if (sig_kept && !sec_kept)
      throw UnsupportedCase("the changed cone is on the secondary side of the inner brane; name " +
                            to_string(brane_minus.secondary->sigma) + " as the primary cone");
    t.kase = wall.kind == WallKind::flop ? WallCase::IIa : WallCase::IIb;
    int v_minus = third_vertex(sig, tau);
    long side = sign(orient(minus.point(tau[0]), minus.point(tau[1]), minus.point(v_minus)));
    std::optional<Cone3> sig_plus;
    for (const auto& c : plus.cones_containing(tau))
      if (sign(orient(plus.point(tau[0]), plus.point(tau[1]), plus.point(third_vertex(c, tau)))) == side) sig_plus = c;
    if (!sig_plus) throw CheckFailure("no cone of the plus fan on the brane side of " + to_string(tau));
    auto fm = flag_frame(minus, brane_minus.primary);
    auto fp = flag_frame(plus, Flag{tau, *sig_plus});
    IntMatrix ch = frame_change(fm, fp);
    IntMatrix expect = IntMatrix::identity(3);
    expect(1, 0) = ch(1, 0);
    if (!(ch == expect)) throw CheckFailure("case II frame change is not a shear");
    t.b = to_long(ch(1, 0));
    t.branes_plus.push_back(make_brane(plus, tau, f + t.b, *sig_plus));
    return t;
  }
  if (wall.kind == WallKind::flop) throw UnsupportedCase("brane edge " + to_string(tau) + " disappears in a flop");
  const int iex = wall.i_ex;
  if (!on_segment(minus, tau, iex))
    throw CheckFailure("brane edge " + to_string(tau) + " removed but point " + std::to_string(iex) + " is not on it");
  t.kase = WallCase::III;
  auto fm = flag_frame(minus, brane_minus.primary);
  Edge tau1 = sorted_edge({iex, fm.i3}), tau2 = sorted_edge({iex, fm.i2});
  Cone3 s1 = sorted_cone({fm.i1, iex, fm.i3}), s2 = sorted_cone({fm.i1, iex, fm.i2});
  Brane b1 = make_brane(plus, tau1, f, s1);
  auto f1 = flag_frame(plus, b1.primary);
  auto f2 = flag_frame(plus, Flag{tau2, s2});
  IntMatrix ch = frame_change(f2, f1);
  t.b_prime = to_long(ch(1, 0));
  Brane b2 = make_brane(plus, tau2, f - t.b_prime, s2);
  if (b1.l + b2.l != brane_minus.l) throw CheckFailure("edge orders do not add up across the subdivided edge");
  t.branes_plus = {b1, b2};
  return t;
}

namespace {

bool violates_iv(const GKZData& gkz, const ExtendedStackyFan& fan, const RatVec& v) {
  for (int i : fan.orbifold()) {
    RatVec d = v;
    for (int j = 0; j < gkz.k; ++j) d[j] -= gkz.d(i)[j];
    if (gkz.nef_h.contains(d)) return true;
  }
  return false;
}

std::size_t rank_of(const std::vector<RatVec>& rows, int k) {
  return rows.empty() ? 0 : rank(RatMatrix::from_rows(rows, k));
}

void scan(int k, const std::function<bool(const RatVec&)>& visit) {
  for (const auto& v : lattice_points_by_size(k, kPBasisSearchBound)) {
    if (is_zero(v)) continue;
    if (visit(v)) return;
  }
}

}  // namespace

WallPBases select_wall_pbases(const ExtendedStackyFan& plus, const GKZData& gp, const ExtendedStackyFan& minus,
                              const GKZData& gm, const WallData& wall, const WallHints& hints) {
  if (!(gp.L_basis == gm.L_basis)) throw CheckFailure("the two fans use different charge bases");
  const int k = gp.k;
  if (k < 1) throw CheckFailure("no wall in a zero-dimensional secondary fan");
  RationalCone W = cone_intersect({gp.nef, gm.nef});
  if (cone_dimension(W) != static_cast<std::size_t>(k - 1))
    throw CheckFailure("not a single wall: Nef cones meet in dimension " + std::to_string(cone_dimension(W)));
  WallPBases out;
  out.wall = facets(W);
  std::vector<RatVec> orb;
  for (int i : plus.orbifold()) orb.push_back(gp.d(i));
  const int shared_kahler = gp.pic_rank - 1;

  std::vector<RatVec> shared;
  if (hints.shared) {
    for (const auto& v : *hints.shared) {
      if (!out.wall.contains(v)) throw PBasisError("wall", "shared vector " + to_string(v) + " is not on the wall");
      if (std::find(orb.begin(), orb.end(), v) == orb.end()) shared.push_back(v);
    }
  } else {
    std::size_t have = rank_of(orb, k);
    scan(k, [&](const RatVec& v) {
      if (static_cast<int>(shared.size()) >= shared_kahler) return true;
      if (!out.wall.contains(v) || violates_iv(gp, plus, v) || violates_iv(gm, minus, v)) return false;
      auto rows = orb;
      rows.insert(rows.end(), shared.begin(), shared.end());
      rows.push_back(v);
      if (rank_of(rows, k) > have) {
        shared.push_back(v);
        ++have;
      }
      return static_cast<int>(shared.size()) >= shared_kahler;
    });
  }
  if (static_cast<int>(shared.size()) != shared_kahler)
    throw PBasisError("search", "found " + std::to_string(shared.size()) + " of " + std::to_string(shared_kahler) +
                                    " shared Kahler vectors on the wall; supply hints");
  auto base = orb;
  base.insert(base.end(), shared.begin(), shared.end());
  auto pick_side = [&](const GKZData& g, const ExtendedStackyFan& fan, const std::optional<RatVec>& hint,
                       const char* side) -> RatVec {
    if (hint) return *hint;
    std::optional<RatVec> found;
    std::size_t have = rank_of(base, k);
    scan(k, [&](const RatVec& v) {
      if (!g.nef_h.contains(v) || out.wall.contains(v) || violates_iv(g, fan, v)) return false;
      auto rows = base;
      rows.push_back(v);
      if (rank_of(rows, k) > have) found = v;
      return found.has_value();
    });
    if (!found) throw PBasisError("search", std::string("no p1 found on the ") + side + " side");
    return *found;
  };
  RatVec p1p = pick_side(gp, plus, hints.p1_plus, "plus");
  RatVec p1m;
  if (wall.kind == WallKind::resolution) {
    p1m = gm.d(wall.i_ex);
    if (hints.p1_minus && *hints.p1_minus != p1m)
      throw PBasisError("(iii)", "p1 on the coarse side must be D" + std::to_string(wall.i_ex));
  } else {
    p1m = pick_side(gm, minus, hints.p1_minus, "minus");
  }
  if (out.wall.contains(p1p) || out.wall.contains(p1m)) throw PBasisError("wall", "p1 must lie off the wall");

  std::vector<const ExtendedStackyFan*> both{&plus, &minus};
  std::vector<const GKZData*> gboth{&gp, &gm};
  std::vector<RatVec> sh = integral_rescaling(both, gboth, shared, std::vector<bool>(shared.size(), true));
  RatVec p1p_s = integral_rescaling({&plus}, {&gp}, {p1p}, {true})[0];
  RatVec p1m_s = wall.kind == WallKind::resolution ? p1m : integral_rescaling({&minus}, {&gm}, {p1m}, {true})[0];
  std::vector<RatVec> tail = sh;
  tail.insert(tail.end(), orb.begin(), orb.end());
  std::vector<RatVec> pp{p1p_s}, pm{p1m_s};
  pp.insert(pp.end(), tail.begin(), tail.end());
  pm.insert(pm.end(), tail.begin(), tail.end());
  out.plus = check_pbasis(plus, gp, pp);
  out.minus = check_pbasis(minus, gm, pm);
  return out;
}

int select_a0(const ExtendedStackyFan& fan, const GKZData& gkz, const PBasis& pb, const Brane& brane,
              bool exclude_first) {
  IntVec qa = q_alpha(fan, gkz, pb, brane);
  for (int a : pb.A_K) {
    if (exclude_first && a == 1) continue;
    if (qa[a - 1] >= 1) return a;
  }
  throw CheckFailure("no Kahler parameter divides q^alpha" + std::string(exclude_first ? " other than q1" : ""));
}

WallCrossing parameter_relations(const ExtendedStackyFan& plus, const GKZData& gp, const PBasis& pbp,
                                 const ExtendedStackyFan& minus, const GKZData& gm, const PBasis& pbm,
                                 const WallData& wall, const Brane& brane_minus) {
  const int k = pbp.k();
  if (pbm.k() != k || k < 1) throw PreconditionError("p-bases of different sizes");
  for (int a = 1; a < k; ++a) {
    if (pbp.p[a] != pbm.p[a]) throw CheckFailure("shared-p: p" + std::to_string(a + 1) + " differs between the charts");
    if (!gp.nef_h.contains(pbp.p[a]) || !gm.nef_h.contains(pbp.p[a]))
      throw CheckFailure("shared-p: p" + std::to_string(a + 1) + " is not on the wall");
  }
  WallCrossing wc;
  wc.wall = wall;
  wc.brane_minus = brane_minus;
  auto sol = solve(RatMatrix::from_cols(pbm.p, k), pbp.p[0]);
  if (!sol) throw CheckFailure("p1 of the plus chart is not in the span of the minus basis");
  wc.c = *sol;
  wc.c[0] = -wc.c[0];
  if (wc.c[0] <= 0) throw CheckFailure("orientation: c1 = " + to_string(wc.c[0]) + " is not positive; swap the fans");

  const std::string q1 = qvar(1);
  wc.subst[q1] = Monomial::var(q1, Affine(-wc.c[0]));
  for (int a = 2; a <= k; ++a) wc.subst[qvar(a)] = Monomial::var(qvar(a)) * Monomial::var(q1, Affine(wc.c[a - 1]));

  Transport tr = transport_brane(plus, minus, wall, brane_minus);
  wc.kase = tr.kase;
  wc.branes_plus = tr.branes_plus;
  Affine ex, ey;
  switch (tr.kase) {
    case WallCase::I:
      break;
    case WallCase::IIa:
    case WallCase::IIb: {
      auto fp = flag_frame(plus, tr.branes_plus[0].primary);
      int i4 = flag_frame(minus, brane_minus.primary).i1;
      wc.s14 = BigRational(pbp.s_matrix(plus, tr.branes_plus[0].primary.sigma)(0, i4 - 1));
      wc.m4 = fp.m(i4);
      if (wc.m4 == 0) throw CheckFailure("case II with m4 = 0");
      ex = Affine(wc.s14 / wc.m4);
      wc.framing_shift = tr.b;
      break;
    }
    case WallCase::III: {
      auto fm = flag_frame(minus, brane_minus.primary);
      int i1 = fm.i1, i4 = fm.i2;
      wc.s14 = BigRational(pbp.s_matrix(plus, tr.branes_plus[0].primary.sigma)(0, i4 - 1));
      BigRational m1 = fm.m(i1), n1 = fm.n(i1), l = fm.l;
      wc.m4 = fm.m(i4);
      ex = Affine(-wc.s14 * n1 / (m1 * l), wc.s14 / l);
      ey = Affine(wc.s14 / l);
      Case3Data c3;
      c3.l1 = tr.branes_plus[0].l;
      c3.l2 = tr.branes_plus[1].l;
      if (c3.l1 != fm.n(wall.i_ex)) throw CheckFailure("first split order differs from the n-coordinate of the new ray");
      c3.s14 = wc.s14;
      c3.b_prime = tr.b_prime;
      BigRational l2 = c3.l2;
      c3.subst2["x"] = Monomial::var("x") * Monomial::var(q1, Affine(wc.s14 * (BigRational(c3.l1) - n1) / (m1 * l2), wc.s14 / l2));
      c3.subst2["y"] = Monomial::var("y") * Monomial::var(q1, Affine(wc.s14 / l2));
      wc.case3 = c3;
      break;
    }
  }
  wc.subst["x"] = Monomial::var("x") * Monomial::var(q1, ex);
  wc.subst["y"] = Monomial::var("y") * Monomial::var(q1, ey);
  if (brane_minus.kind == BraneKind::inner) {
    int a0 = select_a0(minus, gm, pbm, brane_minus, true);
    wc.a0 = a0;
    wc.subst["z"] = Monomial::var("z") * Monomial::var(q1, Affine(wc.c[a0 - 1]) - ex);
  }
  return wc;
}

}  // namespace octc
