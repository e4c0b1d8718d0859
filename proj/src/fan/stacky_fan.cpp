#include "octc/fan/stacky_fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "octc/exact/lattice.hpp"
#include "octc/fan/regularity.hpp"

namespace octc {

Cone3 sorted_cone(Cone3 c) {
  std::sort(c.begin(), c.end());
  return c;
}

Edge sorted_edge(Edge e) {
  if (e[0] > e[1]) std::swap(e[0], e[1]);
  return e;
}

std::string to_string(const Cone3& c) {
  return "{" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + "}";
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "}";
}

std::string to_string(const Flag& f) { return "(" + to_string(f.tau) + "," + to_string(f.sigma) + ")"; }

ExtendedStackyFan::ExtendedStackyFan(std::string name, std::vector<Point3> points,
                                     std::vector<int> rays, std::vector<Cone3> cones)
    : name_(std::move(name)), b_(std::move(points)), rays_(std::move(rays)) {
  std::sort(rays_.begin(), rays_.end());
  for (int i = 1; i <= R(); ++i)
    if (!std::binary_search(rays_.begin(), rays_.end(), i)) orb_.push_back(i);
  std::set<Edge> edges;
  for (auto c : cones) {
    c = sorted_cone(c);
    cones_.push_back(c);
    edges.insert({c[0], c[1]});
    edges.insert({c[0], c[2]});
    edges.insert({c[1], c[2]});
  }
  edges_.assign(edges.begin(), edges.end());
}

bool ExtendedStackyFan::is_ray(int i) const {
  return std::binary_search(rays_.begin(), rays_.end(), i);
}

bool ExtendedStackyFan::has_cone(const Cone3& c) const {
  auto s = sorted_cone(c);
  return std::find(cones_.begin(), cones_.end(), s) != cones_.end();
}

std::vector<Cone3> ExtendedStackyFan::cones_containing(const Edge& e) const {
  Edge s = sorted_edge(e);
  std::vector<Cone3> out;
  for (const auto& c : cones_) {
    int hits = 0;
    for (int v : c) hits += (v == s[0] || v == s[1]);
    if (hits == 2) out.push_back(c);
  }
  return out;
}

IntMatrix ExtendedStackyFan::beta() const {
  IntMatrix m(3, b_.size());
  for (std::size_t j = 0; j < b_.size(); ++j)
    for (int r = 0; r < 3; ++r) m(r, j) = b_[j][r];
  return m;
}

long orient(const Point3& a, const Point3& b, const Point3& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

namespace {

long det3(const Point3& a, const Point3& b, const Point3& c) {
  // columns a, b, c
  return a[0] * (b[1] * c[2] - c[1] * b[2]) - b[0] * (a[1] * c[2] - c[1] * a[2]) +
         c[0] * (a[1] * b[2] - b[1] * a[2]);
}

bool in_closed_triangle(const Point3& p, const Point3& a, const Point3& b, const Point3& c) {
  long o = orient(a, b, c);
  long s1 = orient(a, b, p), s2 = orient(b, c, p), s3 = orient(c, a, p);
  if (o < 0) {
    s1 = -s1;
    s2 = -s2;
    s3 = -s3;
  }
  return s1 >= 0 && s2 >= 0 && s3 >= 0;
}

// True when some edge line of either triangle weakly separates them.
bool interiors_disjoint(const std::array<Point3, 3>& t, const std::array<Point3, 3>& u) {
  auto separated = [](const std::array<Point3, 3>& a, const std::array<Point3, 3>& b) {
    long o = orient(a[0], a[1], a[2]);
    for (int e = 0; e < 3; ++e) {
      const Point3& p = a[e];
      const Point3& q = a[(e + 1) % 3];
      bool all_out = true;
      for (const auto& v : b) {
        long s = orient(p, q, v);
        if (o < 0) s = -s;
        if (s > 0) {
          all_out = false;
          break;
        }
      }
      if (all_out) return true;
    }
    return false;
  };
  return separated(t, u) || separated(u, t);
}

long gcd_l(long a, long b) { return std::gcd(std::labs(a), std::labs(b)); }

}  // namespace

std::vector<int> hull_vertices(const ExtendedStackyFan& fan) {
  std::vector<int> idx(fan.R());
  std::iota(idx.begin(), idx.end(), 1);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto& p = fan.point(a);
    const auto& q = fan.point(b);
    return p[0] != q[0] ? p[0] < q[0] : p[1] < q[1];
  });
  if (idx.size() < 3) return idx;
  std::vector<int> h(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    while (k >= 2 && orient(fan.point(h[k - 2]), fan.point(h[k - 1]), fan.point(idx[i])) <= 0) --k;
    h[k++] = idx[i];
  }
  for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(fan.point(h[k - 2]), fan.point(h[k - 1]), fan.point(idx[i])) <= 0) --k;
    h[k++] = idx[i];
  }
  h.resize(k - 1);
  return h;
}

ValidationReport validate_fan(const ExtendedStackyFan& fan) {
  ValidationReport rep;
  auto structural = [&](const std::string& d) {
    rep.structural_ok = false;
    rep.violations.push_back({"structural", d});
  };
  const int R = fan.R();
  if (R < 3) structural("fewer than three lattice points");
  std::set<int> ray_set;
  for (int r : fan.rays()) {
    if (r < 1 || r > R) structural("ray index " + std::to_string(r) + " out of range");
    if (!ray_set.insert(r).second) structural("ray index " + std::to_string(r) + " repeated");
  }
  if (fan.cones().empty()) structural("no maximal cones");
  std::set<Cone3> cone_set;
  for (const auto& c : fan.cones()) {
    if (c[0] == c[1] || c[1] == c[2]) structural("cone " + to_string(c) + " repeats an index");
    for (int v : c)
      if (!ray_set.count(v)) structural("cone " + to_string(c) + " uses non-ray index " + std::to_string(v));
    if (!cone_set.insert(c).second) structural("cone " + to_string(c) + " listed twice");
  }
  if (!rep.structural_ok) return rep;

  auto fail = [&](const std::string& kind, const std::string& d) { rep.violations.push_back({kind, d}); };

  for (int i = 1; i <= R; ++i)
    if (fan.point(i)[2] != 1) fail("not normalized", "point " + std::to_string(i) + " has third coordinate != 1");
  for (int i = 1; i <= R; ++i)
    for (int j = i + 1; j <= R; ++j)
      if (fan.point(i) == fan.point(j))
        fail("duplicate lattice point", "points " + std::to_string(i) + " and " + std::to_string(j));
  if (!rep.violations.empty()) return rep;

  for (const auto& c : fan.cones())
    if (orient(fan.point(c[0]), fan.point(c[1]), fan.point(c[2])) == 0)
      fail("non-simplicial cone", "cone " + to_string(c) + " is degenerate");
  if (!rep.violations.empty()) return rep;

  for (int r : fan.rays()) {
    bool used = false;
    for (const auto& c : fan.cones())
      used = used || c[0] == r || c[1] == r || c[2] == r;
    if (!used) fail("unused ray", "ray " + std::to_string(r) + " is in no cone");
  }

  auto tri = [&](const Cone3& c) {
    return std::array<Point3, 3>{fan.point(c[0]), fan.point(c[1]), fan.point(c[2])};
  };
  const auto& cones = fan.cones();
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b)
      if (!interiors_disjoint(tri(cones[a]), tri(cones[b])))
        fail("cone overlap", "cones " + to_string(cones[a]) + " and " + to_string(cones[b]) + " overlap");
  for (int r : fan.rays())
    for (const auto& c : cones) {
      if (c[0] == r || c[1] == r || c[2] == r) continue;
      auto t = tri(c);
      if (in_closed_triangle(fan.point(r), t[0], t[1], t[2]))
        fail("improper face intersection", "ray " + std::to_string(r) + " lies in cone " + to_string(c));
    }

  // coverage and completeness of the lattice point list
  auto hull = hull_vertices(fan);
  long twice_hull = 0, boundary = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& p = fan.point(hull[i]);
    const auto& q = fan.point(hull[(i + 1) % hull.size()]);
    twice_hull += p[0] * q[1] - q[0] * p[1];
    boundary += gcd_l(q[0] - p[0], q[1] - p[1]);
  }
  long twice_cones = 0;
  for (const auto& c : cones) twice_cones += std::labs(orient(fan.point(c[0]), fan.point(c[1]), fan.point(c[2])));
  if (rep.violations.empty() && twice_cones != twice_hull)
    fail("triangulation gap", "cones cover area " + std::to_string(twice_cones) + "/2 of hull area " +
                                  std::to_string(twice_hull) + "/2");
  long lattice_points = (twice_hull + boundary + 2) / 2;
  if (lattice_points != R)
    fail("incomplete lattice point list", "polygon has " + std::to_string(lattice_points) +
                                              " lattice points, file lists " + std::to_string(R));

  auto sm = smith(fan.beta());
  bool spans = sm.diag.size() == 3;
  for (const auto& d : sm.diag) spans = spans && d == 1;
  if (!spans) fail("non-spanning points", "points do not generate Z^3");

  if (!rep.violations.empty()) return rep;

  auto reg = regularity_lp(fan);
  rep.heights = reg.heights;
  rep.slack = reg.slack;
  if (!reg.regular) {
    std::string where = reg.binding.empty() ? "unknown" : reg.binding.front();
    fail("irregular triangulation", "no strictly convex heights; violating " + where);
  }
  return rep;
}

void require_valid(const ExtendedStackyFan& fan) {
  auto rep = validate_fan(fan);
  if (rep.ok()) return;
  std::ostringstream os;
  os << "fan '" << fan.name() << "' invalid:";
  for (const auto& v : rep.violations) os << " [" << v.kind << ": " << v.detail << "]";
  throw CheckFailure(os.str());
}

std::vector<EnumeratedFlag> enumerate_flags(const ExtendedStackyFan& fan) {
  std::vector<EnumeratedFlag> out;
  for (const auto& e : fan.edges()) {
    auto adj = fan.cones_containing(e);
    for (const auto& c : adj) out.push_back({{e, c}, adj.size() == 2});
  }
  return out;
}

std::array<long, 3> FlagFrame::coords(const Point3& v) const {
  // basis has determinant one; solve by Cramer's rule
  long d = det3(v1, v2, v3);
  std::array<long, 3> out{det3(v, v2, v3), det3(v1, v, v3), det3(v1, v2, v)};
  if (d != 1) throw CheckFailure("flag frame basis is not unimodular");
  return out;
}

FlagFrame flag_frame(const ExtendedStackyFan& fan, const Flag& flag) {
  Edge tau = sorted_edge(flag.tau);
  Cone3 sigma = sorted_cone(flag.sigma);
  if (!fan.has_cone(sigma)) throw PreconditionError("flag cone " + to_string(sigma) + " is not a maximal cone");
  int i1 = 0, hits = 0;
  for (int v : sigma) {
    if (v == tau[0] || v == tau[1]) ++hits;
    else i1 = v;
  }
  if (hits != 2) throw PreconditionError("edge " + to_string(tau) + " is not a face of " + to_string(sigma));
  FlagFrame f;
  f.flag = {tau, sigma};
  f.i1 = i1;
  if (orient(fan.point(i1), fan.point(tau[0]), fan.point(tau[1])) > 0) {
    f.i2 = tau[0];
    f.i3 = tau[1];
  } else {
    f.i2 = tau[1];
    f.i3 = tau[0];
  }
  const Point3& b1 = fan.point(f.i1);
  const Point3& b2 = fan.point(f.i2);
  const Point3& b3 = fan.point(f.i3);
  Point3 d{b2[0] - b3[0], b2[1] - b3[1], b2[2] - b3[2]};
  f.l = std::gcd(gcd_l(d[0], d[1]), std::labs(d[2]));
  f.v3 = b3;
  f.v2 = {d[0] / f.l, d[1] / f.l, d[2] / f.l};
  long g = std::labs(det3(b1, b2, b3));
  if (g % f.l != 0) throw CheckFailure("edge index does not divide cone index");
  f.r = g / f.l;
  Point3 w{b1[0] - b3[0], b1[1] - b3[1], b1[2] - b3[2]};
  bool found = false;
  for (long s = 0; s < f.r && !found; ++s) {
    Point3 t{w[0] + s * f.v2[0], w[1] + s * f.v2[1], w[2] + s * f.v2[2]};
    if (t[0] % f.r == 0 && t[1] % f.r == 0 && t[2] % f.r == 0) {
      f.s = s;
      f.v1 = {t[0] / f.r, t[1] / f.r, t[2] / f.r};
      found = true;
    }
  }
  if (!found) throw CheckFailure("no admissible s for flag " + to_string(flag));
  for (const auto& p : fan.points()) {
    auto c = f.coords(p);
    if (c[2] != 1) throw CheckFailure("lattice point off the height-one plane in flag frame");
    f.mn.push_back({c[0], c[1]});
  }
  return f;
}

IntMatrix frame_change(const FlagFrame& from, const FlagFrame& to) {
  IntMatrix m(3, 3);
  const Point3* basis[3] = {&from.v1, &from.v2, &from.v3};
  for (int j = 0; j < 3; ++j) {
    auto c = to.coords(*basis[j]);
    for (int i = 0; i < 3; ++i) m(i, j) = c[i];
  }
  return m;
}

StabilizerOrders stabilizer_orders(const ExtendedStackyFan& fan, const Flag& flag) {
  auto f = flag_frame(fan, flag);
  long g = std::labs(det3(fan.point(f.i1), fan.point(f.i2), fan.point(f.i3)));
  return {g, f.l, f.r};
}

Brane make_brane(const ExtendedStackyFan& fan, Edge edge, long framing, std::optional<Cone3> primary_cone) {
  Edge e = sorted_edge(edge);
  if (!std::binary_search(fan.edges().begin(), fan.edges().end(), e))
    throw PreconditionError("edge " + to_string(e) + " is not in the fan");
  auto adj = fan.cones_containing(e);
  Brane br;
  br.framing = framing;
  if (primary_cone) {
    Cone3 pc = sorted_cone(*primary_cone);
    if (std::find(adj.begin(), adj.end(), pc) == adj.end())
      throw PreconditionError("cone " + to_string(pc) + " does not contain edge " + to_string(e));
    if (adj.size() == 2 && adj[1] == pc) std::swap(adj[0], adj[1]);
  } else if (adj.size() == 2) {
    throw PreconditionError("edge " + to_string(e) + " is inner; the primary cone must be named");
  }
  br.primary = {e, adj[0]};
  auto frame = flag_frame(fan, br.primary);
  br.l = frame.l;
  if (adj.size() == 2) {
    br.kind = BraneKind::inner;
    br.secondary = Flag{e, adj[1]};
    for (int v : adj[1])
      if (v != e[0] && v != e[1]) br.i4 = v;
    br.r_prime = -frame.m(br.i4);
    if (br.r_prime <= 0) throw CheckFailure("inner brane with non-positive r'");
  }
  return br;
}

}  // namespace octc
