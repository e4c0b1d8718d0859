#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "octc/exact/matrix.hpp"

namespace octc {

using Point3 = std::array<long, 3>;
// Indices are 1-based labels throughout, matching fan files.
using Cone3 = std::array<int, 3>;
using Edge = std::array<int, 2>;

Cone3 sorted_cone(Cone3 c);
Edge sorted_edge(Edge e);
std::string to_string(const Cone3& c);
std::string to_string(const Edge& e);

class ExtendedStackyFan {
 public:
  ExtendedStackyFan() = default;
  ExtendedStackyFan(std::string name, std::vector<Point3> points, std::vector<int> rays,
                    std::vector<Cone3> cones);

  const std::string& name() const { return name_; }
  int R() const { return static_cast<int>(b_.size()); }
  int k() const { return R() - 3; }
  const Point3& point(int i) const { return b_.at(i - 1); }
  const std::vector<Point3>& points() const { return b_; }
  const std::vector<int>& rays() const { return rays_; }
  const std::vector<int>& orbifold() const { return orb_; }
  bool is_ray(int i) const;
  const std::vector<Cone3>& cones() const { return cones_; }
  bool has_cone(const Cone3& c) const;
  // Sorted, deduplicated 2-cones.
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Cone3> cones_containing(const Edge& e) const;
  IntMatrix beta() const;

 private:
  std::string name_;
  std::vector<Point3> b_;
  std::vector<int> rays_;
  std::vector<int> orb_;
  std::vector<Cone3> cones_;
  std::vector<Edge> edges_;
};

struct Violation {
  std::string kind;
  std::string detail;
};

struct ValidationReport {
  bool structural_ok = true;
  std::vector<Violation> violations;
  // certified heights and the optimal slack when the regularity LP ran
  std::vector<BigRational> heights;
  BigRational slack = 0;
  bool ok() const { return structural_ok && violations.empty(); }
};

ValidationReport validate_fan(const ExtendedStackyFan& fan);
// Throws CheckFailure listing violations.
void require_valid(const ExtendedStackyFan& fan);

// Counterclockwise vertex labels of conv(b_i).
std::vector<int> hull_vertices(const ExtendedStackyFan& fan);
// 2 * oriented area of the triangle (b_a, b_b, b_c) in the plane.
long orient(const Point3& a, const Point3& b, const Point3& c);

struct Flag {
  Edge tau;
  Cone3 sigma;
  bool operator==(const Flag& o) const { return tau == o.tau && sigma == o.sigma; }
};
std::string to_string(const Flag& f);

struct EnumeratedFlag {
  Flag flag;
  bool inner;
};

std::vector<EnumeratedFlag> enumerate_flags(const ExtendedStackyFan& fan);

struct FlagFrame {
  Flag flag;
  Point3 v1, v2, v3;
  long r = 0, s = 0, l = 0;
  int i1 = 0, i2 = 0, i3 = 0;
  std::vector<std::array<long, 2>> mn;
  long m(int i) const { return mn.at(i - 1)[0]; }
  long n(int i) const { return mn.at(i - 1)[1]; }
  // coordinates (a, b, c) with v = a v1 + b v2 + c v3
  std::array<long, 3> coords(const Point3& v) const;
};

FlagFrame flag_frame(const ExtendedStackyFan& fan, const Flag& flag);
// Columns: basis of `from` written in the basis of `to`.
IntMatrix frame_change(const FlagFrame& from, const FlagFrame& to);

struct StabilizerOrders {
  long g_sigma, l, r;
};
StabilizerOrders stabilizer_orders(const ExtendedStackyFan& fan, const Flag& flag);

enum class BraneKind { outer, inner };

struct Brane {
  Flag primary;
  std::optional<Flag> secondary;
  long framing = 0;
  long l = 1;
  BraneKind kind = BraneKind::outer;
  int i4 = 0;
  long r_prime = 0;
};

// primary_cone is required when the edge is shared by two cones.
Brane make_brane(const ExtendedStackyFan& fan, Edge edge, long framing,
                 std::optional<Cone3> primary_cone = std::nullopt);

}  // namespace octc
