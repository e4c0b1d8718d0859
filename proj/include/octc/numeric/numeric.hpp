#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "octc/curve/curve.hpp"
#include "octc/series/disk.hpp"

namespace octc {

using cplx = std::complex<double>;

// Step underflow, ambiguous matches, degenerate parameters.
class TrackFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter values stored as logarithms, so fractional powers follow the
// branch continued along a path.
using LogPoint = std::map<std::string, cplx, VarLess>;

LogPoint log_point(const std::map<std::string, cplx, VarLess>& values);
// Continue log values from `prev` (nearest branch of each log).
LogPoint continue_logs(const std::map<std::string, cplx, VarLess>& values, const LogPoint& prev);
LogPoint lerp(const LogPoint& a, const LogPoint& b, double t);
cplx monomial_value(const Monomial& m, const LogPoint& at);  // m may not involve y

// Curve with every parameter numeric except y.
class NumericCurve {
 public:
  explicit NumericCurve(const CurveEquation& bound);

  // Coefficients a_0..a_d of y^(-ymin) H(y).
  std::vector<cplx> poly(const LogPoint& at) const;
  cplx H(cplx y, const LogPoint& at) const;
  cplx H_y(cplx y, const LogPoint& at) const;
  cplx xH_x(cplx y, const LogPoint& at) const;  // x dH/dx
  // d/dt H along at + t*dir in log space.
  cplx H_t(cplx y, const LogPoint& at, const LogPoint& dir) const;
  // x d/dx log y on the branch through y.
  cplx x_log_derivative(cplx y, const LogPoint& at) const;
  double scale(cplx y, const LogPoint& at) const;  // sum of |term| for residual scaling
  long ymin() const { return ymin_; }
  long ymax() const { return ymax_; }
  const std::vector<std::string>& params() const { return params_; }

 private:
  struct Term {
    double coeff;
    long ny;
    std::vector<std::pair<std::string, double>> exps;
  };
  cplx base(const Term& t, const LogPoint& at) const;
  std::vector<Term> terms_;
  std::vector<std::string> params_;
  long ymin_ = 0, ymax_ = 0;
};

// All roots of the polynomial (lowest coefficient first), Aberth-Ehrlich.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& a);
std::vector<cplx> roots_at(const NumericCurve& c, const LogPoint& at);

struct TrackOptions {
  double tol_residual = 1e-10;
  double min_step = 1e-12;
  double max_step = 0.05;  // fraction of the whole path
  int max_steps = 200000;
};

struct TrackResult {
  std::vector<cplx> start_roots, end_roots;
  std::vector<int> permutation;  // start index -> index into the reference list
  std::vector<cplx> reference;
  double min_root_separation = 0;
  int steps = 0, rejected = 0;
  std::string status = "ok";
};

// Nearest-neighbour matching, injective, failing if the runner-up is within 10x.
std::vector<int> match_roots(const std::vector<cplx>& got, const std::vector<cplx>& ref, double tol);

// Follows `start` along the polygon `path` (log space). The end points are
// matched against `reference`, or against all roots at the end when empty.
TrackResult track(const NumericCurve& c, const std::vector<LogPoint>& path, const std::vector<cplx>& start,
                  const TrackOptions& opt = {}, const std::vector<cplx>& reference = {});
// Tracked values at intermediate parameters t in (0,1) along the polygon.
std::vector<std::vector<cplx>> track_samples(const NumericCurve& c, const std::vector<LogPoint>& path,
                                             const std::vector<cplx>& start, const std::vector<double>& ts,
                                             const TrackOptions& opt = {});

using Permutation = std::vector<int>;  // 0-based images
Permutation compose(const Permutation& a, const Permutation& b);  // a after b
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);
std::string to_string(const Permutation& p);  // 1-based cycle notation

struct MonodromyReport {
  long ell = 0;
  std::vector<std::string> vars;           // restricted coordinates
  std::vector<cplx> base;                  // base parameter values
  std::vector<cplx> base_roots;            // ordered near exp(pi i (2j-1)/l)
  std::vector<Permutation> generators;
  std::vector<std::string> loop_labels;
  std::size_t group_order = 0;
  bool transitive = false;
  std::optional<Permutation> target;
  bool target_realized = false;
  std::vector<int> target_word;  // generator indices, applied first to last
};

// Restricted equation: terms of the bound curve free of x (and z).
CurveEquation restricted_curve(const CurveEquation& bound);
// Loops around the discriminant points of each coordinate, based near the LRL.
MonodromyReport monodromy_check(const CurveEquation& restricted, std::uint64_t seed,
                                const std::optional<Permutation>& target = std::nullopt,
                                const TrackOptions& opt = {});

struct NumericConfig {
  int order = 12;
  double magnitude = 1e-2;
  double tol_chart = 1e-10;
  double tol_match = 1e-8;
  double tol_derivative = 1e-9;
  double tol_residual = 1e-10;
  std::uint64_t seed = 1;
  long framing = 0;           // f_plus
  std::vector<cplx> q1_path;  // vertices for q_plus_1; default 1e-2 -> 1e2
  int midpoints = 3;
};

struct SubCheck {
  bool ok = false;
  std::string detail;
  double worst = 0;
};

struct OctcVerdict {
  SubCheck chart, matching, derivative, monodromy;
  Permutation realized;  // plus branch j -> minus branch
  std::vector<cplx> plus_start, plus_end, minus_series;
  std::optional<MonodromyReport> mono;
  std::string u_relation;  // matrices used by the assembled relation
  bool ok() const { return chart.ok && matching.ok && derivative.ok && monodromy.ok; }
};

// Outer branes only. Curves carry symbolic framing.
OctcVerdict verify_octc(const WallCrossing& wc, const CurveEquation& plus, const CurveEquation& minus,
                        const std::optional<CurveEquation>& plus2, const NumericConfig& cfg);

}  // namespace octc
