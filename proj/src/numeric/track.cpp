#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "octc/numeric/numeric.hpp"

namespace octc {

std::vector<int> match_roots(const std::vector<cplx>& got, const std::vector<cplx>& ref, double tol) {
  std::vector<int> perm;
  std::vector<bool> used(ref.size(), false);
  for (std::size_t i = 0; i < got.size(); ++i) {
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    int best = -1;
    for (std::size_t j = 0; j < ref.size(); ++j) {
      double d = std::abs(got[i] - ref[j]);
      if (d < d1) {
        d2 = d1;
        d1 = d;
        best = static_cast<int>(j);
      } else if (d < d2) {
        d2 = d;
      }
    }
    std::ostringstream os;
    os.precision(3);
    if (best < 0 || d1 > tol * std::max(1.0, std::abs(ref[best]))) {
      os << "no root within tolerance of tracked value " << got[i] << " (nearest distance " << d1 << ")";
      throw TrackFailure(os.str());
    }
    if (d2 < 10 * d1) {
      os << "ambiguous match for tracked value " << got[i] << " (distances " << d1 << ", " << d2 << ")";
      throw TrackFailure(os.str());
    }
    if (used[best]) throw TrackFailure("two tracked roots end on the same root");
    used[best] = true;
    perm.push_back(best);
  }
  return perm;
}

namespace {

double min_pairwise(const std::vector<cplx>& r) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) m = std::min(m, std::abs(r[i] - r[j]));
  return m;
}

// Distance from each tracked value to the nearest other root of H.
double basin(const NumericCurve& c, const LogPoint& at, const std::vector<cplx>& ys) {
  std::vector<cplx> all = roots_at(c, at);
  double m = min_pairwise(ys);
  for (auto y : ys) {
    double near = std::numeric_limits<double>::infinity(), second = near;
    for (auto r : all) {
      double d = std::abs(r - y);
      if (d < near) {
        second = near;
        near = d;
      } else if (d < second) {
        second = d;
      }
    }
    m = std::min(m, second);
  }
  return m;
}

struct Core {
  std::vector<cplx> ys;
  std::vector<std::vector<cplx>> samples;
  double min_sep = std::numeric_limits<double>::infinity();
  int steps = 0, rejected = 0;
};

std::string where(const LogPoint& at) {
  std::ostringstream os;
  os.precision(4);
  for (const auto& [v, l] : at) os << v << "=" << std::exp(l) << " ";
  return os.str();
}

Core run(const NumericCurve& c, const std::vector<LogPoint>& path, const std::vector<cplx>& start,
         std::vector<double> stops, const TrackOptions& opt) {
  if (path.empty()) throw PreconditionError("empty path");
  Core core;
  core.ys = start;
  const double nseg = static_cast<double>(path.size() - 1);
  for (auto& s : stops) s *= nseg;
  std::sort(stops.begin(), stops.end());
  std::size_t next_stop = 0;
  core.samples.resize(stops.size());
  auto at_s = [&](double s) {
    if (path.size() == 1) return path[0];
    std::size_t seg = std::min(static_cast<std::size_t>(s), path.size() - 2);
    return lerp(path[seg], path[seg + 1], s - static_cast<double>(seg));
  };
  const double hmax = opt.max_step * nseg;
  double s = 0, h = hmax;
  double sep = basin(c, at_s(0), core.ys);
  core.min_sep = sep;
  while (next_stop < stops.size() && stops[next_stop] <= 0) core.samples[next_stop++] = core.ys;
  while (s < nseg) {
    if (++core.steps > opt.max_steps) throw TrackFailure("too many steps at " + where(at_s(s)));
    double seg_end = std::floor(s) + 1;
    double target = std::min({s + h, seg_end, nseg});
    if (next_stop < stops.size()) target = std::min(target, stops[next_stop]);
    double dt = target - s;
    std::size_t seg = std::min(static_cast<std::size_t>(s), path.size() - 2);
    LogPoint dir = path[seg + 1];
    for (auto& [v, l] : dir) l -= path[seg].at(v);
    LogPoint p0 = at_s(s), p1 = at_s(target);
    std::vector<cplx> next(core.ys.size());
    bool ok = true;
    for (std::size_t k = 0; k < core.ys.size() && ok; ++k) {
      cplx y = core.ys[k];
      cplx pred = y - dt * c.H_t(y, p0, dir) / c.H_y(y, p0);
      cplx z = pred;
      bool conv = false;
      for (int it = 0; it < 12; ++it) {
        cplx hy = c.H_y(z, p1);
        if (hy == cplx(0)) break;
        cplx d = c.H(z, p1) / hy;
        z -= d;
        if (std::abs(d) <= 1e-14 * std::max(1.0, std::abs(z))) {
          conv = true;
          break;
        }
      }
      ok = conv && std::abs(z - pred) <= sep / 3 && std::abs(z - y) <= sep / 3 &&
           std::abs(c.H(z, p1)) <= opt.tol_residual * c.scale(z, p1);
      next[k] = z;
    }
    if (!ok) {
      ++core.rejected;
      h = dt / 2;
      if (h < opt.min_step) throw TrackFailure("step underflow near " + where(p1));
      continue;
    }
    double nsep = basin(c, p1, next);
    if (nsep < sep / 4 && dt > opt.min_step * 2) {
      // roots approaching each other: refine before accepting
      ++core.rejected;
      h = dt / 2;
      sep = std::min(sep, nsep * 2);
      continue;
    }
    core.ys = next;
    sep = nsep;
    core.min_sep = std::min(core.min_sep, sep);
    s = target;
    h = std::min(hmax, dt * 1.5);
    while (next_stop < stops.size() && stops[next_stop] <= s + 1e-15) core.samples[next_stop++] = core.ys;
  }
  while (next_stop < stops.size()) core.samples[next_stop++] = core.ys;
  return core;
}

}  // namespace

TrackResult track(const NumericCurve& c, const std::vector<LogPoint>& path, const std::vector<cplx>& start,
                  const TrackOptions& opt, const std::vector<cplx>& reference) {
  Core core = run(c, path, start, {}, opt);
  TrackResult r;
  r.start_roots = start;
  r.end_roots = core.ys;
  r.reference = reference.empty() ? roots_at(c, path.back()) : reference;
  r.min_root_separation = core.min_sep;
  r.steps = core.steps;
  r.rejected = core.rejected;
  r.permutation = match_roots(core.ys, r.reference, 1e-6);
  return r;
}

std::vector<std::vector<cplx>> track_samples(const NumericCurve& c, const std::vector<LogPoint>& path,
                                             const std::vector<cplx>& start, const std::vector<double>& ts,
                                             const TrackOptions& opt) {
  return run(c, path, start, ts, opt).samples;
}

}  // namespace octc
