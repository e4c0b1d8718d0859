#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <sstream>

#include "octc/numeric/numeric.hpp"

namespace octc {

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a.at(b[i]);
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r.at(p[i]) = static_cast<int>(i);
  return r;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::string to_string(const Permutation& p) {
  std::string s;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    s += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (s.back() != '(') s += " ";
      s += std::to_string(j + 1);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

CurveEquation restricted_curve(const CurveEquation& c) {
  CurveEquation r = c;
  r.terms.clear();
  for (const auto& t : c.terms)
    if (t.exp("x").is_zero() && t.exp("z").is_zero()) r.terms.push_back(t);
  if (r.terms.empty()) throw PreconditionError("restricted equation is empty");
  return r;
}

namespace {

using Poly = std::vector<cplx>;

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<double>(i));
  if (d.empty()) d.push_back(0.0);
  return d;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

cplx poly_eval(const Poly& p, cplx z) {
  cplx s = 0;
  for (std::size_t i = p.size(); i-- > 0;) s = s * z + p[i];
  return s;
}

void trim(Poly& p) {
  double m = 0;
  for (auto c : p) m = std::max(m, std::abs(c));
  while (p.size() > 1 && std::abs(p.back()) <= 1e-14 * m) p.pop_back();
}

double generic_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.3, std::numbers::pi - 0.3);
  double phi = u(rng);
  return (rng() & 1) ? phi : -phi;
}

}  // namespace

MonodromyReport monodromy_check(const CurveEquation& restricted, std::uint64_t seed, const std::optional<Permutation>& target,
                                const TrackOptions& opt) {
  NumericCurve nc(restricted);
  MonodromyReport rep;
  if (nc.ymin() != 0) throw PreconditionError("restricted equation must be a polynomial with nonzero constant term");
  rep.ell = nc.ymax();
  rep.vars = nc.params();
  std::mt19937_64 rng(seed);
  std::map<std::string, cplx, VarLess> base;
  for (const auto& v : rep.vars) {
    base[v] = std::polar(1e-2, generic_phase(rng));
    rep.base.push_back(base[v]);
  }
  LogPoint base_log = log_point(base);
  // order base roots by the nearest exp(pi i (2j-1)/l)
  std::vector<cplx> roots = roots_at(nc, base_log);
  if (static_cast<long>(roots.size()) != rep.ell) throw PreconditionError("restricted equation degree mismatch");
  std::vector<cplx> lrl;
  for (long j = 1; j <= rep.ell; ++j)
    lrl.push_back(std::polar(1.0, std::numbers::pi * static_cast<double>(2 * j - 1) / static_cast<double>(rep.ell)));
  Permutation order = match_roots(lrl, roots, 0.5);
  for (long j = 0; j < rep.ell; ++j) rep.base_roots.push_back(roots[order[j]]);

  if (rep.ell > 1) {
    for (const auto& v : rep.vars) {
      // P = A(y) + v B(y) when v occurs linearly; otherwise skip v.
      Poly A(rep.ell + 1, 0.0), B(rep.ell + 1, 0.0);
      bool linear = true;
      for (const auto& t : restricted.terms) {
        Affine e = t.exp(v);
        Monomial rest = t;
        rest.set_exp(v, Affine(0));
        rest.set_exp("y", Affine(0));
        long ny = static_cast<long>(numerator(t.exp("y").c0));
        cplx val = monomial_value(rest, base_log);
        if (e.is_zero()) A[ny] += val;
        else if (e == Affine(1)) B[ny] += val;
        else linear = false;
      }
      if (!linear) continue;
      Poly W = poly_sub(poly_mul(A, poly_derivative(B)), poly_mul(poly_derivative(A), B));
      trim(W);
      while (W.size() > 1 && std::abs(W.front()) == 0.0) W.erase(W.begin());  // y = 0 gives B = 0
      if (W.size() < 2) continue;
      std::vector<cplx> disc;
      for (cplx y : polynomial_roots(W)) {
        cplx b = poly_eval(B, y);
        if (std::abs(b) < 1e-12) continue;
        cplx vs = -poly_eval(A, y) / b;
        bool dup = std::abs(vs) < 1e-9;
        for (auto d : disc) dup = dup || std::abs(d - vs) < 1e-8 * std::max(1.0, std::abs(vs));
        if (!dup) disc.push_back(vs);
      }
      cplx v0 = base.at(v);
      for (std::size_t di = 0; di < disc.size(); ++di) {
        cplx vs = disc[di];
        double r = std::abs(vs) / 3;
        for (std::size_t dj = 0; dj < disc.size(); ++dj)
          if (dj != di) r = std::min(r, std::abs(disc[dj] - vs) / 3);
        r = std::min(r, std::abs(vs - v0) / 3);
        cplx u = (v0 - vs) / std::abs(v0 - vs);
        std::vector<cplx> pts;
        const int nline = 32, ncirc = 64;
        cplx entry = vs + r * u;
        for (int i = 0; i <= nline; ++i) pts.push_back(v0 + (entry - v0) * (static_cast<double>(i) / nline));
        for (int i = 1; i <= ncirc; ++i) pts.push_back(vs + r * u * std::polar(1.0, 2 * std::numbers::pi * i / ncirc));
        for (int i = nline - 1; i >= 0; --i) pts.push_back(v0 + (entry - v0) * (static_cast<double>(i) / nline));
        std::vector<LogPoint> path;
        for (auto p : pts) {
          auto vals = base;
          vals[v] = p;
          path.push_back(path.empty() ? continue_logs(vals, base_log) : continue_logs(vals, path.back()));
        }
        // the loop avoids 0, so the logs close up
        for (auto& [name, l] : path.back()) l = base_log.at(name);
        TrackResult tr = track(nc, path, rep.base_roots, opt, rep.base_roots);
        rep.generators.push_back(tr.permutation);
        std::ostringstream os;
        os.precision(6);
        os << "loop in " << v << " around " << vs.real() << (vs.imag() < 0 ? "" : "+") << vs.imag() << "i";
        rep.loop_labels.push_back(os.str());
      }
    }
  }
  // group closure with parent pointers
  Permutation id(rep.ell);
  for (long i = 0; i < rep.ell; ++i) id[i] = static_cast<int>(i);
  std::map<Permutation, std::pair<Permutation, int>> parent;
  parent[id] = {id, -1};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < rep.generators.size(); ++g) {
      Permutation q = compose(rep.generators[g], p);  // p first, then generator g
      if (parent.emplace(q, std::make_pair(p, static_cast<int>(g))).second) queue.push_back(q);
    }
  }
  rep.group_order = parent.size();
  std::vector<bool> orbit(rep.ell, false);
  for (const auto& [p, _] : parent) orbit[p[0]] = true;
  rep.transitive = std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
  if (target) {
    rep.target = target;
    auto it = parent.find(*target);
    rep.target_realized = it != parent.end();
    if (rep.target_realized) {
      for (Permutation p = *target; parent.at(p).second >= 0; p = parent.at(p).first)
        rep.target_word.push_back(parent.at(p).second);
      std::reverse(rep.target_word.begin(), rep.target_word.end());
    }
  }
  return rep;
}

}  // namespace octc
