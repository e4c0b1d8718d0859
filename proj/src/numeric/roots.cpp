#include <algorithm>
#include <cmath>
#include <numbers>

#include "octc/numeric/numeric.hpp"

namespace octc {

LogPoint log_point(const std::map<std::string, cplx, VarLess>& values) {
  LogPoint p;
  for (const auto& [v, z] : values) {
    if (z == cplx(0)) throw TrackFailure("parameter " + v + " is zero");
    p[v] = std::log(z);
  }
  return p;
}

LogPoint continue_logs(const std::map<std::string, cplx, VarLess>& values, const LogPoint& prev) {
  LogPoint p = log_point(values);
  for (auto& [v, l] : p) {
    auto it = prev.find(v);
    if (it == prev.end()) continue;
    double k = std::round((it->second.imag() - l.imag()) / (2 * std::numbers::pi));
    l += cplx(0, 2 * std::numbers::pi * k);
  }
  return p;
}

LogPoint lerp(const LogPoint& a, const LogPoint& b, double t) {
  LogPoint p = a;
  for (auto& [v, l] : p) l = (1 - t) * l + t * b.at(v);
  return p;
}

cplx monomial_value(const Monomial& m, const LogPoint& at) {
  cplx e = 0;
  for (const auto& [v, a] : m.exps()) {
    if (!a.is_constant()) throw PreconditionError("monomial has unbound framing: " + m.str());
    auto it = at.find(v);
    if (it == at.end()) throw PreconditionError("no value for " + v);
    e += to_double(a.c0) * it->second;
  }
  return to_double(m.coeff()) * std::exp(e);
}

NumericCurve::NumericCurve(const CurveEquation& c) {
  bool first = true;
  for (const auto& t : c.terms) {
    Term term{to_double(t.coeff()), 0, {}};
    for (const auto& [v, a] : t.exps()) {
      if (!a.is_constant()) throw PreconditionError("curve must have its framing bound");
      if (v == "y") {
        if (denominator(a.c0) != 1) throw PreconditionError("non-integer y exponent");
        term.ny = static_cast<long>(numerator(a.c0));
      } else {
        term.exps.emplace_back(v, to_double(a.c0));
        if (std::find(params_.begin(), params_.end(), v) == params_.end()) params_.push_back(v);
      }
    }
    ymin_ = first ? term.ny : std::min(ymin_, term.ny);
    ymax_ = first ? term.ny : std::max(ymax_, term.ny);
    first = false;
    terms_.push_back(std::move(term));
  }
  if (terms_.empty()) throw PreconditionError("empty curve");
}

cplx NumericCurve::base(const Term& t, const LogPoint& at) const {
  cplx e = 0;
  for (const auto& [v, x] : t.exps) {
    auto it = at.find(v);
    if (it == at.end()) throw PreconditionError("no value for curve parameter " + v);
    e += x * it->second;
  }
  return t.coeff * std::exp(e);
}

std::vector<cplx> NumericCurve::poly(const LogPoint& at) const {
  std::vector<cplx> a(static_cast<std::size_t>(ymax_ - ymin_ + 1), 0.0);
  for (const auto& t : terms_) a[t.ny - ymin_] += base(t, at);
  return a;
}

cplx NumericCurve::H(cplx y, const LogPoint& at) const {
  cplx s = 0;
  for (const auto& t : terms_) s += base(t, at) * std::pow(y, static_cast<int>(t.ny));
  return s;
}

cplx NumericCurve::H_y(cplx y, const LogPoint& at) const {
  cplx s = 0;
  for (const auto& t : terms_)
    if (t.ny) s += base(t, at) * static_cast<double>(t.ny) * std::pow(y, static_cast<int>(t.ny - 1));
  return s;
}

cplx NumericCurve::xH_x(cplx y, const LogPoint& at) const {
  cplx s = 0;
  for (const auto& t : terms_)
    for (const auto& [v, x] : t.exps)
      if (v == "x") s += base(t, at) * x * std::pow(y, static_cast<int>(t.ny));
  return s;
}

cplx NumericCurve::H_t(cplx y, const LogPoint& at, const LogPoint& dir) const {
  cplx s = 0;
  for (const auto& t : terms_) {
    cplx d = 0;
    for (const auto& [v, x] : t.exps) d += x * dir.at(v);
    s += base(t, at) * d * std::pow(y, static_cast<int>(t.ny));
  }
  return s;
}

cplx NumericCurve::x_log_derivative(cplx y, const LogPoint& at) const {
  return -xH_x(y, at) / (y * H_y(y, at));
}

double NumericCurve::scale(cplx y, const LogPoint& at) const {
  double s = 0;
  for (const auto& t : terms_) s += std::abs(base(t, at) * std::pow(y, static_cast<int>(t.ny)));
  return s;
}

namespace {

cplx horner(const std::vector<cplx>& a, cplx z, cplx* deriv) {
  cplx p = a.back(), d = 0;
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    d = d * z + p;
    p = p * z + a[i];
  }
  if (deriv) *deriv = d;
  return p;
}

double abs_horner(const std::vector<cplx>& a, double r) {
  double p = 0;
  for (std::size_t i = a.size(); i-- > 0;) p = p * r + std::abs(a[i]);
  return p;
}

}  // namespace

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
  std::vector<cplx> a = coeffs;
  double amax = 0;
  for (auto c : a) amax = std::max(amax, std::abs(c));
  if (a.empty() || amax == 0) throw TrackFailure("degenerate parameters: zero polynomial");
  if (std::abs(a.back()) <= 1e-300 * amax || std::abs(a.front()) <= 1e-300 * amax)
    throw TrackFailure("degenerate parameters: extreme coefficient vanishes");
  const std::size_t d = a.size() - 1;
  if (d == 0) return {};
  if (d == 1) return {-a[0] / a[1]};
  // Start on circles given by the Newton polygon of log|a_i|.
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i <= d; ++i) {
    if (a[i] == cplx(0)) continue;
    auto h = [&](std::size_t k) { return std::log(std::abs(a[k])); };
    while (hull.size() >= 2) {
      std::size_t p = hull[hull.size() - 2], q = hull.back();
      if ((h(q) - h(p)) * static_cast<double>(i - q) <= (h(i) - h(q)) * static_cast<double>(q - p)) hull.pop_back();
      else break;
    }
    hull.push_back(i);
  }
  std::vector<cplx> z;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    std::size_t i = hull[e], j = hull[e + 1], m = j - i;
    double r = std::pow(std::abs(a[i] / a[j]), 1.0 / static_cast<double>(m));
    for (std::size_t k = 0; k < m; ++k)
      z.push_back(std::polar(r, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m) + 0.4 + 0.7 * e));
  }
  for (int it = 0; it < 2000; ++it) {
    double worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
      cplx dp;
      cplx p = horner(a, z[k], &dp);
      if (p == cplx(0)) continue;
      cplx ratio = p / dp;
      cplx sum = 0;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      cplx w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1e-300, std::abs(z[k])));
    }
    if (worst < 1e-15) break;
  }
  // Newton polish and residual check.
  for (auto& r : z) {
    for (int i = 0; i < 3; ++i) {
      cplx dp;
      cplx p = horner(a, r, &dp);
      if (dp == cplx(0)) break;
      cplx nr = r - p / dp;
      if (std::abs(horner(a, nr, nullptr)) < std::abs(p)) r = nr;
    }
    double res = std::abs(horner(a, r, nullptr)) / abs_horner(a, std::abs(r));
    if (!(res <= 1e-13)) throw TrackFailure("root finder did not converge (relative residual " + std::to_string(res) + ")");
  }
  return z;
}

std::vector<cplx> roots_at(const NumericCurve& c, const LogPoint& at) { return polynomial_roots(c.poly(at)); }

}  // namespace octc
