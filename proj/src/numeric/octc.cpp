#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "octc/numeric/numeric.hpp"
#include "octc/series/newton.hpp"

namespace octc {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::map<std::string, cplx, VarLess> values_of(const LogPoint& p) {
  std::map<std::string, cplx, VarLess> v;
  for (const auto& [n, l] : p) v[n] = std::exp(l);
  return v;
}

// Minus-chart parameters (logs) from plus-chart logs via the wall rules.
LogPoint minus_point(const SubstitutionMap& rules, const LogPoint& plus) {
  LogPoint m;
  for (const auto& [v, mono] : rules) {
    if (v == "y") continue;
    cplx l = std::log(to_double(mono.coeff()));
    for (const auto& [w, a] : mono.exps()) l += to_double(a.c0) * plus.at(w);
    m[v] = l;
  }
  for (const auto& [v, l] : plus)
    if (!rules.count(v)) m[v] = l;
  return m;
}

// y_minus / y_plus.
cplx y_factor(const SubstitutionMap& rules, const LogPoint& plus) {
  Monomial f = rules.at("y");
  f.set_exp("y", Affine(0));
  return monomial_value(f, plus);
}

std::vector<cplx> eval_roots(const std::vector<FloatSeries>& roots, const LogPoint& at) {
  std::vector<cplx> out;
  std::map<std::string, cplx> vals;
  for (const auto& [n, v] : values_of(at)) vals[n] = v;
  for (const auto& r : roots) out.push_back(r.evaluate(vals));
  return out;
}

SubstitutionMap bind_rules(const SubstitutionMap& rules, long f) {
  SubstitutionMap out;
  for (const auto& [v, m] : rules) out.emplace(v, m.bind_framing(BigRational(f)));
  return out;
}

std::string matrix_str(const UMatrix& u) { return u.str(); }

}  // namespace

OctcVerdict verify_octc(const WallCrossing& wc, const CurveEquation& plus, const CurveEquation& minus,
                        const std::optional<CurveEquation>& plus2, const NumericConfig& cfg) {
  if (wc.a0) throw PreconditionError("numeric verification supports outer branes only");
  if (wc.case3 && !plus2) throw PreconditionError("Case III needs the second-brane curve");
  OctcVerdict out;
  const long fp = cfg.framing;
  CurveEquation Hp = plus.bind_framing(fp), Hm = minus.bind_framing(fp - wc.framing_shift);
  SubstitutionMap rules = bind_rules(wc.subst, fp);
  NumericCurve np(Hp), nm(Hm);

  // Plus-chart base values: small generic phases, shrunk so the minus chart
  // is also near its limit at the far end.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> u(0.3, std::numbers::pi - 0.3);
  auto phase = [&] {
    double p = u(rng);
    return (rng() & 1) ? p : -p;
  };
  const double mag = cfg.magnitude;
  std::map<std::string, cplx, VarLess> fixed;
  std::vector<std::string> params = {"x"};
  for (int a = 2; a <= Hp.k; ++a) params.push_back(qvar(a));
  for (const auto& v : params) {
    double e = 0;
    auto it = rules.find(v);
    if (it != rules.end()) e = to_double(it->second.exp(qvar(1)).c0);
    fixed[v] = std::polar(std::pow(mag, 1 + std::max(0.0, e)), phase());
  }
  std::vector<cplx> q1s = cfg.q1_path;
  if (q1s.empty()) {
    double ph = phase();
    q1s = {std::polar(mag, ph), std::polar(1 / mag, ph)};
  }
  std::vector<LogPoint> path;
  for (auto q : q1s) {
    auto vals = fixed;
    vals[qvar(1)] = q;
    path.push_back(path.empty() ? log_point(vals) : continue_logs(vals, path.back()));
  }
  TrackOptions topt;
  topt.tol_residual = cfg.tol_residual;

  // (a) chart consistency along the path
  {
    double worst = 0;
    std::string err;
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      double s = t * static_cast<double>(path.size() - 1);
      std::size_t seg = std::min(static_cast<std::size_t>(s), path.size() - 2);
      LogPoint P = lerp(path[seg], path[seg + 1], s - static_cast<double>(seg));
      std::vector<cplx> rp = roots_at(np, P), rm = roots_at(nm, minus_point(rules, P));
      if (rp.size() != rm.size()) {
        err = "root counts differ (" + std::to_string(rp.size()) + " vs " + std::to_string(rm.size()) + ")";
        break;
      }
      cplx fy = y_factor(rules, P);
      std::vector<cplx> mapped;
      for (auto y : rm) mapped.push_back(y / fy);
      try {
        Permutation perm = match_roots(rp, mapped, 1e-6);
        for (std::size_t i = 0; i < rp.size(); ++i) worst = std::max(worst, rel(rp[i], mapped[perm[i]]));
      } catch (const TrackFailure& e) {
        err = e.what();
        break;
      }
    }
    out.chart.worst = worst;
    out.chart.ok = err.empty() && worst <= cfg.tol_chart;
    out.chart.detail = err.empty() ? "root sets of H+ and H- agree under the y rule, worst relative gap " + fmt(worst)
                                   : err;
  }

  // (b) branch matching: seeds near P+ from series, tracked to P-.
  std::vector<cplx> seeds;
  {
    auto kp = newton_roots(Hp, cfg.order, cplx(0));
    for (auto y : eval_roots(kp, path.front())) seeds.push_back(y);
    if (wc.case3) {
      CurveEquation H2 = plus2->bind_framing(fp - wc.case3->b_prime);
      SubstitutionMap r2 = bind_rules(wc.case3->subst2, fp);
      auto extra = newton_roots_case3_extra(H2, *wc.case3, cfg.order, cplx(0));
      LogPoint P2 = path.front();
      for (const auto& [v, mono] : r2) {
        if (v == "y") continue;
        P2[v] = std::log(monomial_value(mono, path.front()));
      }
      cplx pre = monomial_value(extra.prefactor, path.front());
      Monomial y2 = r2.at("y");
      y2.set_exp("y", Affine(0));
      cplx f2 = monomial_value(y2, path.front());  // y_2 = y_plus * f2
      if (std::abs(pre * f2 - 1.0) > 1e-12) throw CheckFailure("second-chart prefactor disagrees with the y rule");
      for (auto y : eval_roots(extra.roots, P2)) seeds.push_back(pre * y);
    }
  }
  // Seeds must already be roots to series accuracy; polish them.
  double seed_err = 0;
  for (auto& y : seeds) {
    cplx y0 = y;
    for (int i = 0; i < 5; ++i) y -= np.H(y, path.front()) / np.H_y(y, path.front());
    seed_err = std::max(seed_err, rel(y, y0));
  }
  out.plus_start = seeds;
  std::vector<double> ts;
  for (int i = 1; i <= cfg.midpoints; ++i) ts.push_back(static_cast<double>(i) / (cfg.midpoints + 1));
  ts.push_back(1.0);
  auto samples = track_samples(np, path, seeds, ts, topt);
  out.plus_end = samples.back();
  LogPoint Pm = minus_point(rules, path.back());
  auto km = newton_roots(Hm, cfg.order, cplx(0));
  cplx fy_end = y_factor(rules, path.back());
  for (auto y : eval_roots(km, Pm)) out.minus_series.push_back(y / fy_end);
  {
    std::ostringstream os;
    try {
      if (out.minus_series.size() != seeds.size())
        throw TrackFailure("branch counts differ: " + std::to_string(seeds.size()) + " plus vs " +
                           std::to_string(out.minus_series.size()) + " minus");
      out.realized = match_roots(out.plus_end, out.minus_series, cfg.tol_match);
      double worst = 0;
      for (std::size_t j = 0; j < seeds.size(); ++j)
        worst = std::max(worst, rel(out.plus_end[j], out.minus_series[out.realized[j]]));
      out.matching.worst = worst;
      out.matching.ok = worst <= cfg.tol_match && seed_err <= cfg.tol_match;
      os << "tracked branches land on the minus series roots, worst relative gap " << fmt(worst)
         << ", seed refinement " << fmt(seed_err) << ", permutation " << to_string(out.realized);
    } catch (const TrackFailure& e) {
      out.matching.ok = false;
      os << e.what();
    }
    out.matching.detail = os.str();
  }

  // (c) x d/dx log y agrees between charts at the midpoints
  {
    double worst = 0;
    for (int i = 0; i < cfg.midpoints; ++i) {
      double s = ts[i] * static_cast<double>(path.size() - 1);
      std::size_t seg = std::min(static_cast<std::size_t>(s), path.size() - 2);
      LogPoint P = lerp(path[seg], path[seg + 1], s - static_cast<double>(seg));
      LogPoint M = minus_point(rules, P);
      cplx fy = y_factor(rules, P);
      for (auto y : samples[i]) {
        cplx dp = np.x_log_derivative(y, P), dm = nm.x_log_derivative(y * fy, M);
        worst = std::max(worst, rel(dp, dm));
      }
    }
    out.derivative.worst = worst;
    out.derivative.ok = worst <= cfg.tol_derivative;
    out.derivative.detail = "x d/dx log y across charts at " + std::to_string(cfg.midpoints) +
                            " midpoints, worst relative gap " + fmt(worst);
  }

  // (d) a monodromy loop undoing the realized permutation exists
  if (out.matching.ok && Hm.frame.l == 1) {
    out.monodromy.ok = true;
    out.monodromy.detail = "single branch, nothing to undo";
  } else if (out.matching.ok) {
    try {
      out.mono = monodromy_check(restricted_curve(Hm), cfg.seed, inverse(out.realized), topt);
      out.monodromy.ok = out.mono->target_realized;
      out.monodromy.detail = "inverse permutation " + to_string(inverse(out.realized)) +
                             (out.monodromy.ok ? " is generated by " : " is not generated by ") +
                             std::to_string(out.mono->generators.size()) + " loops (group order " +
                             std::to_string(out.mono->group_order) + ")";
    } catch (const std::exception& e) {
      out.monodromy.detail = e.what();
    }
  } else {
    out.monodromy.detail = "skipped: branch matching failed";
  }

  // The assembled relation, block matrices on the plus side.
  {
    long ell = Hm.frame.l;
    unsigned n = series_conductor({ell});
    std::ostringstream os;
    if (wc.case3) {
      UMatrix u1 = u_matrix(wc.case3->l1, n), u2 = u_matrix(wc.case3->l2, n), ul = u_matrix(ell, n);
      os << "diag(U_" << wc.case3->l1 << ", U_" << wc.case3->l2 << ")^-1 W+ = U_" << ell << "^-1 W-; U_"
         << wc.case3->l1 << " = " << matrix_str(u1) << ", U_" << wc.case3->l2 << " = " << matrix_str(u2) << ", U_"
         << ell << " = " << matrix_str(ul) << ", U_" << ell << "^-1 = " << matrix_str(ul.inverse());
    } else {
      UMatrix ul = u_matrix(ell, n);
      os << "U_" << ell << "^-1 W+ = U_" << ell << "^-1 W-; U_" << ell << " = " << matrix_str(ul);
    }
    out.u_relation = os.str();
  }
  return out;
}

}  // namespace octc
