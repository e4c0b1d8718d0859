#include "octc/io/report.hpp"

#include <cstdint>
#include <cstdio>

#include "octc/series/newton.hpp"

namespace octc {

BraneJob prepare_brane(const FanSpec& spec, int brane_index, long framing, std::optional<Cone3> cone) {
  if (spec.branes.empty()) throw PreconditionError("fan '" + spec.fan.name() + "' declares no brane");
  if (brane_index < 1 || brane_index > static_cast<int>(spec.branes.size()))
    throw PreconditionError("brane index " + std::to_string(brane_index) + " out of range");
  const BraneSpec& bs = spec.branes[brane_index - 1];
  BraneJob job{spec, gkz_data(spec.fan, spec.charges), {}, {}, std::nullopt};
  job.pb = select_pbasis(spec.fan, job.gkz, spec.pbasis);
  job.brane = make_brane(spec.fan, bs.edge, framing, cone ? cone : bs.cone);
  if (job.brane.kind == BraneKind::inner) job.a0 = select_a0(spec.fan, job.gkz, job.pb, job.brane, false);
  return job;
}

WallJob prepare_wall(const FanSpec& plus, const FanSpec& minus, int brane_index) {
  WallJob j;
  j.plus = plus;
  j.minus = minus;
  j.gkz_plus = gkz_data(plus.fan, plus.charges);
  j.gkz_minus = gkz_data(minus.fan, minus.charges);
  j.wall = classify_wall_crossing(plus.fan, minus.fan);
  j.pbases = select_wall_pbases(plus.fan, j.gkz_plus, minus.fan, j.gkz_minus, j.wall);
  if (minus.branes.empty()) throw PreconditionError("minus fan declares no brane");
  if (brane_index < 1 || brane_index > static_cast<int>(minus.branes.size()))
    throw PreconditionError("brane index " + std::to_string(brane_index) + " out of range");
  const BraneSpec& bs = minus.branes[brane_index - 1];
  Brane bm = make_brane(minus.fan, bs.edge, 0, bs.cone);
  j.wc = parameter_relations(plus.fan, j.gkz_plus, j.pbases.plus, minus.fan, j.gkz_minus, j.pbases.minus, j.wall, bm);
  j.H_minus = build_curve(minus.fan, j.pbases.minus, bm);
  j.H_plus = build_curve(plus.fan, j.pbases.plus, j.wc.branes_plus.at(0));
  if (j.wc.case3) j.H_plus2 = build_curve(plus.fan, j.pbases.plus, j.wc.branes_plus.at(1));
  j.ident = verify_wall_identification(j.H_plus, j.H_minus, j.wc, j.H_plus2);
  return j;
}

FramingRelationCheck framing_relation_check(const WallJob& job) {
  FramingRelationCheck r;
  auto it = job.wc.subst.find("x");
  if (it == job.wc.subst.end()) return r;
  const Monomial& rule = it->second;
  Affine e = rule.exp(qvar(1));
  r.certified = "x- = " + rule.str();
  r.certified_passes = job.ident.ok;
  if (e.cf == 0) return r;
  r.applicable = true;
  Monomial alt = rule;
  alt.set_exp(qvar(1), Affine(e.c0, e.cf * 2));
  r.alternative = "x- = " + alt.str();
  IdentificationReport rep = check_with_x_rule(job.H_plus, job.H_minus, job.wc, alt);
  r.alternative_passes = rep.ok;
  r.alternative_mismatches = rep.mismatches;
  return r;
}

std::string framing_relation_note(const FramingRelationCheck& fr) {
  return "the general wall relation gives " + fr.certified + " and exact term matching certifies it" +
         (fr.certified_passes ? "" : " (FAILED)") + "; the alternative " + fr.alternative +
         (fr.alternative_passes ? " also passes" : " fails");
}

std::string input_digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json report_header(const std::string& command, const std::vector<std::string>& args) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  r["args"] = args;
  r["inputs"] = Json::array();
  r["checks"] = Json::array();
  r["results"] = Json::object();
  return r;
}

void add_input(Json& report, const std::string& role, const FanSpec& spec) {
  report["inputs"].push_back({{"role", role}, {"name", spec.fan.name()}, {"digest", input_digest(render_fan_spec(spec))}});
}

void add_check(Json& report, const std::string& name, bool ok, const std::string& detail, Json extra) {
  Json c = {{"name", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}};
  for (auto& [k, v] : extra.items()) c[k] = v;
  report["checks"].push_back(c);
}

namespace {

template <class C>
Json series_json_impl(const Series<C>& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back({s.monomial_str(e), Coeff<C>::str(c)});
  return {{"vars", s.vars()}, {"order", s.order()}, {"terms", terms}};
}

Json mismatches_json(const std::vector<TermMismatch>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back({{"term", m.index}, {"expected", m.expected}, {"got", m.got}});
  return a;
}

std::string cplx_str(cplx z) { return Coeff<cplx>::str(z); }

}  // namespace

Json series_json(const ExactSeries& s) { return series_json_impl(s); }
Json series_json(const FloatSeries& s) { return series_json_impl(s); }

Json disk_json(const DiskPotential<CycloNumber>& d) {
  Json w = Json::array();
  for (std::size_t j = 0; j < d.W.size(); ++j) w.push_back({{"j", j + 1}, {"series", series_json(d.W[j])}});
  return {{"l", d.ell}, {"backend", to_string(d.backend)}, {"W", w}};
}

Json disk_json(const DiskPotential<cplx>& d) {
  Json w = Json::array();
  for (std::size_t j = 0; j < d.W.size(); ++j) w.push_back({{"j", j + 1}, {"series", series_json(d.W[j])}});
  return {{"l", d.ell}, {"backend", to_string(d.backend)}, {"W", w}};
}

Json wall_json(const WallJob& job) {
  const WallCrossing& wc = job.wc;
  Json j;
  j["kind"] = to_string(job.wall.kind);
  j["case"] = to_string(wc.kase);
  Json pp = Json::array(), pm = Json::array();
  for (const auto& p : job.pbases.plus.p) pp.push_back(to_string(p));
  for (const auto& p : job.pbases.minus.p) pm.push_back(to_string(p));
  j["pbasis_plus"] = pp;
  j["pbasis_minus"] = pm;
  j["c"] = to_string(wc.c);
  j["relations"] = to_string(wc.subst);
  j["framing"] = "f- = f+" + (wc.framing_shift == 0 ? std::string()
                                                     : (wc.framing_shift > 0 ? " - " : " + ") +
                                                           std::to_string(std::labs(wc.framing_shift)));
  j["H_plus"] = job.H_plus.str();
  j["H_minus"] = job.H_minus.str();
  if (wc.case3) {
    j["H_plus2"] = job.H_plus2->str();
    j["case3"] = {{"l1", wc.case3->l1},
                  {"l2", wc.case3->l2},
                  {"s14", to_string(wc.case3->s14)},
                  {"b_prime", wc.case3->b_prime},
                  {"second_chart", to_string(wc.case3->subst2)}};
  }
  if (wc.a0) j["a0"] = *wc.a0;
  j["identification"] = {{"ok", job.ident.ok}, {"mismatches", mismatches_json(job.ident.mismatches)}};
  if (job.ident.second_ok)
    j["identification"]["second_brane_ok"] = *job.ident.second_ok;
  return j;
}

Json verdict_json(const OctcVerdict& v, const NumericConfig& cfg) {
  auto sub = [](const SubCheck& s, double tol) {
    return Json{{"status", s.ok ? "pass" : "fail"}, {"detail", s.detail}, {"worst", s.worst}, {"tolerance", tol}};
  };
  Json j;
  j["config"] = {{"order", cfg.order},         {"magnitude", cfg.magnitude}, {"seed", cfg.seed},
                 {"framing", cfg.framing},     {"tol_chart", cfg.tol_chart}, {"tol_match", cfg.tol_match},
                 {"tol_derivative", cfg.tol_derivative}, {"tol_residual", cfg.tol_residual}};
  j["chart_consistency"] = sub(v.chart, cfg.tol_chart);
  j["branch_matching"] = sub(v.matching, cfg.tol_match);
  j["derivative_identity"] = sub(v.derivative, cfg.tol_derivative);
  j["monodromy"] = {{"status", v.monodromy.ok ? "pass" : "fail"}, {"detail", v.monodromy.detail}};
  j["realized_permutation"] = to_string(v.realized);
  Json ends = Json::array();
  for (std::size_t i = 0; i < v.plus_end.size(); ++i) {
    Json e = {{"branch", i + 1}, {"start", cplx_str(v.plus_start.at(i))}, {"end", cplx_str(v.plus_end[i])}};
    if (i < v.realized.size()) e["minus_branch"] = v.realized[i] + 1;
    ends.push_back(e);
  }
  j["branches"] = ends;
  j["u_relation"] = v.u_relation;
  return j;
}

Json monodromy_json(const MonodromyReport& m) {
  Json gens = Json::array();
  for (std::size_t i = 0; i < m.generators.size(); ++i)
    gens.push_back({{"loop", m.loop_labels[i]}, {"permutation", to_string(m.generators[i])}});
  Json base = Json::array();
  for (std::size_t i = 0; i < m.vars.size(); ++i) base.push_back({{"var", m.vars[i]}, {"value", cplx_str(m.base[i])}});
  Json j = {{"l", m.ell}, {"base", base}, {"generators", gens}, {"group_order", m.group_order},
            {"transitive", m.transitive}};
  if (m.target) {
    j["target"] = to_string(*m.target);
    j["target_realized"] = m.target_realized;
    j["target_word"] = m.target_word;
  }
  return j;
}

Json validation_json(const ValidationReport& v) {
  Json viol = Json::array();
  for (const auto& x : v.violations) viol.push_back({{"kind", x.kind}, {"detail", x.detail}});
  Json h = Json::array();
  for (const auto& x : v.heights) h.push_back(to_string(x));
  return {{"ok", v.ok()}, {"structural_ok", v.structural_ok}, {"violations", viol}, {"heights", h},
          {"slack", to_string(v.slack)}};
}

}  // namespace octc
