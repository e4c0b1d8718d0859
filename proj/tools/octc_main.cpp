#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "octc/io/corpus.hpp"
#include "octc/io/report.hpp"
#include "octc/series/newton.hpp"

using namespace octc;

namespace {

enum Exit { kPass = 0, kUsage = 1, kCheck = 2, kTrack = 3 };

struct Common {
  std::string out;
  bool timing = false;
};

int emit(Json& report, const Common& c, int code, double seconds) {
  report["status"] = code == kPass ? "pass" : "fail";
  report["exit_code"] = code;
  if (c.timing) report["timing_s"] = seconds;
  std::string text = report.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) {
      std::cerr << "cannot write " << c.out << "\n";
      return kUsage;
    }
    f << text;
    for (const auto& chk : report["checks"])
      std::cout << chk["status"].get<std::string>() << "  " << chk["name"].get<std::string>() << ": "
                << chk["detail"].get<std::string>() << "\n";
  }
  return code;
}

std::optional<Cone3> parse_flag(const std::string& s, const ExtendedStackyFan& fan) {
  if (s.empty()) return std::nullopt;
  if (s.find(',') == std::string::npos) {
    int idx = std::stoi(s);
    if (idx < 1 || idx > static_cast<int>(fan.cones().size()))
      throw PreconditionError("--flag: cone index " + s + " out of range");
    return fan.cones()[idx - 1];
  }
  Cone3 c{};
  std::stringstream ss(s);
  std::string tok;
  int n = 0;
  while (std::getline(ss, tok, ',')) {
    if (n >= 3) throw PreconditionError("--flag: expected three indices");
    c[n++] = std::stoi(tok);
  }
  if (n != 3) throw PreconditionError("--flag: expected three indices");
  return sorted_cone(c);
}

// "r@phi,r@phi,..." polar vertices for q_plus_1
std::vector<cplx> parse_path(const std::string& s) {
  std::vector<cplx> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto at = tok.find('@');
    if (at == std::string::npos) throw PreconditionError("--path: expected r@phi, got '" + tok + "'");
    out.push_back(std::polar(std::stod(tok.substr(0, at)), std::stod(tok.substr(at + 1))));
  }
  if (out.size() < 2) throw PreconditionError("--path needs at least two vertices");
  return out;
}

std::vector<std::string> argv_vec(int argc, char** argv) {
  std::vector<std::string> a;
  for (int i = 1; i < argc; ++i) a.emplace_back(argv[i]);
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mirror curves, disk potentials and open crepant transformation checks for toric CY3 orbifolds"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--out", common.out, "Write the JSON report here (summary on stdout)");
    s->add_flag("--timing", common.timing, "Record wall time in the report");
  };

  std::string file, file2, flag, backend = "exact", path, target;
  int brane = 1, order = -1;
  std::optional<long> framing;
  bool symbolic = false, verify_exact = false, verify_numeric = false;
  std::uint64_t seed = 1;
  double tol_match = 1e-8, tol_residual = 1e-10;

  auto* v = app.add_subcommand("validate", "Check a fan description");
  v->add_option("fan", file, "Fan file or built-in name")->required();
  add_common(v);

  auto* c = app.add_subcommand("curve", "Mirror curve for a brane");
  c->add_option("fan", file, "Fan file or built-in name")->required();
  c->add_option("--brane", brane, "Brane number in the file (1-based)");
  c->add_option("--framing", framing, "Integer framing (default: the file's)");
  c->add_flag("--symbolic-framing", symbolic, "Keep the framing f symbolic");
  c->add_option("--flag", flag, "Primary cone: index into cones or a,b,c");
  add_common(c);

  auto* d = app.add_subcommand("disk", "Disk potentials W_1..W_l");
  d->add_option("fan", file, "Fan file or built-in name")->required();
  d->add_option("--brane", brane, "Brane number in the file (1-based)");
  d->add_option("--framing", framing, "Integer framing (default: the file's)");
  d->add_option("--order", order, "Total-degree truncation (default 6)");
  d->add_option("--backend", backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  d->add_option("--flag", flag, "Primary cone: index into cones or a,b,c");
  add_common(d);

  auto* w = app.add_subcommand("wallcross", "Identify curves and disk potentials across a wall");
  w->add_option("plus", file, "Plus-side fan")->required();
  w->add_option("minus", file2, "Minus-side fan (carries the brane)")->required();
  w->add_option("--brane", brane, "Brane number in the minus file (1-based)");
  w->add_option("--framing", framing, "Integer framing f+ for numeric checks (default 0)");
  w->add_flag("--verify-exact", verify_exact, "Exact term-by-term identification (default)");
  w->add_flag("--verify-numeric", verify_numeric, "Numeric continuation checks");
  w->add_option("--order", order, "Series order for numeric seeds (default 12)");
  w->add_option("--seed", seed, "Seed for generic parameter phases");
  w->add_option("--tol-match", tol_match, "Branch matching tolerance");
  w->add_option("--tol-residual", tol_residual, "Tracker residual tolerance");
  w->add_option("--path", path, "q+1 path vertices r@phi,r@phi,... (log-linear between)");
  add_common(w);

  auto* m = app.add_subcommand("monodromy", "Monodromy of the restricted equation x = 0");
  m->add_option("fan", file, "Fan file or built-in name")->required();
  m->add_option("--brane", brane, "Brane number in the file (1-based)");
  m->add_option("--seed", seed, "Seed for the base point");
  m->add_option("--target", target, "Permutation to realize, images 1-based: 2,1");
  add_common(m);

  std::vector<std::string> ex_args;
  auto* e = app.add_subcommand("examples", "List the built-in fans, or print one (examples an 3)");
  e->add_option("name", ex_args, "Fixture name, optionally followed by n for an");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int rc = app.exit(err);
    return rc == 0 ? 0 : kUsage;
  }

  auto t0 = std::chrono::steady_clock::now();
  auto secs = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  std::string verb = app.get_subcommands().front()->get_name();
  Json rep = report_header(verb, argv_vec(argc, argv));

  try {
    if (verb == "examples") {
      if (ex_args.empty()) {
        for (const auto& entry : corpus_listing()) std::cout << entry.name << "\t" << entry.summary << "\n";
        return kPass;
      }
      std::string name = ex_args[0];
      if (ex_args.size() == 2) name += ex_args[1];
      if (ex_args.size() > 2) throw PreconditionError("examples takes a name and an optional n");
      std::cout << builtin_text(name);
      return kPass;
    }

    if (verb == "validate") {
      FanSpec spec = resolve_fan(file);
      add_input(rep, "fan", spec);
      ValidationReport vr = validate_fan(spec.fan);
      rep["results"]["validation"] = validation_json(vr);
      std::string detail = "semi-projective, simplicial and regular";
      if (!vr.ok()) {
        detail.clear();
        for (const auto& x : vr.violations) detail += (detail.empty() ? "" : "; ") + x.kind + ": " + x.detail;
      }
      add_check(rep, "validate", vr.ok(), detail);
      return emit(rep, common, vr.ok() ? kPass : kCheck, secs());
    }

    if (verb == "curve" || verb == "disk") {
      FanSpec spec = resolve_fan(file);
      add_input(rep, "fan", spec);
      require_valid(spec.fan);
      long f = framing ? *framing : (spec.branes.empty() ? 0 : spec.branes.at(std::max(0, brane - 1)).framing);
      BraneJob job = prepare_brane(spec, brane, f, parse_flag(flag, spec.fan));
      rep["results"]["brane"] = {{"flag", to_string(job.brane.primary)},
                                 {"kind", job.brane.kind == BraneKind::inner ? "inner" : "outer"},
                                 {"l", job.brane.l}};
      if (verb == "curve") {
        auto H = build_curve(spec.fan, job.pb, job.brane, symbolic ? std::nullopt : std::optional<long>(f));
        rep["results"]["framing"] = symbolic ? Json("f") : Json(f);
        rep["results"]["curve"] = H.str();
        add_check(rep, "curve", true, H.str());
        return emit(rep, common, kPass, secs());
      }
      int N = order < 0 ? 6 : order;
      auto H = build_curve(spec.fan, job.pb, job.brane, f);
      rep["results"]["framing"] = f;
      rep["results"]["order"] = N;
      rep["results"]["curve"] = H.str();
      if (job.a0) rep["results"]["z"] = "z = " + qvar(*job.a0) + "*x^-1";
      if (backend == "exact") {
        CycloNumber proto(series_conductor({job.brane.l}));
        auto poly = curve_poly(H, N, proto, job.a0);
        auto roots = newton_roots(poly);
        bool restricted = check_restricted_invariants(poly, roots);
        auto dp = disk_potential(roots, job.brane.l);
        rep["results"]["disk"] = disk_json(dp);
        add_check(rep, "newton_residual", true, "H(kappa_j) = 0 through order " + std::to_string(N));
        add_check(rep, "restricted_roots", true,
                  restricted ? "product (-1)^l and elementary symmetric functions match"
                             : "not applicable: x = 0 keeps extra roots");
        add_check(rep, "rational_W", true, "all coefficients rational");
      } else {
        auto roots = newton_roots(H, N, cplx(0), job.a0);
        auto dp = disk_potential(roots, job.brane.l);
        rep["results"]["disk"] = disk_json(dp);
        add_check(rep, "newton_residual", true, "float residual below 1e-9 through order " + std::to_string(N));
      }
      return emit(rep, common, kPass, secs());
    }

    if (verb == "wallcross") {
      FanSpec plus = resolve_fan(file), minus = resolve_fan(file2);
      add_input(rep, "plus", plus);
      add_input(rep, "minus", minus);
      require_valid(plus.fan);
      require_valid(minus.fan);
      if (!verify_numeric) verify_exact = true;
      WallJob job = prepare_wall(plus, minus, brane);
      rep["results"]["wall"] = wall_json(job);
      int code = kPass;
      if (verify_exact) {
        add_check(rep, "exact_identification", job.ident.ok, job.ident.detail());
        if (!job.ident.ok) code = kCheck;
        FramingRelationCheck fr = framing_relation_check(job);
        if (fr.applicable) {
          std::string note = framing_relation_note(fr);
          Json extra = {{"certified", fr.certified}, {"alternative", fr.alternative},
                        {"alternative_passes", fr.alternative_passes}};
          if (!fr.alternative_mismatches.empty())
            extra["first_alternative_mismatch"] = {{"term", fr.alternative_mismatches[0].index},
                                                   {"expected", fr.alternative_mismatches[0].expected},
                                                   {"got", fr.alternative_mismatches[0].got}};
          add_check(rep, "framing_dependent_x_relation", fr.certified_passes && !fr.alternative_passes, note, extra);
          if (!(fr.certified_passes && !fr.alternative_passes)) code = kCheck;
        }
      }
      if (verify_numeric) {
        NumericConfig cfg;
        cfg.order = order < 0 ? 12 : order;
        cfg.seed = seed;
        cfg.tol_match = tol_match;
        cfg.tol_residual = tol_residual;
        cfg.framing = framing.value_or(0);
        cfg.q1_path = parse_path(path);
        OctcVerdict vd = verify_octc(job.wc, job.H_plus, job.H_minus, job.H_plus2, cfg);
        rep["results"]["numeric"] = verdict_json(vd, cfg);
        add_check(rep, "chart_consistency", vd.chart.ok, vd.chart.detail);
        add_check(rep, "branch_matching", vd.matching.ok, vd.matching.detail);
        add_check(rep, "derivative_identity", vd.derivative.ok, vd.derivative.detail);
        add_check(rep, "monodromy_certificate", vd.monodromy.ok, vd.monodromy.detail);
        if (!vd.ok() && code == kPass) code = kCheck;
      }
      return emit(rep, common, code, secs());
    }

    if (verb == "monodromy") {
      FanSpec spec = resolve_fan(file);
      add_input(rep, "fan", spec);
      require_valid(spec.fan);
      BraneJob job = prepare_brane(spec, brane, 0);
      auto H = build_curve(spec.fan, job.pb, job.brane, 0L);
      std::optional<Permutation> tgt;
      if (!target.empty()) {
        Permutation p;
        std::stringstream ss(target);
        std::string tok;
        while (std::getline(ss, tok, ',')) p.push_back(std::stoi(tok) - 1);
        tgt = p;
      }
      CurveEquation r = restricted_curve(H);
      MonodromyReport mr = monodromy_check(r, seed, tgt);
      rep["results"]["restricted_curve"] = r.str();
      rep["results"]["monodromy"] = monodromy_json(mr);
      add_check(rep, "transitive", mr.transitive,
                std::to_string(mr.generators.size()) + " loops generate a group of order " +
                    std::to_string(mr.group_order));
      bool ok = mr.transitive;
      if (tgt) {
        add_check(rep, "target", mr.target_realized, "target " + to_string(*tgt));
        ok = ok && mr.target_realized;
      }
      return emit(rep, common, ok ? kPass : kCheck, secs());
    }
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kUsage;
  } catch (const TrackFailure& err) {
    add_check(rep, "numeric", false, err.what());
    emit(rep, common, kTrack, secs());
    std::cerr << "tracking failure: " << err.what() << "\n";
    return kTrack;
  } catch (const PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    add_check(rep, "error", false, err.what());
    emit(rep, common, kCheck, secs());
    std::cerr << "error: " << err.what() << "\n";
    return kCheck;
  }
  return kUsage;
}
