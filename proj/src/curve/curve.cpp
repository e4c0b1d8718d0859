#include "octc/curve/curve.hpp"

#include "octc/exact/lattice.hpp"

namespace octc {

namespace {

Monomial s_mono(const IntMatrix& s, int i) {
  Monomial m;
  for (std::size_t a = 0; a < s.rows(); ++a)
    if (s(a, i - 1) != 0) m.set_exp(qvar(static_cast<int>(a) + 1), Affine(BigRational(s(a, i - 1))));
  return m;
}

CurveEquation make_curve(const ExtendedStackyFan& fan, const PBasis& pb, const Flag& flag, std::optional<long> framing) {
  CurveEquation c;
  c.frame = flag_frame(fan, flag);
  c.framing = framing;
  c.k = pb.k();
  const IntMatrix& s = pb.s_matrix(fan, flag.sigma);
  for (int i = 1; i <= fan.R(); ++i) {
    Monomial t = s_mono(s, i);
    long m = c.frame.m(i), n = c.frame.n(i);
    t.set_exp("x", Affine(m));
    t.set_exp("y", framing ? Affine(n - m * *framing) : Affine(BigRational(n), BigRational(-m)));
    c.terms.push_back(t);
  }
  const auto& fr = c.frame;
  Affine f = framing ? Affine(*framing) : Affine::framing();
  Monomial t1 = Monomial::var("x", Affine(fr.r)) * Monomial::var("y", f * BigRational(-fr.r) - Affine(fr.s));
  if (c.term(fr.i1) != t1 || c.term(fr.i2) != Monomial::var("y", Affine(fr.l)) || c.term(fr.i3) != Monomial())
    throw CheckFailure("normalized terms of the curve are not x^r y^(-rf-s), y^l, 1");
  return c;
}

}  // namespace

std::string CurveEquation::str() const {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string t = terms[i].str();
    if (i == 0) s = t;
    else if (!t.empty() && t[0] == '-') s += " - " + t.substr(1);
    else s += " + " + t;
  }
  return s;
}

CurveEquation CurveEquation::bind_framing(long f) const {
  if (framing) throw PreconditionError("curve framing already bound");
  CurveEquation c = *this;
  c.framing = f;
  for (auto& t : c.terms) t = t.bind_framing(f);
  return c;
}

std::pair<BigRational, BigRational> CurveEquation::y_range() const {
  if (!framing) throw PreconditionError("y degrees need a bound framing");
  BigRational hi = terms.at(0).exp("y").c0, lo = hi;
  for (const auto& t : terms) {
    BigRational e = t.exp("y").c0;
    if (e > hi) hi = e;
    if (e < lo) lo = e;
  }
  return {hi, lo};
}

CurveEquation build_curve(const ExtendedStackyFan& fan, const PBasis& pb, const Brane& brane, std::optional<long> framing) {
  return make_curve(fan, pb, brane.primary, framing);
}

CurveEquation build_flag_curve(const ExtendedStackyFan& fan, const PBasis& pb, const Flag& flag) {
  return make_curve(fan, pb, flag, 0L);
}

Reparametrization reparametrize_flag(const ExtendedStackyFan& fan, const PBasis& pb, const CurveEquation& curve,
                                     const Flag& new_flag) {
  if (curve.framing != 0L) throw PreconditionError("flag change acts on unframed curves");
  const FlagFrame& fo = curve.frame;
  FlagFrame fn = flag_frame(fan, new_flag);
  IntMatrix M = frame_change(fo, fn);
  const IntMatrix& sp = pb.s_matrix(fan, new_flag.sigma);
  BigRational w1(1, fo.r), w2(fo.s, fo.r * fo.l), w3 = -w1 - w2;
  Reparametrization out;
  out.rules["x"] = Monomial::var("x", Affine(BigRational(M(0, 0)))) * Monomial::var("y", Affine(BigRational(M(1, 0)))) *
                   s_mono(sp, fo.i1).pow(Affine(w1)) * s_mono(sp, fo.i2).pow(Affine(w2)) * s_mono(sp, fo.i3).pow(Affine(w3));
  out.rules["y"] = Monomial::var("x", Affine(BigRational(M(0, 1)))) * Monomial::var("y", Affine(BigRational(M(1, 1)))) *
                   (s_mono(sp, fo.i2) * s_mono(sp, fo.i3).inverse()).pow(Affine(BigRational(1, fo.l)));
  out.curve = build_flag_curve(fan, pb, new_flag);
  out.prefactor = (s_mono(sp, fo.i3) * Monomial::var("x", Affine(fn.m(fo.i3))) * Monomial::var("y", Affine(fn.n(fo.i3))))
                      .inverse();
  for (int i = 1; i <= curve.R(); ++i) {
    Monomial lhs = curve.term(i).substitute(out.rules);
    Monomial rhs = out.prefactor * out.curve.term(i);
    if (lhs != rhs)
      throw CheckFailure("flag change mismatch at term " + std::to_string(i) + ": " + lhs.str() + " vs " + rhs.str());
  }
  return out;
}

SubstitutionMap invert_xy_rules(const SubstitutionMap& rules) {
  const Monomial& X = rules.at("x");
  const Monomial& Y = rules.at("y");
  RatMatrix E(2, 2);
  E(0, 0) = X.exp("x").c0;
  E(0, 1) = X.exp("y").c0;
  E(1, 0) = Y.exp("x").c0;
  E(1, 1) = Y.exp("y").c0;
  auto inv = inverse(E);
  if (!inv) throw CheckFailure("flag change is not invertible");
  auto rest = [](Monomial m) {
    m.set_exp("x", Affine());
    m.set_exp("y", Affine());
    return m;
  };
  Monomial Qx = rest(X), Qy = rest(Y);
  SubstitutionMap out;
  const char* names[2] = {"x", "y"};
  for (int r = 0; r < 2; ++r) {
    const BigRational& e0 = (*inv)(r, 0);
    const BigRational& e1 = (*inv)(r, 1);
    out[names[r]] = Monomial::var("x", Affine(e0)) * Monomial::var("y", Affine(e1)) * Qx.pow(Affine(-e0)) * Qy.pow(Affine(-e1));
  }
  return out;
}

CurveEquation substitute(const CurveEquation& c, const SubstitutionMap& rules, const BigRational& framing_shift) {
  CurveEquation out = c;
  for (auto& t : out.terms) t = t.shift_framing(framing_shift).substitute(rules);
  return out;
}

std::string IdentificationReport::detail() const {
  std::string s = ok ? "term-by-term identification holds" : "identification fails";
  for (const auto& m : mismatches) s += "; term " + std::to_string(m.index) + ": " + m.expected + " vs " + m.got;
  if (second_ok) {
    s += *second_ok ? "; second-brane identity holds" : "; second-brane identity fails";
    for (const auto& m : second_mismatches) s += "; term " + std::to_string(m.index) + ": " + m.expected + " vs " + m.got;
  }
  return s;
}

namespace {

std::vector<TermMismatch> compare(const CurveEquation& expect, const CurveEquation& got, const Monomial& factor) {
  std::vector<TermMismatch> out;
  if (expect.R() != got.R()) {
    out.push_back({0, std::to_string(expect.R()) + " terms", std::to_string(got.R()) + " terms"});
    return out;
  }
  for (int i = 1; i <= expect.R(); ++i) {
    Monomial g = factor * got.term(i);
    if (g != expect.term(i)) out.push_back({i, expect.term(i).str(), g.str()});
  }
  return out;
}

}  // namespace

IdentificationReport verify_wall_identification(const CurveEquation& plus, const CurveEquation& minus,
                                                const WallCrossing& wc, const std::optional<CurveEquation>& plus2) {
  if (plus.framing || minus.framing) throw PreconditionError("wall identification needs symbolic framing");
  IdentificationReport rep;
  CurveEquation ms = substitute(minus, wc.subst, BigRational(-wc.framing_shift));
  rep.mismatches = compare(plus, ms, Monomial());
  rep.ok = rep.mismatches.empty();
  if (wc.case3 && plus2) {
    CurveEquation p2 = substitute(*plus2, wc.case3->subst2, BigRational(-wc.case3->b_prime));
    rep.second_mismatches = compare(plus, p2, Monomial::var("y", Affine(wc.case3->l1)));
    rep.second_ok = rep.second_mismatches.empty();
    rep.ok = rep.ok && *rep.second_ok;
  }
  return rep;
}

IdentificationReport check_with_x_rule(const CurveEquation& plus, const CurveEquation& minus, const WallCrossing& wc,
                                       const Monomial& x_rule) {
  WallCrossing alt = wc;
  alt.subst["x"] = x_rule;
  alt.case3.reset();
  return verify_wall_identification(plus, minus, alt);
}

void check_inner_divisibility(const CurveEquation& c, const IntVec& qa) {
  for (int i = 1; i <= c.R(); ++i) {
    long m = c.frame.m(i);
    if (m >= 0) continue;
    for (std::size_t a = 0; a < qa.size(); ++a) {
      Affine e = c.term(i).exp(qvar(static_cast<int>(a) + 1));
      if (e.c0 < BigRational(qa[a] * (-m)))
        throw CheckFailure("term " + std::to_string(i) + " is not divisible by (q^alpha/x)^" + std::to_string(-m));
    }
  }
}

}  // namespace octc
