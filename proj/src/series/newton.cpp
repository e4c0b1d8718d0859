#include "octc/series/newton.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace octc {

std::string Coeff<std::complex<double>>::str(const std::complex<double>& c) {
  std::ostringstream os;
  os.precision(17);
  os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  return os.str();
}

unsigned series_conductor(std::initializer_list<long> ells) {
  unsigned n = 2;
  for (long l : ells)
    if (l > 0) n = lcm_u(n, static_cast<unsigned>(2 * l));
  return n;
}

namespace {

long int_exp(const Affine& a, const std::string& v) {
  if (!a.is_constant()) throw PreconditionError("curve must have its framing bound");
  if (denominator(a.c0) != 1) throw PreconditionError("non-integer exponent of " + v);
  return static_cast<long>(numerator(a.c0));
}

}  // namespace

template <class C>
Series<C> CurvePoly<C>::eval(const Series<C>& y) const {
  Series<C> acc = coeffs.back().with_order(y.order());
  for (std::size_t j = coeffs.size() - 1; j-- > 0;) acc = acc * y + coeffs[j].with_order(y.order());
  return acc;
}

template <class C>
Series<C> CurvePoly<C>::derivative_eval(const Series<C>& y) const {
  Series<C> acc = y.like();
  for (std::size_t j = coeffs.size() - 1; j >= 1; --j) {
    Series<C> c = coeffs[j].with_order(y.order()) * Coeff<C>::from(y.proto(), BigRational(static_cast<long>(j)));
    acc = acc * y + c;
  }
  return acc;
}

template <class C>
CurvePoly<C> curve_poly(const CurveEquation& c, int order, const C& proto, std::optional<int> a0) {
  if (order < 0) throw PreconditionError("series order must be nonnegative");
  std::vector<std::string> vars;
  std::vector<int> xw;
  for (int a = 1; a <= c.k; ++a)
    if (!a0 || a != *a0) {
      vars.push_back(qvar(a));
      xw.push_back(0);
    }
  vars.push_back("x");
  xw.push_back(1);
  if (a0) {
    vars.push_back("z");
    xw.push_back(-1);
  }
  CurvePoly<C> p;
  p.ell = c.frame.l;
  p.open_vars.push_back(c.k - (a0 ? 1 : 0));
  if (a0) p.open_vars.push_back(p.open_vars[0] + 1);

  struct Raw {
    Exponent e;
    long ny;
    BigRational coeff;
  };
  std::vector<Raw> raw;
  long ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& t : c.terms) {
    Exponent e(vars.size(), 0);
    long ny = 0, mx = 0, qa0 = 0;
    for (const auto& [v, a] : t.exps()) {
      long n = int_exp(a, v);
      if (v == "y") {
        ny = n;
      } else if (v == "x") {
        mx = n;
      } else if (a0 && v == qvar(*a0)) {
        qa0 = n;
      } else {
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end()) throw PreconditionError("unexpected variable " + v + " in curve");
        if (n < 0) throw PreconditionError("negative exponent of " + v);
        e[it - vars.begin()] = static_cast<int>(n);
      }
    }
    // q_a0^e x^m = z^e x^(m+e)
    if (a0) {
      e[p.open_vars[1]] = static_cast<int>(qa0);
      mx += qa0;
    }
    if (mx < 0 || qa0 < 0) throw PreconditionError("curve term not a series in the brane chart: " + t.str());
    e[p.open_vars[0]] = static_cast<int>(mx);
    raw.push_back({e, ny, t.coeff()});
    ymin = first ? ny : std::min(ymin, ny);
    ymax = first ? ny : std::max(ymax, ny);
    first = false;
  }
  p.y_shift = -ymin;
  Series<C> zero(vars, xw, order, proto);
  p.coeffs.assign(static_cast<std::size_t>(ymax - ymin + 1), zero);
  for (const auto& r : raw) p.coeffs[r.ny - ymin].add_term(r.e, Coeff<C>::from(proto, r.coeff));
  return p;
}

template <>
CycloNumber lrl_root(const CycloNumber& proto, long ell, long j) {
  unsigned n = proto.conductor();
  if (n % (2 * ell)) throw PreconditionError("conductor does not contain the 2l-th roots of unity");
  return CycloNumber::root_of_unity(n, (2 * j - 1) * static_cast<long>(n / (2 * ell)));
}

template <>
std::complex<double> lrl_root(const std::complex<double>&, long ell, long j) {
  return std::polar(1.0, std::numbers::pi * static_cast<double>(2 * j - 1) / static_cast<double>(ell));
}

template <class C>
std::vector<Series<C>> newton_roots(const CurvePoly<C>& poly) {
  const Series<C>& zero = poly.coeffs.front();
  const int N = zero.order();
  // The LRL restriction must be y^shift (1 + y^l).
  for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
    C c0 = poly.coeffs[j].constant_term();
    long jj = static_cast<long>(j) - poly.y_shift;
    bool want = jj == 0 || jj == poly.ell;
    if (want ? c0 != Coeff<C>::from(zero.proto(), 1) : !Coeff<C>::is_zero(c0))
      throw CheckFailure("degenerate start: curve at the large radius limit is not 1 + y^" +
                         std::to_string(poly.ell));
  }
  std::vector<Series<C>> roots;
  for (long j = 1; j <= poly.ell; ++j) {
    Series<C> k = zero.constant(lrl_root(zero.proto(), poly.ell, j)).with_order(0);
    int good = 0;
    while (good < N) {
      good = std::min(N, 2 * good + 1);
      k = k.with_order(good);
      Series<C> h = poly.eval(k), hy = poly.derivative_eval(k);
      if (Coeff<C>::is_zero(hy.constant_term())) throw CheckFailure("degenerate start: H_y vanishes at the root");
      k = k - h * hy.inverse();
    }
    k = k.with_order(N);
    Series<C> res = poly.eval(k);
    if constexpr (std::is_same_v<C, CycloNumber>) {
      if (!res.is_zero()) throw CheckFailure("Newton residual nonzero through order " + std::to_string(N));
    } else {
      for (const auto& [e, c] : res.terms())
        if (std::abs(c) > 1e-9) throw CheckFailure("Newton residual too large through order " + std::to_string(N));
    }
    roots.push_back(std::move(k));
  }
  return roots;
}

template <class C>
bool check_restricted_invariants(const CurvePoly<C>& poly, const std::vector<Series<C>>& roots) {
  // restricted equation, shifted back so that it is sum_{n=0..l} c_n y^n
  const Series<C>& zero = poly.coeffs.front();
  std::vector<Series<C>> want;
  for (std::size_t j = 0; j < poly.coeffs.size(); ++j) {
    Series<C> c = poly.coeffs[j].restrict_zero(poly.open_vars);
    long n = static_cast<long>(j) - poly.y_shift;
    if (!c.is_zero() && (n < 0 || n > poly.ell)) return false;
    if (n >= 0 && n <= poly.ell) want.push_back(c);
  }
  if (static_cast<long>(want.size()) != poly.ell + 1) throw CheckFailure("restricted equation has wrong degree");
  // prod (y - kappa_i), coefficients lowest first
  std::vector<Series<C>> prod{zero.constant(BigRational(1))};
  for (const auto& k : roots) {
    Series<C> kr = k.restrict_zero(poly.open_vars);
    std::vector<Series<C>> next(prod.size() + 1, zero.like());
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = next[i + 1] + prod[i];
      next[i] = next[i] - prod[i] * kr;
    }
    prod = std::move(next);
  }
  for (long n = 0; n <= poly.ell; ++n) {
    if (!(prod[n] - want[n]).is_zero()) {
      Series<C> d = prod[n] - want[n];
      bool small = false;
      if constexpr (!std::is_same_v<C, CycloNumber>) {
        small = true;
        for (const auto& [e, c] : d.terms()) small = small && std::abs(c) < 1e-9;
      }
      if (!small)
        throw CheckFailure(n == 0 ? "product of restricted roots is not (-1)^l"
                                  : "elementary symmetric function e_" + std::to_string(poly.ell - n) +
                                        " does not match the restricted equation");
    }
  }
  return true;
}

template <class C>
ExtraBranches<C> newton_roots_case3_extra(const CurveEquation& plus2, const Case3Data& c3, int order,
                                          const C& proto) {
  if (c3.l2 <= 0) throw PreconditionError("Case III needs l2 >= 1");
  if (plus2.frame.l != c3.l2) throw PreconditionError("second-flag curve has l != l2");
  ExtraBranches<C> out;
  out.roots = newton_roots(plus2, order, proto);
  out.prefactor = Monomial::var(qvar(1), Affine(-c3.s14 / c3.l2));
  return out;
}

#define OCTC_INST(C)                                                                                       \
  template struct CurvePoly<C>;                                                                            \
  template CurvePoly<C> curve_poly<C>(const CurveEquation&, int, const C&, std::optional<int>);            \
  template std::vector<Series<C>> newton_roots<C>(const CurvePoly<C>&);                                    \
  template bool check_restricted_invariants<C>(const CurvePoly<C>&, const std::vector<Series<C>>&);        \
  template ExtraBranches<C> newton_roots_case3_extra<C>(const CurveEquation&, const Case3Data&, int, const C&);
OCTC_INST(CycloNumber)
OCTC_INST(std::complex<double>)
#undef OCTC_INST

}  // namespace octc
