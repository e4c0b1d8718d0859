#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "octc/exact/cyclotomic.hpp"

namespace octc {

// Coefficient-type adapter; `proto` carries the field (conductor) for exact values.
template <class C>
struct Coeff;

template <>
struct Coeff<CycloNumber> {
  static CycloNumber zero(const CycloNumber& p) { return CycloNumber(p.conductor()); }
  static CycloNumber from(const CycloNumber& p, const BigRational& r) { return CycloNumber(p.conductor(), r); }
  static bool is_zero(const CycloNumber& c) { return c.is_zero(); }
  static std::complex<double> embed(const CycloNumber& c) { return c.embed(); }
  static std::string str(const CycloNumber& c) { return c.str(); }
};

template <>
struct Coeff<std::complex<double>> {
  using T = std::complex<double>;
  static T zero(const T&) { return T(0.0); }
  static T from(const T&, const BigRational& r) { return T(to_double(r)); }
  static bool is_zero(const T& c) { return c == T(0.0); }
  static T embed(const T& c) { return c; }
  static std::string str(const T& c);
};

using Exponent = std::vector<int>;

// Truncated power series in `vars`, total degree <= order. `xweight` gives
// each variable's x-degree (x counts +1, z counts -1).
template <class C>
class Series {
 public:
  Series() = default;
  Series(std::vector<std::string> vars, std::vector<int> xweight, int order, C proto)
      : vars_(std::move(vars)), xw_(std::move(xweight)), order_(order), proto_(std::move(proto)) {}

  Series like() const { return Series(vars_, xw_, order_, proto_); }
  Series constant(const C& c) const {
    Series s = like();
    s.add_term(Exponent(vars_.size(), 0), c);
    return s;
  }
  Series constant(const BigRational& r) const { return constant(Coeff<C>::from(proto_, r)); }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& xweight() const { return xw_; }
  int order() const { return order_; }
  const C& proto() const { return proto_; }
  const std::map<Exponent, C>& terms() const { return t_; }
  std::size_t nvars() const { return vars_.size(); }

  static int degree(const Exponent& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
  }
  int xdegree(const Exponent& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += xw_[i] * e[i];
    return d;
  }

  void add_term(const Exponent& e, const C& c) {
    if (degree(e) > order_ || Coeff<C>::is_zero(c)) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (Coeff<C>::is_zero(it->second)) t_.erase(it);
    }
  }
  C coeff(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Coeff<C>::zero(proto_) : it->second;
  }
  C constant_term() const { return coeff(Exponent(vars_.size(), 0)); }
  bool is_zero() const { return t_.empty(); }
  int valuation() const {
    int v = order_ + 1;
    for (const auto& [e, c] : t_) v = std::min(v, degree(e));
    return v;
  }

  Series truncated(int n) const {
    Series s(vars_, xw_, std::min(n, order_), proto_);
    for (const auto& [e, c] : t_)
      if (degree(e) <= s.order_) s.t_.emplace(e, c);
    return s;
  }
  Series with_order(int n) const {
    Series s(vars_, xw_, n, proto_);
    for (const auto& [e, c] : t_)
      if (degree(e) <= n) s.t_.emplace(e, c);
    return s;
  }

  Series operator+(const Series& o) const {
    Series s = *this;
    for (const auto& [e, c] : o.t_) s.add_term(e, c);
    return s;
  }
  Series operator-() const {
    Series s = like();
    for (const auto& [e, c] : t_) s.t_.emplace(e, Coeff<C>::zero(proto_) - c);
    return s;
  }
  Series operator-(const Series& o) const { return *this + (-o); }
  Series operator*(const C& k) const {
    Series s = like();
    for (const auto& [e, c] : t_) s.add_term(e, c * k);
    return s;
  }
  Series operator*(const Series& o) const {
    Series s = like();
    s.order_ = std::min(order_, o.order_);
    for (const auto& [e1, c1] : t_) {
      int d1 = degree(e1);
      for (const auto& [e2, c2] : o.t_) {
        if (d1 + degree(e2) > s.order_) continue;
        Exponent e(e1.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
        s.add_term(e, c1 * c2);
      }
    }
    return s;
  }
  bool operator==(const Series& o) const { return vars_ == o.vars_ && t_ == o.t_; }

  // Multiplicative inverse of a unit (nonzero constant term).
  Series inverse() const {
    C c0 = constant_term();
    if (Coeff<C>::is_zero(c0)) throw CheckFailure("series inverse: constant term vanishes");
    C inv0 = Coeff<C>::from(proto_, 1) / c0;
    Series t = (*this * inv0) - constant(BigRational(1));  // order >= 1
    Series acc = constant(BigRational(1)), p = constant(BigRational(1));
    for (int k = 1; k <= order_; ++k) {
      p = p * (-t);
      if (p.is_zero()) break;
      acc = acc + p;
    }
    return acc * inv0;
  }
  // log(1 + t) for a series with constant term 1.
  Series log1p_unit() const {
    if (constant_term() != Coeff<C>::from(proto_, 1)) throw CheckFailure("series log: constant term is not 1");
    Series t = *this - constant(BigRational(1));
    Series acc = like(), p = constant(BigRational(1));
    for (int k = 1; k <= order_; ++k) {
      p = p * t;
      if (p.is_zero()) break;
      acc = acc + p * Coeff<C>::from(proto_, BigRational(k % 2 ? 1 : -1, k));
    }
    return acc;
  }
  // Replace variable v by a series of positive valuation.
  Series compose(std::size_t v, const Series& s) const {
    if (s.valuation() < 1) throw CheckFailure("composition needs a series of positive order");
    Series out = like();
    for (const auto& [e, c] : t_) {
      Exponent base = e;
      base[v] = 0;
      Series term = like();
      term.add_term(base, c);
      for (int k = 0; k < e[v]; ++k) term = term * s;
      out = out + term;
    }
    return out;
  }

  Series x_log_derivative() const {
    Series s = like();
    for (const auto& [e, c] : t_) {
      int d = xdegree(e);
      if (d != 0) s.add_term(e, c * Coeff<C>::from(proto_, BigRational(d)));
    }
    return s;
  }
  Series x_log_antiderivative(int power) const {
    Series s = like();
    for (const auto& [e, c] : t_) {
      int d = xdegree(e);
      if (d == 0) throw CheckFailure("antiderivative of a term of x-degree 0");
      BigRational div = power == 1 ? BigRational(d) : BigRational(d) * d;
      s.add_term(e, c * Coeff<C>::from(proto_, BigRational(1) / div));
    }
    return s;
  }
  // Keep only terms whose exponent of each listed variable is zero.
  Series restrict_zero(const std::vector<std::size_t>& idx) const {
    Series s = like();
    for (const auto& [e, c] : t_) {
      bool keep = true;
      for (auto i : idx) keep = keep && e[i] == 0;
      if (keep) s.t_.emplace(e, c);
    }
    return s;
  }
  Series map_coeffs(const std::function<C(const C&)>& f) const {
    Series s = like();
    for (const auto& [e, c] : t_) s.add_term(e, f(c));
    return s;
  }

  std::complex<double> evaluate(const std::map<std::string, std::complex<double>>& at) const {
    std::vector<std::complex<double>> v;
    for (const auto& n : vars_) {
      auto it = at.find(n);
      if (it == at.end()) throw PreconditionError("no value for series variable " + n);
      v.push_back(it->second);
    }
    std::complex<double> sum = 0;
    for (const auto& [e, c] : t_) {
      std::complex<double> term = Coeff<C>::embed(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) term *= v[i];
      sum += term;
    }
    return sum;
  }

  std::string monomial_str(const Exponent& e) const {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += vars_[i];
      if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
  }
  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + Coeff<C>::str(c) + ")*" + monomial_str(e);
    }
    return s;
  }

 private:
  std::vector<std::string> vars_;
  std::vector<int> xw_;
  int order_ = 0;
  C proto_{};
  std::map<Exponent, C> t_;
};

using ExactSeries = Series<CycloNumber>;
using FloatSeries = Series<std::complex<double>>;

}  // namespace octc
