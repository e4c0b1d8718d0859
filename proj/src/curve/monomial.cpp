#include "octc/curve/monomial.hpp"

#include <cctype>
#include <tuple>

namespace octc {

namespace {

std::tuple<int, long, std::string> var_key(const std::string& v) {
  if (v.size() > 1 && v[0] == 'q') {
    bool digits = true;
    for (std::size_t i = 1; i < v.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(v[i]));
    if (digits) return {0, std::stol(v.substr(1)), ""};
  }
  if (v == "x") return {1, 0, ""};
  if (v == "y") return {2, 0, ""};
  if (v == "z") return {3, 0, ""};
  return {4, 0, v};
}

std::string frac_f(const BigRational& c) {
  BigInt p = num(c), q = den(c);
  std::string head = p == 1 ? "f" : p == -1 ? "-f" : to_string(p) + "*f";
  return q == 1 ? head : head + "/" + to_string(q);
}

BigRational int_pow(const BigRational& b, long e) {
  BigRational out = 1;
  BigRational base = e < 0 ? BigRational(1) / b : b;
  for (long i = 0; i < std::labs(e); ++i) out *= base;
  return out;
}

}  // namespace

std::string to_string(const Affine& a) {
  if (a.cf == 0) return to_string(a.c0);
  std::string s = frac_f(a.cf);
  if (a.c0 > 0) s += "+" + to_string(a.c0);
  if (a.c0 < 0) s += to_string(a.c0);
  return s;
}

bool VarLess::operator()(const std::string& a, const std::string& b) const { return var_key(a) < var_key(b); }

std::string qvar(int a) { return "q" + std::to_string(a); }

Monomial Monomial::var(const std::string& v, const Affine& e) {
  Monomial m;
  m.set_exp(v, e);
  return m;
}

Affine Monomial::exp(const std::string& v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? Affine() : it->second;
}

void Monomial::set_exp(const std::string& v, const Affine& e) {
  if (e.is_zero()) exps_.erase(v);
  else exps_[v] = e;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  m.coeff_ *= o.coeff_;
  for (const auto& [v, e] : o.exps_) m.set_exp(v, m.exp(v) + e);
  return m;
}

Monomial Monomial::pow(const Affine& e) const {
  Monomial m;
  if (e.is_constant()) {
    if (is_integer(e.c0)) {
      if (coeff_ == 0 && e.c0 < 0) throw DivisionByZero();
      m.coeff_ = int_pow(coeff_, to_long(num(e.c0)));
    } else if (coeff_ != 1) {
      throw PreconditionError("fractional power of a monomial with coefficient " + to_string(coeff_));
    }
    for (const auto& [v, x] : exps_) m.set_exp(v, x * e.c0);
    return m;
  }
  if (coeff_ != 1) throw PreconditionError("framing-dependent power of a monomial with coefficient " + to_string(coeff_));
  for (const auto& [v, x] : exps_) {
    if (!x.is_constant()) throw PreconditionError("exponent would be quadratic in the framing");
    m.set_exp(v, e * x.c0);
  }
  return m;
}

Monomial Monomial::substitute(const SubstitutionMap& rules) const {
  Monomial out(coeff_);
  for (const auto& [v, e] : exps_) {
    auto it = rules.find(v);
    out *= it == rules.end() ? Monomial::var(v, e) : it->second.pow(e);
  }
  return out;
}

Monomial Monomial::shift_framing(const BigRational& shift) const {
  Monomial m(coeff_);
  for (const auto& [v, e] : exps_) m.set_exp(v, e.shifted(shift));
  return m;
}

Monomial Monomial::bind_framing(const BigRational& f) const {
  Monomial m(coeff_);
  for (const auto& [v, e] : exps_) m.set_exp(v, Affine(e.at(f)));
  return m;
}

bool Monomial::has_framing() const {
  for (const auto& [v, e] : exps_)
    if (!e.is_constant()) return true;
  return false;
}

std::string Monomial::str() const {
  std::string s;
  if (exps_.empty()) return to_string(coeff_);
  if (coeff_ == -1) s = "-";
  else if (coeff_ != 1) s = to_string(coeff_) + "*";
  bool first = true;
  for (const auto& [v, e] : exps_) {
    if (!first) s += "*";
    first = false;
    s += v;
    if (e == Affine(1)) continue;
    std::string t = to_string(e);
    bool bare = (e.is_constant() && is_integer(e.c0)) || (e.c0 == 0 && (e.cf == 1 || e.cf == -1));
    s += bare ? "^" + t : "^(" + t + ")";
  }
  return s;
}

std::string to_string(const SubstitutionMap& rules) {
  std::string s;
  for (const auto& [v, m] : rules) {
    if (!s.empty()) s += ", ";
    s += v + " -> " + m.str();
  }
  return s;
}

}  // namespace octc
