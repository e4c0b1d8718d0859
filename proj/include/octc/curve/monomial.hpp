#pragma once

#include <map>
#include <optional>
#include <string>

#include "octc/exact/number.hpp"

namespace octc {

// Exponent c0 + cf * f, f the framing.
struct Affine {
  BigRational c0 = 0;
  BigRational cf = 0;

  Affine() = default;
  Affine(const BigRational& c) : c0(c) {}
  Affine(long c) : c0(c) {}
  Affine(const BigRational& c, const BigRational& f) : c0(c), cf(f) {}
  static Affine framing(const BigRational& coeff = 1) { return Affine(0, coeff); }

  bool is_zero() const { return c0 == 0 && cf == 0; }
  bool is_constant() const { return cf == 0; }
  BigRational at(const BigRational& f) const { return c0 + cf * f; }
  // Replace f by f + shift.
  Affine shifted(const BigRational& shift) const { return Affine(c0 + cf * shift, cf); }

  Affine operator+(const Affine& o) const { return Affine(c0 + o.c0, cf + o.cf); }
  Affine operator-(const Affine& o) const { return Affine(c0 - o.c0, cf - o.cf); }
  Affine operator-() const { return Affine(-c0, -cf); }
  Affine operator*(const BigRational& r) const { return Affine(c0 * r, cf * r); }
  Affine& operator+=(const Affine& o) { return *this = *this + o; }
  bool operator==(const Affine& o) const { return c0 == o.c0 && cf == o.cf; }
  bool operator!=(const Affine& o) const { return !(*this == o); }
  bool operator<(const Affine& o) const { return c0 != o.c0 ? c0 < o.c0 : cf < o.cf; }
};

std::string to_string(const Affine& a);

// q1 < q2 < ... < x < y < z < anything else (by name).
struct VarLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

std::string qvar(int a);

class Monomial;
using SubstitutionMap = std::map<std::string, Monomial, VarLess>;

class Monomial {
 public:
  using Exps = std::map<std::string, Affine, VarLess>;

  Monomial() : coeff_(1) {}
  explicit Monomial(const BigRational& c) : coeff_(c) {}
  static Monomial var(const std::string& v, const Affine& e = Affine(1));

  const BigRational& coeff() const { return coeff_; }
  const Exps& exps() const { return exps_; }
  Affine exp(const std::string& v) const;
  void set_exp(const std::string& v, const Affine& e);
  void set_coeff(const BigRational& c) { coeff_ = c; }

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
  // Power by an exponent; symbolic powers need a constant base and unit
  // coefficient, fractional powers need unit coefficient.
  Monomial pow(const Affine& e) const;
  Monomial inverse() const { return pow(Affine(-1)); }
  // Simultaneous substitution of variables by monomials.
  Monomial substitute(const SubstitutionMap& rules) const;
  // Replace f by f + shift in every exponent.
  Monomial shift_framing(const BigRational& shift) const;
  Monomial bind_framing(const BigRational& f) const;
  bool has_framing() const;
  bool same_exponents(const Monomial& o) const { return exps_ == o.exps_; }

  bool operator==(const Monomial& o) const { return coeff_ == o.coeff_ && exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string str() const;

 private:
  BigRational coeff_;
  Exps exps_;
};

std::string to_string(const SubstitutionMap& rules);

}  // namespace octc
