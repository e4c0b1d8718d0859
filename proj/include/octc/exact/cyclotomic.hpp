#pragma once

#include "octc/exact/number.hpp"

#include <complex>
#include <vector>

namespace octc {

// Element of Q(zeta_n), zeta_n = exp(2 pi i / n), stored as coefficients of
// 1, zeta, ..., zeta^(phi(n)-1) modulo the n-th cyclotomic polynomial.
class CycloNumber {
 public:
  explicit CycloNumber(unsigned conductor = 1);
  CycloNumber(unsigned conductor, const BigRational& r);

  static CycloNumber root_of_unity(unsigned conductor, long k);

  unsigned conductor() const { return n_; }
  const RatVec& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  const BigRational& rational_part() const { return c_[0]; }

  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator-() const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber operator*(const BigRational& r) const;
  CycloNumber operator/(const CycloNumber& o) const { return *this * o.inverse(); }
  CycloNumber& operator+=(const CycloNumber& o) { return *this = *this + o; }
  CycloNumber& operator-=(const CycloNumber& o) { return *this = *this - o; }
  CycloNumber& operator*=(const CycloNumber& o) { return *this = *this * o; }
  bool operator==(const CycloNumber& o) const { return n_ == o.n_ && c_ == o.c_; }
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }

  CycloNumber inverse() const;
  // Complex conjugation, zeta -> zeta^-1.
  CycloNumber conj() const;
  // Same element viewed in Q(zeta_m), n | m.
  CycloNumber lift(unsigned m) const;

  std::complex<double> embed() const;
  std::string str() const;

 private:
  unsigned n_;
  RatVec c_;
};

unsigned euler_phi(unsigned n);
// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);
unsigned lcm_u(unsigned a, unsigned b);

}  // namespace octc
