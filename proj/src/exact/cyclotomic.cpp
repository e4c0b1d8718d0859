#include "octc/exact/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "octc/exact/lattice.hpp"

namespace octc {

namespace {

struct FieldTables {
  unsigned phi;
  std::vector<long> poly;
  std::vector<RatVec> powers;  // zeta^k mod Phi_n for k in [0, 2 phi)
};

std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b) {
  // b monic; returns a / b
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long lead = a[i + b.size() - 1];
    q[i] = lead;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= lead * b[j];
  }
  return q;
}

std::vector<long> compute_cyclotomic(unsigned n) {
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  return p;
}

std::mutex g_mutex;
std::map<unsigned, std::vector<long>> g_polys;
std::map<unsigned, std::shared_ptr<const FieldTables>> g_tables;

std::shared_ptr<const FieldTables> tables(unsigned n) {
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_tables.find(n);
    if (it != g_tables.end()) return it->second;
  }
  auto t = std::make_shared<FieldTables>();
  t->poly = cyclotomic_polynomial(n);
  t->phi = static_cast<unsigned>(t->poly.size() - 1);
  RatVec cur(t->phi, BigRational(0));
  cur[0] = 1;
  for (unsigned k = 0; k < 2 * t->phi; ++k) {
    t->powers.push_back(cur);
    // multiply by zeta
    BigRational top = cur[t->phi - 1];
    for (unsigned i = t->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < t->phi; ++i) cur[i] -= top * t->poly[i];
  }
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_tables.emplace(n, std::move(t)).first->second;
}

}  // namespace

unsigned lcm_u(unsigned a, unsigned b) { return std::lcm(a, b); }

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw PreconditionError("conductor must be positive");
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_polys.find(n);
    if (it != g_polys.end()) return it->second;
  }
  std::vector<long> p = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_polys.emplace(n, std::move(p)).first->second;
}

CycloNumber::CycloNumber(unsigned conductor) : n_(conductor) {
  c_.assign(tables(n_)->phi, BigRational(0));
}

CycloNumber::CycloNumber(unsigned conductor, const BigRational& r) : CycloNumber(conductor) {
  c_[0] = r;
}

CycloNumber CycloNumber::root_of_unity(unsigned conductor, long k) {
  auto t = tables(conductor);
  long e = ((k % static_cast<long>(conductor)) + conductor) % conductor;
  CycloNumber out(conductor);
  // zeta^e with e < n; reduce by repeated use of the power table
  RatVec acc(t->phi, BigRational(0));
  acc[0] = 1;
  CycloNumber z(conductor);
  z.c_ = t->powers[1 % t->powers.size()];
  if (t->phi == 1) z.c_ = {BigRational(conductor == 1 ? 1 : -1)};
  out.c_ = acc;
  for (long i = 0; i < e; ++i) out = out * z;
  return out;
}

bool CycloNumber::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

static void require_same(const CycloNumber& a, const CycloNumber& b) {
  if (a.conductor() != b.conductor())
    throw PreconditionError("cyclotomic operands with different conductors");
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  require_same(*this, o);
  CycloNumber r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
  require_same(*this, o);
  CycloNumber r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloNumber CycloNumber::operator*(const BigRational& s) const {
  CycloNumber r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  require_same(*this, o);
  auto t = tables(n_);
  const std::size_t phi = t->phi;
  if (phi == 1) return CycloNumber(n_, c_[0] * o.c_[0]);
  RatVec prod(2 * phi - 1, BigRational(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j)
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
  }
  CycloNumber r(n_);
  for (std::size_t i = 0; i < phi; ++i) r.c_[i] = prod[i];
  for (std::size_t k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const RatVec& pw = t->powers[k];
    for (std::size_t i = 0; i < phi; ++i) r.c_[i] += prod[k] * pw[i];
  }
  return r;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const std::size_t phi = c_.size();
  if (phi == 1) return CycloNumber(n_, 1 / c_[0]);
  // Solve (multiplication-by-this matrix) * x = e_0.
  RatMatrix m(phi, phi);
  CycloNumber basis(n_);
  for (std::size_t j = 0; j < phi; ++j) {
    basis.c_.assign(phi, BigRational(0));
    basis.c_[j] = 1;
    CycloNumber col = *this * basis;
    for (std::size_t i = 0; i < phi; ++i) m(i, j) = col.c_[i];
  }
  RatVec e(phi, BigRational(0));
  e[0] = 1;
  auto x = solve(m, e);
  if (!x) throw DivisionByZero();
  CycloNumber r(n_);
  r.c_ = *x;
  return r;
}

CycloNumber CycloNumber::conj() const {
  CycloNumber r(n_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r += root_of_unity(n_, -static_cast<long>(i)) * c_[i];
  return r;
}

CycloNumber CycloNumber::lift(unsigned m) const {
  if (m % n_ != 0) throw PreconditionError("lift target conductor not a multiple");
  CycloNumber r(m);
  const long step = m / n_;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r += root_of_unity(m, static_cast<long>(i) * step) * c_[i];
  return r;
}

std::complex<double> CycloNumber::embed() const {
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double ang = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    s += to_double(c_[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string CycloNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigRational v = c_[i];
    if (!first) os << (v < 0 ? " - " : " + ");
    else if (v < 0) os << "-";
    if (v < 0) v = -v;
    first = false;
    if (i == 0) os << to_string(v);
    else {
      if (v != 1) os << to_string(v) << "*";
      os << "z" << n_;
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace octc
