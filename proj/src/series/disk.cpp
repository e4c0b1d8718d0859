#include "octc/series/disk.hpp"

#include <cmath>
#include <numbers>

namespace octc {

UMatrix u_matrix(long m, unsigned conductor) {
  if (m < 1) throw PreconditionError("U matrix needs m >= 1");
  unsigned n = conductor ? conductor : static_cast<unsigned>(m);
  if (n % m) throw PreconditionError("conductor must be a multiple of m");
  long step = static_cast<long>(n) / m;
  UMatrix u;
  u.m = m;
  u.entries.assign(m, std::vector<CycloNumber>(m, CycloNumber(n)));
  for (long i = 1; i <= m; ++i)
    for (long j = 1; j <= m; ++j) u.entries[i - 1][j - 1] = CycloNumber::root_of_unity(n, -i * j * step);
  return u;
}

UMatrix UMatrix::conjugate_transpose() const {
  UMatrix t = *this;
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) t.entries[i][j] = entries[j][i].conj();
  return t;
}

UMatrix UMatrix::operator*(const UMatrix& o) const {
  UMatrix r = *this;
  unsigned n = entries[0][0].conductor();
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j) {
      CycloNumber s(n);
      for (long k = 0; k < m; ++k) s += entries[i][k] * o.entries[k][j];
      r.entries[i][j] = s;
    }
  return r;
}

UMatrix UMatrix::inverse() const {
  UMatrix t = conjugate_transpose();
  for (auto& row : t.entries)
    for (auto& e : row) e = e * BigRational(1, m);
  if (!(*this * t).is_scalar(1)) throw CheckFailure("U matrix is not m times unitary");
  return t;
}

bool UMatrix::is_scalar(const BigRational& c) const {
  unsigned n = entries[0][0].conductor();
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < m; ++j)
      if (entries[i][j] != CycloNumber(n, i == j ? c : BigRational(0))) return false;
  return true;
}

std::string UMatrix::str() const {
  std::string s = "[";
  for (long i = 0; i < m; ++i) {
    s += i ? ",[" : "[";
    for (long j = 0; j < m; ++j) s += (j ? "," : "") + entries[i][j].str();
    s += "]";
  }
  return s + "]";
}

std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

namespace {

CycloNumber u_entry(const CycloNumber& proto, long ell, long i, long j) {
  unsigned n = proto.conductor();
  if (n % ell) throw PreconditionError("conductor does not contain the l-th roots of unity");
  return CycloNumber::root_of_unity(n, -i * j * static_cast<long>(n / ell));
}
std::complex<double> u_entry(const std::complex<double>&, long ell, long i, long j) {
  return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(i * j) / static_cast<double>(ell));
}
// Unscaling weight exp(-pi i (l-j) / l). With kappa_j near exp(pi i (2j-1) / l)
// this is the only choice of sign that makes W_j real for every l.
CycloNumber xi_weight(const CycloNumber& proto, long ell, long j) {
  unsigned n = proto.conductor();
  if (n % (2 * ell)) throw PreconditionError("conductor does not contain the 2l-th roots of unity");
  return CycloNumber::root_of_unity(n, -(ell - j) * static_cast<long>(n / (2 * ell)));
}
std::complex<double> xi_weight(const std::complex<double>&, long ell, long j) {
  return std::polar(1.0, -std::numbers::pi * static_cast<double>(ell - j) / static_cast<double>(ell));
}

}  // namespace

template <class C>
DiskPotential<C> disk_potential(const std::vector<Series<C>>& roots, long ell) {
  if (static_cast<long>(roots.size()) != ell) throw PreconditionError("need exactly l roots");
  DiskPotential<C> d;
  d.ell = ell;
  d.backend = std::is_same_v<C, CycloNumber> ? Backend::exact : Backend::float64;
  std::vector<Series<C>> g;
  for (const auto& k : roots) g.push_back(k.x_log_derivative() * k.inverse());
  for (long i = 1; i <= ell; ++i) {
    Series<C> h = g[0].like();
    for (long j = 1; j <= ell; ++j) h = h + g[j - 1] * u_entry(h.proto(), ell, i, j);
    Series<C> w = h.x_log_antiderivative(2) * xi_weight(h.proto(), ell, i);
    if constexpr (std::is_same_v<C, CycloNumber>) {
      for (const auto& [e, c] : w.terms())
        if (!c.is_rational())
          throw CheckFailure("W_" + std::to_string(i) + " coefficient of " + w.monomial_str(e) + " is not rational (" +
                             c.str() + "); root ordering is wrong");
    }
    d.W.push_back(std::move(w));
  }
  return d;
}

std::complex<double> disk_weight(long ell, long j) { return xi_weight(std::complex<double>(), ell, j); }

template DiskPotential<CycloNumber> disk_potential(const std::vector<ExactSeries>&, long);
template DiskPotential<std::complex<double>> disk_potential(const std::vector<FloatSeries>&, long);

std::vector<std::pair<Exponent, BigRational>> rational_terms(const ExactSeries& s) {
  std::vector<std::pair<Exponent, BigRational>> out;
  for (const auto& [e, c] : s.terms()) {
    if (!c.is_rational()) throw CheckFailure("coefficient is not rational: " + c.str());
    out.emplace_back(e, c.rational_part());
  }
  return out;
}

}  // namespace octc
