#pragma once

#include <vector>

#include "octc/series/series.hpp"

namespace octc {

struct UMatrix {
  long m = 1;
  std::vector<std::vector<CycloNumber>> entries;  // 0-based storage, (i,j) -> entries[i-1][j-1]

  const CycloNumber& at(long i, long j) const { return entries.at(i - 1).at(j - 1); }
  UMatrix conjugate_transpose() const;
  UMatrix operator*(const UMatrix& o) const;
  UMatrix inverse() const;  // U^-1 = U^* / m
  bool is_scalar(const BigRational& c) const;
  std::string str() const;
};

// Entry (i,j) = omega_m^(-ij), omega_m = exp(2 pi i / m), in Q(zeta_conductor).
UMatrix u_matrix(long m, unsigned conductor = 0);

enum class Backend { exact, float64 };
std::string to_string(Backend b);

template <class C>
struct DiskPotential {
  std::vector<Series<C>> W;  // W[j-1] = W_j
  long ell = 1;
  Backend backend = Backend::exact;
};

// g_j = x d/dx log kappa_j, h = U_l g, W_j = w_j (x d/dx)^-2 h_j with
// w_j = exp(-pi i (l-j) / l). Exact backend: throws CheckFailure unless rational.
std::complex<double> disk_weight(long ell, long j);
template <class C>
DiskPotential<C> disk_potential(const std::vector<Series<C>>& roots, long ell);

// Rational coefficient table of an exact series (checked rational).
std::vector<std::pair<Exponent, BigRational>> rational_terms(const ExactSeries& s);

}  // namespace octc
