#include "octc/exact/simplex.hpp"

namespace octc {

namespace {

struct Tableau {
  // rows 0..m-1 constraints, row m objective (reduced costs, maximize form:
  // entry j is -c_j + ..., optimal when all >= 0)
  RatMatrix t;
  std::vector<std::size_t> basis;
  std::size_t m, n;  // constraints, structural columns (incl. artificials)

  const BigRational& rhs(std::size_t i) const { return t(i, n); }

  void pivot(std::size_t r, std::size_t c) {
    BigRational inv = 1 / t(r, c);
    for (std::size_t j = 0; j <= n; ++j) t(r, j) *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || t(i, c) == 0) continue;
      BigRational f = t(i, c);
      for (std::size_t j = 0; j <= n; ++j)
        if (t(r, j) != 0) t(i, j) -= f * t(r, j);
    }
    basis[r] = c;
  }

  // Returns false when unbounded. Columns >= limit are never entered.
  bool run(std::size_t limit) {
    for (;;) {
      std::size_t enter = n;
      for (std::size_t j = 0; j < limit; ++j)
        if (t(m, j) < 0) {
          enter = j;
          break;
        }
      if (enter == n) return true;
      std::size_t leave = m;
      BigRational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t(i, enter) <= 0) continue;
        BigRational ratio = rhs(i) / t(i, enter);
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult simplex_maximize(const RatMatrix& a, const RatVec& b, const RatVec& c) {
  const std::size_t m = a.rows(), nv = a.cols();
  if (b.size() != m || c.size() != nv) throw PreconditionError("simplex: shape mismatch");
  Tableau tab;
  tab.m = m;
  tab.n = nv + m;
  tab.t = RatMatrix(m + 1, tab.n + 1);
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    BigRational sign = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < nv; ++j) tab.t(i, j) = sign * a(i, j);
    tab.t(i, nv + i) = 1;
    tab.t(i, tab.n) = sign * b[i];
    tab.basis[i] = nv + i;
  }
  // phase one: maximize -sum(artificials)
  for (std::size_t j = 0; j <= tab.n; ++j) {
    if (j >= nv && j < tab.n) continue;
    BigRational s = 0;
    for (std::size_t i = 0; i < m; ++i) s += tab.t(i, j);
    tab.t(m, j) = -s;
  }
  tab.run(tab.n);
  LpResult res;
  if (tab.t(m, tab.n) != 0) return res;  // infeasible
  // drive artificials out of the basis where possible
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < nv) continue;
    for (std::size_t j = 0; j < nv; ++j)
      if (tab.t(i, j) != 0) {
        tab.pivot(i, j);
        break;
      }
  }
  // phase two objective row
  for (std::size_t j = 0; j <= tab.n; ++j) tab.t(m, j) = j < nv ? -c[j] : BigRational(0);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t bj = tab.basis[i];
    if (bj >= nv) continue;
    BigRational f = tab.t(m, bj);
    if (f == 0) continue;
    for (std::size_t j = 0; j <= tab.n; ++j) tab.t(m, j) -= f * tab.t(i, j);
  }
  if (!tab.run(nv)) {
    res.status = LpStatus::unbounded;
    return res;
  }
  res.status = LpStatus::optimal;
  res.x.assign(nv, BigRational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < nv) res.x[tab.basis[i]] = tab.rhs(i);
  res.value = dot(c, res.x);
  return res;
}

}  // namespace octc
