#include "octc/exact/cone.hpp"

#include <algorithm>
#include <set>

#include "octc/exact/lattice.hpp"
#include "octc/exact/simplex.hpp"

namespace octc {

RationalCone::RationalCone(std::size_t dim, std::vector<RatVec> generators)
    : dim_(dim), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.size() != dim_) throw PreconditionError("cone generator dimension mismatch");
}

bool HalfspaceForm::contains(const RatVec& v) const {
  for (const auto& e : equalities)
    if (dot(e, v) != 0) return false;
  for (const auto& a : inequalities)
    if (dot(a, v) < 0) return false;
  return true;
}

bool cone_contains(const RationalCone& c, const RatVec& v) {
  if (v.size() != c.dim()) throw PreconditionError("cone_contains: dimension mismatch");
  if (is_zero(v)) return true;
  if (c.generators().empty()) return false;
  RatMatrix a = RatMatrix::from_cols(c.generators(), c.dim());
  RatVec zero(c.generators().size(), BigRational(0));
  return simplex_maximize(a, v, zero).status == LpStatus::optimal;
}

namespace {

RatMatrix rows_matrix(const std::vector<RatVec>& rows, std::size_t dim) {
  return RatMatrix::from_rows(rows, dim);
}

std::vector<RatVec> columns(const RatMatrix& m) {
  std::vector<RatVec> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.col(j));
  return out;
}

// Visit every k-subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RatVec as_rat(const IntVec& v) { return to_rat(v); }

}  // namespace

std::size_t cone_dimension(const RationalCone& c) {
  if (c.generators().empty()) return 0;
  return rank(rows_matrix(c.generators(), c.dim()));
}

HalfspaceForm facets(const RationalCone& c) {
  HalfspaceForm h;
  h.dim = c.dim();
  const auto& g = c.generators();
  if (g.empty()) {
    for (std::size_t i = 0; i < c.dim(); ++i) {
      RatVec e(c.dim(), BigRational(0));
      e[i] = 1;
      h.equalities.push_back(e);
    }
    return h;
  }
  RatMatrix gm = rows_matrix(g, c.dim());
  const std::size_t r = rank(gm);
  h.equalities = columns(nullspace(gm));
  if (r == 0) return h;
  std::set<IntVec> seen;
  for_each_subset(g.size(), r - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> rows = h.equalities;
    for (auto i : idx) rows.push_back(g[i]);
    RatMatrix ns = nullspace(rows_matrix(rows, c.dim()));
    if (ns.cols() != 1) return;
    RatVec a = ns.col(0);
    bool pos = false, neg = false;
    for (const auto& v : g) {
      BigRational d = dot(a, v);
      if (d > 0) pos = true;
      if (d < 0) neg = true;
    }
    if (pos && neg) return;
    if (!pos && !neg) return;
    if (neg)
      for (auto& x : a) x = -x;
    IntVec p = primitive(a);
    if (seen.insert(p).second) h.inequalities.push_back(as_rat(p));
  });
  return h;
}

RationalCone cone_from_halfspaces(const HalfspaceForm& h) {
  const std::size_t d = h.dim;
  std::vector<RatVec> all = h.equalities;
  all.insert(all.end(), h.inequalities.begin(), h.inequalities.end());
  std::vector<RatVec> gens;
  std::vector<RatVec> eqs = h.equalities;
  if (d == 0) return RationalCone(0);
  RatMatrix lineality =
      all.empty() ? RatMatrix::identity(d) : nullspace(rows_matrix(all, d));
  for (std::size_t j = 0; j < lineality.cols(); ++j) {
    RatVec l = lineality.col(j);
    gens.push_back(as_rat(primitive(l)));
    for (auto& x : l) x = -x;
    gens.push_back(as_rat(primitive(l)));
    eqs.push_back(lineality.col(j));
  }
  const std::size_t e = eqs.empty() ? 0 : rank(rows_matrix(eqs, d));
  if (e >= d) {
    std::sort(gens.begin(), gens.end());
    return RationalCone(d, gens);
  }
  const std::size_t need = d - 1 - e;
  std::set<IntVec> seen;
  for_each_subset(h.inequalities.size(), need, [&](const std::vector<std::size_t>& idx) {
    std::vector<RatVec> rows = eqs;
    for (auto i : idx) rows.push_back(h.inequalities[i]);
    RatMatrix ns = nullspace(rows_matrix(rows, d));
    if (ns.cols() != 1) return;
    RatVec v = ns.col(0);
    for (int sgn = 0; sgn < 2; ++sgn) {
      if (sgn)
        for (auto& x : v) x = -x;
      bool ok = true;
      for (const auto& a : h.inequalities)
        if (dot(a, v) < 0) {
          ok = false;
          break;
        }
      if (ok) {
        IntVec p = primitive(v);
        if (seen.insert(p).second) gens.push_back(as_rat(p));
      }
    }
  });
  std::sort(gens.begin(), gens.end());
  return RationalCone(d, gens);
}

RationalCone cone_intersect(const std::vector<RationalCone>& cones) {
  if (cones.empty()) throw PreconditionError("cone_intersect of an empty list");
  if (cones.size() == 1) return cones[0];
  HalfspaceForm h;
  h.dim = cones[0].dim();
  for (const auto& c : cones) {
    if (c.dim() != h.dim) throw PreconditionError("cone_intersect: dimension mismatch");
    HalfspaceForm f = facets(c);
    h.equalities.insert(h.equalities.end(), f.equalities.begin(), f.equalities.end());
    h.inequalities.insert(h.inequalities.end(), f.inequalities.begin(), f.inequalities.end());
  }
  return cone_from_halfspaces(h);
}

}  // namespace octc
