#include "octc/exact/lattice.hpp"

#include <algorithm>
#include <utility>

namespace octc {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = BigRational(m(i, j));
  return r;
}

namespace {

// x*a + y*b == g, g >= 0
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const BigInt& f) {
  if (f == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

// Replace rows (p, i) by the unimodular combination that puts gcd in row p.
void gcd_rows(IntMatrix& m, IntMatrix& u, std::size_t p, std::size_t i, std::size_t c) {
  BigInt a = m(p, c), b = m(i, c), x, y;
  BigInt g = ext_gcd(a, b, x, y);
  BigInt ag = a / g, bg = b / g;
  for (IntMatrix* mat : {&m, &u}) {
    for (std::size_t k = 0; k < mat->cols(); ++k) {
      BigInt rp = (*mat)(p, k), ri = (*mat)(i, k);
      (*mat)(p, k) = x * rp + y * ri;
      (*mat)(i, k) = -bg * rp + ag * ri;
    }
  }
}

void check_unimodular(const IntMatrix& u) {
#ifdef OCTC_CHECKED
  BigInt d = determinant(u);
  if (d != 1 && d != -1) throw CheckFailure("lattice transform is not unimodular");
#else
  (void)u;
#endif
}

struct Rref {
  RatMatrix m;
  std::vector<std::size_t> pivots;
};

Rref rref(RatMatrix m) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    BigRational inv = 1 / m(r, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      BigRational f = m(i, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t p = 0;
  for (std::size_t c = 0; c < h.cols() && p < h.rows(); ++c) {
    for (std::size_t i = p + 1; i < h.rows(); ++i)
      if (h(i, c) != 0) gcd_rows(h, u, p, i, c);
    if (h(p, c) == 0) {
      // pivot might sit in a lower row when h(p,c) started at zero
      std::size_t q = p + 1;
      while (q < h.rows() && h(q, c) == 0) ++q;
      if (q == h.rows()) continue;
      h.swap_rows(p, q);
      u.swap_rows(p, q);
    }
    if (h(p, c) < 0) {
      negate_row(h, p);
      negate_row(u, p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      BigInt f = -floor_div(h(i, c), h(p, c));
      row_axpy(h, i, p, f);
      row_axpy(u, i, p, f);
    }
    ++p;
  }
  out.rank = p;
#ifdef OCTC_CHECKED
  check_unimodular(u);
  if (!(u * m == h)) throw CheckFailure("hnf: transform does not reproduce H");
#endif
  return out;
}

SmithForm smith(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t pr = a.rows(), pc = a.cols();
      BigInt best = 0;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          BigInt v = boost::multiprecision::abs(a(i, j));
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) goto finished;
      a.swap_rows(t, pr);
      left.swap_rows(t, pr);
      a.swap_cols(t, pc);
      right.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        BigInt q = a(i, t) / a(t, t);
        row_axpy(a, i, t, -q);
        row_axpy(left, i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        BigInt q = a(t, j) / a(t, t);
        col_axpy(a, j, t, -q);
        col_axpy(right, j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_axpy(a, t, i, BigInt(1));
            row_axpy(left, t, i, BigInt(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      negate_row(a, t);
      negate_row(left, t);
    }
  }
finished:
  SmithForm out;
  for (std::size_t t = 0; t < n; ++t) out.diag.push_back(a(t, t));
  out.left = std::move(left);
  out.right = std::move(right);
#ifdef OCTC_CHECKED
  check_unimodular(out.left);
  check_unimodular(out.right);
  IntMatrix d(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) d(t, t) = out.diag[t];
  if (!(out.left * m * out.right == d)) throw CheckFailure("smith: transforms do not reproduce D");
#endif
  return out;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  HermiteForm hf = hnf(m.transpose());
  const std::size_t n = m.cols();
  const std::size_t k = n - hf.rank;
  if (k == 0) return IntMatrix(n, 0);
  IntMatrix rev(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) rev(i, j) = hf.u(hf.rank + i, n - 1 - j);
  IntMatrix h = hnf(rev).h;
  IntMatrix out(n, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) out(n - 1 - j, i) = h(i, j);
#ifdef OCTC_CHECKED
  IntMatrix prod = m * out;
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (prod(i, j) != 0) throw CheckFailure("kernel_basis: column not in kernel");
#endif
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

BigRational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of non-square matrix");
  RatMatrix a = m;
  BigRational det = 1;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t p = c;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      BigRational f = a(i, c) / a(c, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(i, k) -= f * a(c, k);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

RatMatrix nullspace(const RatMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVec v(m.cols(), BigRational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(i, f);
    basis.push_back(std::move(v));
  }
  return RatMatrix::from_cols(basis, m.cols());
}

std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
  if (b.size() != m.rows()) throw PreconditionError("solve: shape mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  RatVec x(m.cols(), BigRational(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.m(i, m.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
  return inv;
}

}  // namespace octc
