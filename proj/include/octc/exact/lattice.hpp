#pragma once

#include "octc/exact/matrix.hpp"

#include <optional>

namespace octc {

struct HermiteForm {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
  std::size_t rank = 0;
};

struct SmithForm {
  IntVec diag;     // d_1 | d_2 | ..., length min(rows, cols)
  IntMatrix left;  // unimodular
  IntMatrix right; // unimodular, left * m * right == diag matrix
};

HermiteForm hnf(const IntMatrix& m);
SmithForm smith(const IntMatrix& m);

// Columns form a Z-basis of {v : m v = 0}, normalized so the basis matrix
// is in Hermite form with respect to the reversed coordinate order.
IntMatrix kernel_basis(const IntMatrix& m);

BigInt determinant(const IntMatrix& m);
BigRational determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
// Columns span the rational null space.
RatMatrix nullspace(const RatMatrix& m);
// Some solution of m x = b, or nullopt when inconsistent.
std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b);
std::optional<RatMatrix> inverse(const RatMatrix& m);

}  // namespace octc
