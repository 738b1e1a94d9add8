#pragma once

#include <cstddef>
#include <vector>

#include "coxiter/integer_matrix.hpp"

namespace coxiter {

// Rank plus invariant factors d_1 | d_2 | ... | d_t (each >= 2) presenting
// a finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_t.
struct AbelianGroupInvariants {
  std::size_t rank = 0;
  std::vector<Int> torsion;

  bool operator==(const AbelianGroupInvariants&) const = default;
  bool is_torsion_free() const { return torsion.empty(); }
};

struct HermiteResult {
  IntegerMatrix h;  // row-style Hermite normal form
  IntegerMatrix u;  // unimodular, h = u * input
};

struct SmithResult {
  IntegerMatrix d;  // diagonal, d_1 | d_2 | ..., entries >= 0
  IntegerMatrix u;  // unimodular
  IntegerMatrix v;  // unimodular, d = u * input * v
};

// Row-style HNF: pivots positive, entries above each pivot reduced into
// [0, pivot). Returns H and a unimodular U with H = U * M.
HermiteResult hermite_normal_form(const IntegerMatrix& m);

// D = U * M * V diagonal with nonnegative entries forming a divisibility
// chain. Pivot choice: nonzero entry of minimal absolute value, ties broken
// by smallest row then column index.
SmithResult smith_normal_form(const IntegerMatrix& m);

// Presents Z^cols(M) / row-span(M).
AbelianGroupInvariants cokernel_invariants(const IntegerMatrix& m);

// gcd of all k x k minors (0 if all vanish). Throws std::out_of_range if
// k is zero or exceeds min(rows, cols). Independent of the normal-form
// code path: minors are evaluated directly.
Int determinantal_divisor(const IntegerMatrix& m, std::size_t k);

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const IntegerMatrix& m);

}  // namespace coxiter
