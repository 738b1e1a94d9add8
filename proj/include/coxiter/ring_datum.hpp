#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "coxiter/integer_matrix.hpp"

namespace coxiter {

using Rational = mpq_class;

// Exponent vector l_i; every entry >= 1. Its gcd is the block gcd.
using ExponentBlock = std::vector<long long>;

enum class RingType { type1, type2 };

// Defining data (A, P0) of a trinomial ring.
//
// Type 2: blocks l_0, ..., l_r (at least 3 blocks), coefficient matrix A
// given by r+1 pairwise linearly independent rational columns.
// Type 1: blocks l_1, ..., l_r (at least 2 blocks), coefficients a_1, ..., a_r
// pairwise different rationals.
// m counts the free variables S_k in both cases.
struct RingDatum {
  RingType type = RingType::type2;
  std::vector<ExponentBlock> blocks;
  std::size_t m = 0;
  std::vector<std::array<Rational, 2>> coeff_columns;  // Type 2 only
  std::vector<Rational> coeff_values;                  // Type 1 only

  bool operator==(const RingDatum&) const = default;

  std::size_t n() const;  // total number of T variables
  // r as in the defining construction: blocks.size()-1 for Type 2,
  // blocks.size() for Type 1.
  std::size_t r() const {
    return type == RingType::type2 ? blocks.size() - 1 : blocks.size();
  }
};

// Convenience builders supplying the canonical coefficient matrix:
// Type 2 columns (1,0), (0,1), (1,1), (1,2), ...; Type 1 values 0, 1, 2, ...
RingDatum make_type2(std::vector<ExponentBlock> blocks, std::size_t m = 0);
RingDatum make_type1(std::vector<ExponentBlock> blocks, std::size_t m = 0);

// Throws a ValidationError subclass if any structural invariant fails;
// otherwise returns its argument.
const RingDatum& validate_datum(const RingDatum& d);

// The r x (n+m) exponent matrix P0 of the defining construction.
IntegerMatrix build_p0(const RingDatum& d);

// Block gcds, in block order.
std::vector<long long> block_gcds(const RingDatum& d);

// Human-readable defining trinomial relations, one string per g_i, with
// exact rational coefficients.
std::vector<std::string> render_relations(const RingDatum& d);

// gcd-ordering of a rational Type 2 datum:
//   (1) gcd(block gcd i, block gcd j) = 1 for all i != j with j >= 3,
//   (2) gcd of block gcds 1,2 equals the gcd of block gcds 0,1,2.
bool is_gcd_ordered(const RingDatum& d);

struct GcdOrderResult {
  RingDatum datum;
  std::vector<std::size_t> permutation;  // permutation[k] = source block index
};

// Deterministic block reordering making a rational Type 2 datum gcd-ordered:
// the non-coprime pair (or the mutually-even triple) moves to the front,
// larger block gcd first, remaining blocks by decreasing gcd, ties by
// original index. Coefficient columns are permuted in lockstep.
GcdOrderResult gcd_order(const RingDatum& d);

// Variable label in the defining polynomial ring: "T{i}{j}" or "S{k}".
std::string variable_label(const RingDatum& d, std::size_t block,
                           std::size_t j);

}  // namespace coxiter
