#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "coxiter/ring_datum.hpp"

namespace coxiter {

// Decreasingly sorted triple of positive integers.
struct PlatonicTriple {
  std::array<long long, 3> entries{1, 1, 1};

  bool operator==(const PlatonicTriple&) const = default;
  auto operator<=>(const PlatonicTriple&) const = default;

  static PlatonicTriple sorted(long long a, long long b, long long c);
  std::string to_string() const;
};

// Triple membership in (5,3,2), (4,3,2), (3,3,2), (x,2,2), (x,y,1).
bool is_platonic_triple(const PlatonicTriple& t);

enum class RationalityKind {
  factorial,
  single_pair,
  triple_of_twos,
  not_rational,
};

// Rationality classification of Spec R(A, P0).
//
// Type 2: factorial = all block gcds pairwise coprime; single_pair = exactly
// one non-coprime pair {i, j}; triple_of_twos = exactly three non-coprime
// pairs, forming a triangle {i, j, k} with all three gcds equal to 2.
// Type 1: factorial = all block gcds 1; single_pair with indices {i} =
// exactly one block gcd > 1; triple_of_twos with indices {i, j} = two block
// gcds equal to 2, the rest 1.
struct RationalityCase {
  RationalityKind kind = RationalityKind::not_rational;
  std::vector<std::size_t> indices;  // strictly increasing

  bool operator==(const RationalityCase&) const = default;
  bool is_rational() const { return kind != RationalityKind::not_rational; }
  std::string to_string() const;
};

RationalityCase rationality_from_gcds(const std::vector<long long>& gcds,
                                      RingType type);

bool is_factorial(const RingDatum& d);
RationalityCase rationality_case(const RingDatum& d);
bool is_rational(const RingDatum& d);

// Type 2 only: sum of reciprocal block gcds exceeds r-1, compared exactly.
bool is_hyperplatonic(const RingDatum& d);

// Type 2, hyperplatonic: the decreasingly sorted triple of block gcds > 1,
// padded with 1s. Factorial data yield (1,1,1).
PlatonicTriple basic_platonic_triple(const RingDatum& d);

// Type 2: rational with hyperplatonic ring. Type 1: rational with rational
// total coordinate space.
bool admits_iteration(const RingDatum& d);

}  // namespace coxiter
