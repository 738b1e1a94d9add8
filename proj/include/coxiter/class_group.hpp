#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxiter/normal_form.hpp"
#include "coxiter/ring_datum.hpp"

namespace coxiter {

// K0 together with the degree of each variable, in SNF-normalized
// coordinates: free coordinates first, then one coordinate per invariant
// factor, reduced into [0, d_i).
struct GradingData {
  AbelianGroupInvariants group;
  // (variable label, coordinate vector), in variable order: T blocks first,
  // then S_1, ..., S_m.
  std::vector<std::pair<std::string, std::vector<Int>>> degrees;
};

// K0 = Z^(n+m) / row-span(P0).
AbelianGroupInvariants class_group(const RingDatum& d);

GradingData variable_degrees(const RingDatum& d);

// Generator matrix P1 of the kernel of Z^(n+m) -> K0 / torsion.
// Type 2 requires a rational, gcd-ordered datum; Type 1 requires rational.
// All divisions are exact by construction.
IntegerMatrix torsion_free_cover(const RingDatum& d);

}  // namespace coxiter
