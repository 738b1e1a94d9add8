#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxiter/class_group.hpp"
#include "coxiter/criteria.hpp"
#include "coxiter/ring_datum.hpp"

namespace coxiter {

// Number of irreducible components c(i) of V(X, T_ij), one entry per block.
struct ComponentCounts {
  std::vector<long long> c;
  bool operator==(const ComponentCounts&) const = default;
};

struct ChainStep {
  RingDatum datum;
  std::optional<PlatonicTriple> bpt;  // Type 2 hyperplatonic steps only
  AbelianGroupInvariants class_group;
  RationalityCase rationality;
};

// Sequence of ring data from the input up to a factorial terminus; every
// consecutive pair is related by cox_step.
struct IterationChain {
  std::vector<ChainStep> steps;
};

enum class ChainFamilyKind {
  family_i,
  family_ii,
  family_iii,
  family_iv,
  type1_single_step,
  already_factorial,
};

struct ChainFamily {
  ChainFamilyKind kind = ChainFamilyKind::already_factorial;
  long long x = 0;   // families ii, iii
  long long l0 = 0;  // family iv
  long long l1 = 0;  // family iv

  bool operator==(const ChainFamily&) const = default;
  std::string to_string() const;
};

// Component-count table. Type 2 data must be gcd-ordered, Type 1 data
// decreasingly ordered by block gcd; both must be rational.
ComponentCounts component_counts(const RingDatum& d);

// Defining data of the total coordinate space. The input is normalized
// internally (gcd-ordering for Type 2, decreasing reorder for Type 1).
// The coefficient matrix of the output is a deterministic representative;
// every property computed here depends only on the exponent data.
RingDatum cox_step(const RingDatum& d);

// Exponent-vector multiset of the iterated ring as predicted by the
// transition table, keyed by the basic platonic triple. The blocks of d
// must be ordered so the triple occupies indices 0, 1, 2.
std::multiset<ExponentBlock> predicted_step_multiset(const PlatonicTriple& bpt,
                                                     const RingDatum& d);

IterationChain iterate_chain(const RingDatum& d, std::size_t max_steps = 8);

ChainFamily classify_chain(const IterationChain& chain);

// Type 1 -> Type 2 embedding: leading block (lcm of block gcds), remaining
// blocks copied, coefficient columns (-1,0), (a_1,1), ..., (a_r,1).
RingDatum type1_to_type2(const RingDatum& d);

using BptSequence = std::vector<std::array<long long, 3>>;

// Runs the iteration on a minimal datum (singleton blocks, m = 0) for every
// non-factorial hyperplatonic triple with entries <= max_x and collects the
// resulting bpt sequences. Every sequence is checked to classify.
std::set<BptSequence> enumerate_bpt_chains(long long max_x);

}  // namespace coxiter
