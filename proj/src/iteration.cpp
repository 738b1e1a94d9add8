#include "coxiter/iteration.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "coxiter/errors.hpp"

namespace coxiter {

std::string ChainFamily::to_string() const {
  switch (kind) {
    case ChainFamilyKind::family_i:
      return "FamilyI";
    case ChainFamilyKind::family_ii:
      return "FamilyII(x=" + std::to_string(x) + ")";
    case ChainFamilyKind::family_iii:
      return "FamilyIII(x=" + std::to_string(x) + ")";
    case ChainFamilyKind::family_iv:
      return "FamilyIV(l0=" + std::to_string(l0) +
             ",l1=" + std::to_string(l1) + ")";
    case ChainFamilyKind::type1_single_step:
      return "Type1SingleStep";
    case ChainFamilyKind::already_factorial:
      return "AlreadyFactorial";
  }
  return "AlreadyFactorial";
}

ComponentCounts component_counts(const RingDatum& d) {
  validate_datum(d);
  auto gcds = block_gcds(d);
  if (!rationality_from_gcds(gcds, d.type).is_rational())
    throw NotRationalError("component counts require a rational datum");

  ComponentCounts cc;
  cc.c.reserve(d.blocks.size());
  if (d.type == RingType::type2) {
    if (!is_gcd_ordered(d))
      throw NotGcdOrderedError("component counts require gcd-ordering");
    const long long g12 = std::gcd(gcds[1], gcds[2]);
    const long long g02 = std::gcd(gcds[0], gcds[2]);
    const long long g01 = std::gcd(gcds[0], gcds[1]);
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      if (i == 0)
        cc.c.push_back(g12);
      else if (i == 1)
        cc.c.push_back(g02);
      else if (i == 2)
        cc.c.push_back(g01);
      else
        // Table value g12*g02*g01 / gcd(l0,l1,l2); gcd-ordering makes the
        // triple gcd equal to g12.
        cc.c.push_back(g02 * g01);
    }
  } else {
    for (std::size_t i = 1; i < gcds.size(); ++i)
      if (gcds[i - 1] < gcds[i])
        throw NotOrderedError(
            "component counts require decreasingly ordered block gcds");
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      if (i == 0)
        cc.c.push_back(gcds[0]);
      else if (i == 1)
        cc.c.push_back(gcds[1]);
      else
        cc.c.push_back(gcds[0] * gcds[1]);
    }
  }
  return cc;
}

namespace {

RingDatum sort_blocks_decreasing(const RingDatum& d) {
  auto gcds = block_gcds(d);
  std::vector<std::size_t> order(d.blocks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return gcds[a] > gcds[b];
  });
  RingDatum out = d;
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.blocks[k] = d.blocks[order[k]];
    out.coeff_values[k] = d.coeff_values[order[k]];
  }
  return out;
}

ExponentBlock scaled_block(const ExponentBlock& b, long long divisor) {
  ExponentBlock out;
  out.reserve(b.size());
  for (long long e : b) {
    if (e % divisor != 0)
      throw std::logic_error("inexact exponent division");
    out.push_back(e / divisor);
  }
  return out;
}

}  // namespace

RingDatum cox_step(const RingDatum& d) {
  validate_datum(d);
  auto rc = rationality_case(d);
  if (rc.kind == RationalityKind::factorial)
    throw FactorialError("datum is already factorial; no step to take");
  if (!rc.is_rational())
    throw NotRationalError("cox_step requires a rational datum");

  std::vector<ExponentBlock> new_blocks;
  if (d.type == RingType::type2) {
    const RingDatum dd = gcd_order(d).datum;
    const ComponentCounts cc = component_counts(dd);
    const IntegerMatrix p1 = torsion_free_cover(dd);
    std::size_t col = 0;
    for (std::size_t i = 0; i < dd.blocks.size(); ++i) {
      ExponentBlock v(dd.blocks[i].size());
      for (std::size_t j = 0; j < v.size(); ++j, ++col) {
        Int g = 0;
        for (std::size_t row = 0; row < p1.rows(); ++row)
          g = gcd(g, p1(row, col));
        v[j] = g.get_si();
      }
      for (long long copy = 0; copy < cc.c[i]; ++copy)
        new_blocks.push_back(v);
    }
    return make_type2(std::move(new_blocks), d.m);
  }

  const RingDatum dd = sort_blocks_decreasing(d);
  const ComponentCounts cc = component_counts(dd);
  auto gcds = block_gcds(dd);
  for (std::size_t i = 0; i < dd.blocks.size(); ++i) {
    ExponentBlock v = scaled_block(dd.blocks[i], gcds[i]);
    for (long long copy = 0; copy < cc.c[i]; ++copy) new_blocks.push_back(v);
  }
  return make_type1(std::move(new_blocks), d.m);
}

std::multiset<ExponentBlock> predicted_step_multiset(const PlatonicTriple& bpt,
                                                     const RingDatum& d) {
  validate_datum(d);
  if (d.type != RingType::type2)
    throw WrongTypeError("the transition table covers Type 2 data");
  if (!is_hyperplatonic(d))
    throw NotHyperplatonicError("transition table requires hyperplatonicity");
  if (is_factorial(d))
    throw FactorialError("transition table covers non-factorial data");
  auto gcds = block_gcds(d);
  for (std::size_t i = 0; i < gcds.size(); ++i) {
    long long expected = i < 3 ? bpt.entries[i] : 1;
    if (gcds[i] != expected)
      throw NotOrderedError(
          "blocks must be ordered with the basic platonic triple at the "
          "front");
  }

  std::multiset<ExponentBlock> out;
  auto add = [&](std::size_t block, long long copies, long long divisor) {
    ExponentBlock v = scaled_block(d.blocks[block], divisor);
    for (long long c = 0; c < copies; ++c) out.insert(v);
  };
  const auto [x, y, z] = bpt.entries;
  if (x == 4 && y == 3 && z == 2) {
    add(1, 2, 1);
    add(0, 1, 2);
    add(2, 1, 2);
    for (std::size_t i = 3; i < d.blocks.size(); ++i) add(i, 2, 1);
  } else if (x == 3 && y == 3 && z == 2) {
    add(2, 3, 1);
    add(0, 1, 3);
    add(1, 1, 3);
    for (std::size_t i = 3; i < d.blocks.size(); ++i) add(i, 3, 1);
  } else if (y == 2 && z == 2 && x % 2 == 0) {
    add(0, 2, 2);
    add(1, 2, 2);
    add(2, 2, 2);
    for (std::size_t i = 3; i < d.blocks.size(); ++i) add(i, 4, 1);
  } else if (y == 2 && z == 2) {
    add(0, 2, 1);
    add(1, 1, 2);
    add(2, 1, 2);
    for (std::size_t i = 3; i < d.blocks.size(); ++i) add(i, 2, 1);
  } else if (z == 1) {
    const long long g = std::gcd(x, y);
    add(0, 1, g);
    add(1, 1, g);
    for (std::size_t i = 2; i < d.blocks.size(); ++i) add(i, g, 1);
  } else {
    throw std::logic_error("basic platonic triple matches no table row");
  }
  return out;
}

IterationChain iterate_chain(const RingDatum& d, std::size_t max_steps) {
  validate_datum(d);
  IterationChain chain;
  RingDatum cur = d;
  for (std::size_t idx = 0;; ++idx) {
    ChainStep step;
    step.datum = cur;
    step.rationality = rationality_case(cur);
    step.class_group = class_group(cur);
    if (cur.type == RingType::type2 && is_hyperplatonic(cur))
      step.bpt = basic_platonic_triple(cur);
    chain.steps.push_back(step);
    if (step.rationality.kind == RationalityKind::factorial) return chain;
    if (!step.rationality.is_rational()) throw NonRationalStepError(idx);
    if (idx >= max_steps)
      throw StepLimitExceededError("iteration did not terminate within " +
                                   std::to_string(max_steps) + " steps");
    cur = cox_step(cur);
  }
}

ChainFamily classify_chain(const IterationChain& chain) {
  if (chain.steps.empty())
    throw UnclassifiableChainError("empty chain");
  if (chain.steps.size() == 1)
    return {ChainFamilyKind::already_factorial};
  if (chain.steps.front().datum.type == RingType::type1) {
    if (chain.steps.size() != 2)
      throw UnclassifiableChainError(
          "Type 1 chain longer than a single step");
    return {ChainFamilyKind::type1_single_step};
  }

  BptSequence seq;
  for (const auto& step : chain.steps) {
    if (!step.bpt)
      throw UnclassifiableChainError(
          "Type 2 chain step without a basic platonic triple");
    seq.push_back(step.bpt->entries);
  }
  const auto [x, y, z] = seq.front();

  const auto matches = [&](const BptSequence& expected) {
    return seq == expected;
  };
  // Family (i) first: resolves the overlap at (2,2,2) -> (1,1,1).
  {
    const BptSequence full = {{4, 3, 2}, {3, 3, 2}, {2, 2, 2}, {1, 1, 1}};
    for (std::size_t s = 0; s < full.size(); ++s)
      if (seq.front() == full[s] &&
          matches(BptSequence(full.begin() + s, full.end())))
        return {ChainFamilyKind::family_i};
  }
  if (y == 2 && z == 2 && x % 2 == 0 && x >= 4) {
    if (matches({{x, 2, 2}, {x / 2, x / 2, 1}, {1, 1, 1}}))
      return {ChainFamilyKind::family_ii, x / 2};
  }
  if (y == 2 && z == 2 && x % 2 == 1) {
    if (matches({{x, 2, 2}, {x, x, 1}, {1, 1, 1}}))
      return {ChainFamilyKind::family_iii, x};
  }
  if (z == 1) {
    const long long g = std::gcd(x, y);
    if (g > 1 && matches({{x, y, 1}, {x / g, y / g, 1}}))
      return {ChainFamilyKind::family_iv, 0, x, y};
  }
  throw UnclassifiableChainError(
      "basic platonic triple sequence matches no family");
}

RingDatum type1_to_type2(const RingDatum& d) {
  validate_datum(d);
  if (d.type != RingType::type1)
    throw WrongTypeError("embedding applies to Type 1 data");
  long long ell = 1;
  for (long long g : block_gcds(d)) ell = std::lcm(ell, g);

  RingDatum out;
  out.type = RingType::type2;
  out.m = d.m;
  out.blocks.reserve(d.blocks.size() + 1);
  out.blocks.push_back({ell});
  out.blocks.insert(out.blocks.end(), d.blocks.begin(), d.blocks.end());
  out.coeff_columns.reserve(d.blocks.size() + 1);
  out.coeff_columns.push_back({Rational(-1), Rational(0)});
  for (const Rational& a : d.coeff_values)
    out.coeff_columns.push_back({a, Rational(1)});
  return out;
}

std::set<BptSequence> enumerate_bpt_chains(long long max_x) {
  if (max_x < 2) throw std::invalid_argument("max_x must be at least 2");
  std::set<PlatonicTriple> triples;
  if (max_x >= 4) triples.insert(PlatonicTriple{{4, 3, 2}});
  if (max_x >= 3) triples.insert(PlatonicTriple{{3, 3, 2}});
  for (long long x = 2; x <= max_x; ++x)
    triples.insert(PlatonicTriple{{x, 2, 2}});
  for (long long x = 2; x <= max_x; ++x)
    for (long long y = 2; y <= x; ++y)
      if (std::gcd(x, y) > 1) triples.insert(PlatonicTriple{{x, y, 1}});

  std::set<BptSequence> sequences;
  for (const PlatonicTriple& t : triples) {
    RingDatum d = make_type2(
        {{t.entries[0]}, {t.entries[1]}, {t.entries[2]}});
    IterationChain chain = iterate_chain(d);
    classify_chain(chain);  // propagates UnclassifiableChainError
    BptSequence seq;
    for (const auto& step : chain.steps) seq.push_back(step.bpt->entries);
    sequences.insert(std::move(seq));
  }
  return sequences;
}

}  // namespace coxiter
