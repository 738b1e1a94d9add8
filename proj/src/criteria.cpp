#include "coxiter/criteria.hpp"

#include <algorithm>
#include <numeric>

#include "coxiter/errors.hpp"
#include "coxiter/iteration.hpp"

namespace coxiter {

PlatonicTriple PlatonicTriple::sorted(long long a, long long b, long long c) {
  PlatonicTriple t{{a, b, c}};
  std::sort(t.entries.begin(), t.entries.end(), std::greater<>());
  return t;
}

std::string PlatonicTriple::to_string() const {
  return "(" + std::to_string(entries[0]) + "," + std::to_string(entries[1]) +
         "," + std::to_string(entries[2]) + ")";
}

bool is_platonic_triple(const PlatonicTriple& t) {
  const auto [x, y, z] = t.entries;
  if (x < 1 || y < 1 || z < 1 || x < y || y < z) return false;
  if (z == 1) return true;                      // (x,y,1)
  if (y == 2 && z == 2) return true;            // (x,2,2)
  if (z == 2 && y == 3 && x >= 3 && x <= 5) return true;  // (5|4|3,3,2)
  return false;
}

std::string RationalityCase::to_string() const {
  auto idx = [&] {
    std::string s = "(";
    for (std::size_t i = 0; i < indices.size(); ++i)
      s += (i ? "," : "") + std::to_string(indices[i]);
    return s + ")";
  };
  switch (kind) {
    case RationalityKind::factorial:
      return "Factorial";
    case RationalityKind::single_pair:
      return "SinglePair" + idx();
    case RationalityKind::triple_of_twos:
      return "TripleOfTwos" + idx();
    case RationalityKind::not_rational:
      return "NotRational";
  }
  return "NotRational";
}

RationalityCase rationality_from_gcds(const std::vector<long long>& gcds,
                                      RingType type) {
  RationalityCase rc;
  if (type == RingType::type2) {
    std::vector<std::pair<std::size_t, std::size_t>> bad;
    bool all_twos = true;
    for (std::size_t i = 0; i < gcds.size(); ++i)
      for (std::size_t j = i + 1; j < gcds.size(); ++j) {
        long long g = std::gcd(gcds[i], gcds[j]);
        if (g > 1) {
          bad.emplace_back(i, j);
          all_twos = all_twos && g == 2;
        }
      }
    if (bad.empty()) {
      rc.kind = RationalityKind::factorial;
    } else if (bad.size() == 1) {
      rc.kind = RationalityKind::single_pair;
      rc.indices = {bad[0].first, bad[0].second};
    } else if (bad.size() == 3 && all_twos) {
      // The three pairs must form a triangle on three indices.
      std::vector<std::size_t> v = {bad[0].first,  bad[0].second,
                                    bad[1].first,  bad[1].second,
                                    bad[2].first,  bad[2].second};
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      if (v.size() == 3) {
        rc.kind = RationalityKind::triple_of_twos;
        rc.indices = v;
      }
    }
  } else {
    std::vector<std::size_t> big;
    for (std::size_t i = 0; i < gcds.size(); ++i)
      if (gcds[i] > 1) big.push_back(i);
    if (big.empty()) {
      rc.kind = RationalityKind::factorial;
    } else if (big.size() == 1) {
      rc.kind = RationalityKind::single_pair;
      rc.indices = big;
    } else if (big.size() == 2 && gcds[big[0]] == 2 && gcds[big[1]] == 2) {
      rc.kind = RationalityKind::triple_of_twos;
      rc.indices = big;
    }
  }
  return rc;
}

bool is_factorial(const RingDatum& d) {
  return rationality_case(d).kind == RationalityKind::factorial;
}

RationalityCase rationality_case(const RingDatum& d) {
  return rationality_from_gcds(block_gcds(d), d.type);
}

bool is_rational(const RingDatum& d) {
  return rationality_case(d).is_rational();
}

bool is_hyperplatonic(const RingDatum& d) {
  validate_datum(d);
  if (d.type != RingType::type2)
    throw WrongTypeError("hyperplatonicity is defined for Type 2 data");
  Rational sum = 0;
  for (long long g : block_gcds(d)) sum += Rational(1, static_cast<long>(g));
  return sum > Rational(static_cast<long>(d.r()) - 1);
}

PlatonicTriple basic_platonic_triple(const RingDatum& d) {
  if (!is_hyperplatonic(d))
    throw NotHyperplatonicError(
        "the basic platonic triple exists only for hyperplatonic data");
  std::vector<long long> nontrivial;
  for (long long g : block_gcds(d))
    if (g > 1) nontrivial.push_back(g);
  nontrivial.resize(3, 1);  // hyperplatonic: at most three gcds exceed 1
  return PlatonicTriple::sorted(nontrivial[0], nontrivial[1], nontrivial[2]);
}

bool admits_iteration(const RingDatum& d) {
  validate_datum(d);
  if (d.type == RingType::type2)
    return is_rational(d) && is_hyperplatonic(d);
  if (!is_rational(d)) return false;
  if (is_factorial(d)) return true;
  return is_rational(cox_step(d));
}

}  // namespace coxiter
