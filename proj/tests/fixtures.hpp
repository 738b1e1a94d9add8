#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "coxiter/criteria.hpp"
#include "coxiter/integer_matrix.hpp"
#include "coxiter/ring_datum.hpp"

namespace coxiter::fixtures {

inline IntegerMatrix random_matrix(std::mt19937& rng, int max_dim = 6,
                                   int max_abs = 9) {
  std::uniform_int_distribution<int> dim(1, max_dim), entry(-max_abs, max_abs);
  IntegerMatrix m(dim(rng), dim(rng));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
  return m;
}

// Blocks whose entry gcds realize the target values: first entry is the
// gcd itself, further entries are small multiples.
inline std::vector<ExponentBlock> blocks_with_gcds(
    std::mt19937& rng, const std::vector<long long>& gcds,
    long long entry_cap = 100) {
  std::uniform_int_distribution<int> size(1, 3);
  std::vector<ExponentBlock> blocks;
  for (long long g : gcds) {
    ExponentBlock b{g};
    const long long max_mult = std::max<long long>(1, entry_cap / g);
    std::uniform_int_distribution<long long> mult(1, std::min<long long>(4, max_mult));
    for (int extra = size(rng) - 1; extra > 0; --extra)
      b.push_back(g * mult(rng));
    std::shuffle(b.begin(), b.end(), rng);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

// Draws distinct primes from a fixed pool.
class PrimePool {
 public:
  explicit PrimePool(std::mt19937& rng) : rng_(rng) {
    pool_ = {2, 3, 5, 7, 11, 13};
    std::shuffle(pool_.begin(), pool_.end(), rng);
  }
  long long take() {
    long long p = pool_.back();
    pool_.pop_back();
    return p;
  }
  long long take_odd() {
    for (std::size_t i = pool_.size(); i-- > 0;)
      if (pool_[i] % 2 == 1) {
        long long p = pool_[i];
        pool_.erase(pool_.begin() + i);
        return p;
      }
    return 1;
  }
  bool maybe(double p = 0.5) {
    return std::bernoulli_distribution(p)(rng_);
  }

 private:
  std::mt19937& rng_;
  std::vector<long long> pool_;
};

// Random rational Type 2 datum (any of the three rationality cases).
inline RingDatum random_rational_type2(std::mt19937& rng) {
  std::uniform_int_distribution<int> rdist(2, 5), mdist(0, 2), cas(0, 2);
  const int r = rdist(rng);
  std::vector<long long> gcds(r + 1, 1);
  PrimePool pool(rng);
  switch (cas(rng)) {
    case 0:  // factorial: pairwise coprime
      for (auto& g : gcds)
        if (pool.maybe()) g = pool.take();
      break;
    case 1: {  // exactly one non-coprime pair
      std::vector<std::size_t> idx(gcds.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      long long g = pool.take();
      gcds[idx[0]] = g * (pool.maybe(0.3) ? pool.take() : 1);
      gcds[idx[1]] = g * (pool.maybe(0.3) ? pool.take() : 1);
      // A third non-trivial block is only sound for pair gcds >= 5: the
      // iterated ring then holds g mutually non-coprime copies of it.
      if (g >= 5 && idx.size() > 2 && pool.maybe(0.3))
        gcds[idx[2]] = pool.take();
      break;
    }
    default: {  // three mutually even blocks, pairwise gcd exactly 2
      std::vector<std::size_t> idx(gcds.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      for (int k = 0; k < 3; ++k)
        gcds[idx[k]] = 2 * (pool.maybe(0.3) ? pool.take_odd() : 1);
      if (idx.size() > 3 && pool.maybe(0.3)) gcds[idx[3]] = pool.take_odd();
      break;
    }
  }
  return make_type2(blocks_with_gcds(rng, gcds), mdist(rng));
}

// Random hyperplatonic non-factorial Type 2 datum, blocks table-ordered
// (triple at indices 0, 1, 2, remaining gcds 1), entries <= 12.
inline RingDatum random_hyperplatonic_type2(std::mt19937& rng) {
  std::uniform_int_distribution<int> rdist(2, 5), mdist(0, 2), fam(0, 3);
  std::uniform_int_distribution<long long> xdist(2, 12);
  std::array<long long, 3> triple;
  switch (fam(rng)) {
    case 0:
      triple = {4, 3, 2};
      break;
    case 1:
      triple = {3, 3, 2};
      break;
    case 2:
      triple = {xdist(rng), 2, 2};
      break;
    default: {
      long long g = std::uniform_int_distribution<long long>(2, 6)(rng);
      long long a = std::uniform_int_distribution<long long>(1, 12 / g)(rng);
      long long b = std::uniform_int_distribution<long long>(1, a)(rng);
      triple = {g * a, g * b, 1};
      std::sort(triple.begin(), triple.begin() + 2, std::greater<>());
      break;
    }
  }
  const int r = rdist(rng);
  std::vector<long long> gcds(r + 1, 1);
  for (int k = 0; k < 3 && k <= r; ++k) gcds[k] = triple[k];
  return make_type2(blocks_with_gcds(rng, gcds, 12), mdist(rng));
}

// Random rational Type 1 datum.
inline RingDatum random_rational_type1(std::mt19937& rng) {
  std::uniform_int_distribution<int> rdist(2, 5), mdist(0, 2), cas(0, 2);
  const int r = rdist(rng);
  std::vector<long long> gcds(r, 1);
  std::vector<std::size_t> idx(gcds.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  switch (cas(rng)) {
    case 0:
      break;  // factorial
    case 1:
      gcds[idx[0]] = std::uniform_int_distribution<long long>(2, 12)(rng);
      break;
    default:
      gcds[idx[0]] = 2;
      gcds[idx[1]] = 2;
      break;
  }
  return make_type1(blocks_with_gcds(rng, gcds), mdist(rng));
}

}  // namespace coxiter::fixtures
