#include <doctest.h>

#include <algorithm>
#include <random>

#include "coxiter/criteria.hpp"
#include "coxiter/errors.hpp"
#include "fixtures.hpp"

using namespace coxiter;

TEST_CASE("is_factorial") {
  CHECK(is_factorial(make_type2({{5}, {3}, {2}})));
  CHECK_FALSE(is_factorial(make_type2({{4}, {3}, {2}})));
  CHECK(is_factorial(make_type1({{1}, {1}, {1}})));
  CHECK_FALSE(is_factorial(make_type1({{2}, {1}})));
}

TEST_CASE("rationality_case") {
  auto rc = rationality_case(make_type2({{4}, {3}, {2}}));
  CHECK(rc.kind == RationalityKind::single_pair);
  CHECK(rc.indices == std::vector<std::size_t>{0, 2});

  auto rt = rationality_case(make_type2({{2}, {2}, {2}}));
  CHECK(rt.kind == RationalityKind::triple_of_twos);
  CHECK(rt.indices == std::vector<std::size_t>{0, 1, 2});

  CHECK(rationality_case(make_type2({{6}, {10}, {15}})).kind ==
        RationalityKind::not_rational);

  auto t1 = rationality_case(make_type1({{3}, {1}}));
  CHECK(t1.kind == RationalityKind::single_pair);
  CHECK(t1.indices == std::vector<std::size_t>{0});

  auto t1b = rationality_case(make_type1({{2}, {1}, {2}}));
  CHECK(t1b.kind == RationalityKind::triple_of_twos);
  CHECK(t1b.indices == std::vector<std::size_t>{0, 2});

  CHECK(rationality_case(make_type1({{2}, {3}})).kind ==
        RationalityKind::not_rational);
}

TEST_CASE("is_rational") {
  CHECK(is_rational(make_type2({{2}, {2}, {2}})));
  CHECK_FALSE(is_rational(make_type2({{6}, {10}, {15}})));
  CHECK(is_rational(make_type1({{1}, {1}, {1}})));
}

TEST_CASE("is_hyperplatonic uses exact arithmetic") {
  CHECK(is_hyperplatonic(make_type2({{2}, {2}, {2}})));
  CHECK_FALSE(is_hyperplatonic(make_type2({{3}, {3}, {3}})));  // boundary
  CHECK(is_hyperplatonic(make_type2({{2}, {2}, {2}, {1}})));
  CHECK_THROWS_AS(is_hyperplatonic(make_type1({{2}, {2}})), WrongTypeError);
}

TEST_CASE("basic_platonic_triple") {
  CHECK(basic_platonic_triple(make_type2({{4}, {3}, {2}})) ==
        PlatonicTriple{{4, 3, 2}});
  CHECK(basic_platonic_triple(make_type2({{6}, {2}, {1}, {1}})) ==
        PlatonicTriple{{6, 2, 1}});
  CHECK(basic_platonic_triple(make_type2({{1}, {1}, {1}, {1}})) ==
        PlatonicTriple{{1, 1, 1}});
  CHECK_THROWS_AS(basic_platonic_triple(make_type2({{3}, {3}, {3}})),
                  NotHyperplatonicError);
}

TEST_CASE("is_platonic_triple") {
  CHECK(is_platonic_triple(PlatonicTriple{{5, 3, 2}}));
  CHECK(is_platonic_triple(PlatonicTriple{{4, 3, 2}}));
  CHECK(is_platonic_triple(PlatonicTriple{{3, 3, 2}}));
  CHECK(is_platonic_triple(PlatonicTriple{{17, 2, 2}}));
  CHECK(is_platonic_triple(PlatonicTriple{{9, 4, 1}}));
  CHECK(is_platonic_triple(PlatonicTriple{{1, 1, 1}}));
  CHECK_FALSE(is_platonic_triple(PlatonicTriple{{4, 4, 2}}));
  CHECK_FALSE(is_platonic_triple(PlatonicTriple{{6, 3, 2}}));
  CHECK_FALSE(is_platonic_triple(PlatonicTriple{{3, 3, 3}}));
}

TEST_CASE("admits_iteration") {
  CHECK(admits_iteration(make_type2({{4}, {3}, {2}})));
  CHECK(admits_iteration(make_type2({{6}, {6}, {1}})));
  CHECK_FALSE(admits_iteration(make_type2({{3}, {3}, {3}})));
  CHECK(admits_iteration(make_type1({{2}, {2}})));
  CHECK(admits_iteration(make_type1({{6}, {1}})));
  CHECK_FALSE(admits_iteration(make_type1({{2}, {3}})));
}

TEST_CASE("factorial implies rational; hyperplatonic implies rational") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    RingDatum d = fixtures::random_rational_type2(rng);
    if (is_factorial(d)) CHECK(is_rational(d));
    RingDatum h = fixtures::random_hyperplatonic_type2(rng);
    CHECK(is_hyperplatonic(h));
    CHECK(is_rational(h));
    CHECK(is_platonic_triple(basic_platonic_triple(h)));
  }
}

TEST_CASE("rationality case is stable under block permutation") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    RingDatum d = fixtures::random_rational_type2(rng);
    auto base = rationality_case(d).kind;
    RingDatum shuffled = d;
    std::vector<std::size_t> perm(d.blocks.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t k = 0; k < perm.size(); ++k) {
      shuffled.blocks[k] = d.blocks[perm[k]];
      shuffled.coeff_columns[k] = d.coeff_columns[perm[k]];
    }
    CHECK(rationality_case(shuffled).kind == base);
  }
}
