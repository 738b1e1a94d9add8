#include <doctest.h>

#include <random>

#include "coxiter/criteria.hpp"
#include "coxiter/errors.hpp"
#include "coxiter/ring_datum.hpp"
#include "fixtures.hpp"

using namespace coxiter;

TEST_CASE("validate_datum accepts valid data and rejects degenerate data") {
  RingDatum d = make_type2({{4}, {3}, {2}});
  d.coeff_columns = {{Rational(-1), Rational(0)},
                     {Rational(0), Rational(1)},
                     {Rational(1), Rational(1)}};
  CHECK_NOTHROW(validate_datum(d));

  RingDatum dep = make_type2({{4}, {3}, {2}});
  dep.coeff_columns[1] = {Rational(1), Rational(1)};
  dep.coeff_columns[2] = {Rational(2), Rational(2)};
  CHECK_THROWS_AS(validate_datum(dep), DegenerateCoefficientsError);

  RingDatum rep = make_type1({{2}, {2}});
  rep.coeff_values = {Rational(0), Rational(0)};
  CHECK_THROWS_AS(validate_datum(rep), DegenerateCoefficientsError);

  CHECK_THROWS_AS(validate_datum(make_type2({{4}, {3}})), TooFewBlocksError);
  CHECK_THROWS_AS(validate_datum(make_type2({{4}, {}, {2}})),
                  EmptyBlockError);
  CHECK_THROWS_AS(validate_datum(make_type2({{4}, {0}, {2}})),
                  NonpositiveExponentError);
}

TEST_CASE("build_p0 matrices") {
  CHECK(build_p0(make_type2({{2}, {2}, {2}})) ==
        IntegerMatrix{{-2, 2, 0}, {-2, 0, 2}});
  CHECK(build_p0(make_type1({{2}, {2}}, 1)) ==
        IntegerMatrix{{2, 0, 0}, {0, 2, 0}});
  CHECK(build_p0(make_type2({{1, 1}, {3}, {2}})) ==
        IntegerMatrix{{-1, -1, 3, 0}, {-1, -1, 0, 2}});
}

TEST_CASE("build_p0 column structure") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RingDatum d = fixtures::random_rational_type2(rng);
    IntegerMatrix p0 = build_p0(d);
    CHECK(p0.cols() == d.n() + d.m);
    // Trailing m columns vanish.
    for (std::size_t k = 0; k < d.m; ++k)
      for (std::size_t i = 0; i < p0.rows(); ++i)
        CHECK(p0(i, d.n() + k) == 0);
    // Block 0 columns carry -l_0j in every row; block i >= 1 columns carry
    // l_ij in row i-1 and zero elsewhere.
    std::size_t col = 0;
    for (std::size_t j = 0; j < d.blocks[0].size(); ++j, ++col)
      for (std::size_t i = 0; i < p0.rows(); ++i)
        CHECK(p0(i, col) == Int(static_cast<long>(-d.blocks[0][j])));
    for (std::size_t b = 1; b < d.blocks.size(); ++b)
      for (std::size_t j = 0; j < d.blocks[b].size(); ++j, ++col)
        for (std::size_t i = 0; i < p0.rows(); ++i)
          CHECK(p0(i, col) ==
                Int(static_cast<long>(i == b - 1 ? d.blocks[b][j] : 0)));
  }
}

TEST_CASE("block gcds") {
  CHECK(block_gcds(make_type2({{4}, {3}, {2}})) ==
        std::vector<long long>{4, 3, 2});
  CHECK(block_gcds(make_type2({{2, 4}, {6, 9}, {5}})) ==
        std::vector<long long>{2, 3, 5});
  CHECK(block_gcds(make_type1({{7, 7, 7}, {1}})) ==
        std::vector<long long>{7, 1});
}

TEST_CASE("render_relations") {
  RingDatum t1 = make_type1({{2}, {2}});  // a = (0, 1)
  CHECK(render_relations(t1) == std::vector<std::string>{"T11^2 - T21^2 - 1"});

  RingDatum t2 = make_type2({{1}, {1}, {1}});
  t2.coeff_columns = {{Rational(1), Rational(0)},
                      {Rational(0), Rational(1)},
                      {Rational(-1), Rational(-1)}};
  auto rels = render_relations(t2);
  REQUIRE(rels.size() == 1);
  CHECK(rels[0] == "T01 + T11 + T21");

  // r = 2 always yields exactly one relation.
  CHECK(render_relations(make_type2({{4}, {3}, {2}})).size() == 1);
  // r = 4 yields three.
  CHECK(render_relations(make_type2({{4}, {3}, {2}, {1}, {1}})).size() == 3);

  RingDatum multi = make_type1({{2, 3}, {4}});
  CHECK(render_relations(multi) ==
        std::vector<std::string>{"T11^2*T12^3 - T21^4 - 1"});
}

TEST_CASE("is_gcd_ordered") {
  CHECK(is_gcd_ordered(make_type2({{4}, {3}, {2}})));
  CHECK_FALSE(is_gcd_ordered(make_type2({{9}, {5}, {4}, {2}})));
  CHECK(is_gcd_ordered(make_type2({{2}, {2}, {2}})));
  CHECK_THROWS_AS(is_gcd_ordered(make_type1({{2}, {2}})), WrongTypeError);
  CHECK_THROWS_AS(is_gcd_ordered(make_type2({{6}, {10}, {15}})),
                  NotRationalError);
}

TEST_CASE("gcd_order reorders deterministically") {
  auto r = gcd_order(make_type2({{9}, {5}, {4}, {2}}));
  CHECK(block_gcds(r.datum) == std::vector<long long>{4, 2, 9, 5});
  CHECK(r.permutation == std::vector<std::size_t>{2, 3, 0, 1});
  CHECK(is_gcd_ordered(r.datum));

  auto stable = gcd_order(make_type2({{2}, {2}, {2}, {1}}));
  CHECK(block_gcds(stable.datum) == std::vector<long long>{2, 2, 2, 1});

  auto swapped = gcd_order(make_type2({{1}, {1}, {3}, {3}}));
  CHECK(block_gcds(swapped.datum) == std::vector<long long>{3, 3, 1, 1});
}

TEST_CASE("gcd_order is idempotent and permutes coefficients in lockstep") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    RingDatum d = fixtures::random_rational_type2(rng);
    auto r = gcd_order(d);
    CHECK(is_gcd_ordered(r.datum));
    for (std::size_t k = 0; k < r.permutation.size(); ++k) {
      CHECK(r.datum.blocks[k] == d.blocks[r.permutation[k]]);
      CHECK(r.datum.coeff_columns[k] == d.coeff_columns[r.permutation[k]]);
    }
    auto again = gcd_order(r.datum);
    CHECK(again.datum == r.datum);
  }
}
