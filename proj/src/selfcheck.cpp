#include "coxiter/selfcheck.hpp"

#include <random>

#include "coxiter/class_group.hpp"
#include "coxiter/criteria.hpp"
#include "coxiter/iteration.hpp"
#include "coxiter/normal_form.hpp"
#include "coxiter/ring_datum.hpp"

namespace coxiter {

namespace {

bool snf_matches_minor_gcds(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
    SmithResult snf = smith_normal_form(m);
    Int product = 1;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
      product *= snf.d(k - 1, k - 1);
      Int dd = determinantal_divisor(m, k);
      if (dd != 0 && product != dd) return false;
      if (dd == 0 && product != 0) return false;
    }
  }
  return true;
}

bool worked_class_groups() {
  AbelianGroupInvariants expected{1, {Int(2), Int(2)}};
  if (class_group(make_type2({{2}, {2}, {2}})) != expected) return false;
  AbelianGroupInvariants free_group{1, {}};
  return class_group(make_type2({{1}, {1}, {1}})) == free_group;
}

bool transition_table_fixtures() {
  for (auto blocks : {std::vector<ExponentBlock>{{4}, {3}, {2}},
                      std::vector<ExponentBlock>{{3}, {3}, {2}, {1}},
                      std::vector<ExponentBlock>{{6}, {4}, {1}},
                      std::vector<ExponentBlock>{{2, 4}, {2}, {2}}}) {
    RingDatum d = make_type2(blocks);
    auto predicted = predicted_step_multiset(basic_platonic_triple(d), d);
    RingDatum next = cox_step(d);
    std::multiset<ExponentBlock> actual(next.blocks.begin(),
                                        next.blocks.end());
    if (predicted != actual) return false;
  }
  return true;
}

bool chain_fixtures() {
  IterationChain chain = iterate_chain(make_type2({{4}, {3}, {2}}));
  if (classify_chain(chain).kind != ChainFamilyKind::family_i) return false;
  if (chain.steps.size() != 4) return false;
  IterationChain t1 = iterate_chain(make_type1({{2}, {2}}));
  if (t1.steps.size() != 2 || !is_factorial(t1.steps.back().datum))
    return false;
  return classify_chain(t1).kind == ChainFamilyKind::type1_single_step;
}

bool embedding_fixtures() {
  for (auto blocks : {std::vector<ExponentBlock>{{2}, {2}},
                      std::vector<ExponentBlock>{{2}, {3}},
                      std::vector<ExponentBlock>{{6}, {1}, {1}},
                      std::vector<ExponentBlock>{{2}, {2}, {1}}}) {
    RingDatum d = make_type1(blocks);
    if (is_rational(d) != is_rational(type1_to_type2(d))) return false;
  }
  return true;
}

}  // namespace

bool run_selfcheck(std::ostream& out) {
  std::mt19937 rng(20240817);
  bool ok = true;
  auto report = [&](const char* name, bool pass) {
    out << (pass ? "PASS " : "FAIL ") << name << "\n";
    ok = ok && pass;
  };
  report("smith normal form vs minor-gcd oracle", snf_matches_minor_gcds(rng));
  report("worked class groups", worked_class_groups());
  report("transition table fixtures", transition_table_fixtures());
  report("iteration chain fixtures", chain_fixtures());
  report("type 1 embedding rationality transfer", embedding_fixtures());
  return ok;
}

}  // namespace coxiter
