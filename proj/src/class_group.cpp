#include "coxiter/class_group.hpp"

#include <numeric>

#include "coxiter/criteria.hpp"
#include "coxiter/errors.hpp"

namespace coxiter {

AbelianGroupInvariants class_group(const RingDatum& d) {
  return cokernel_invariants(build_p0(d));
}

GradingData variable_degrees(const RingDatum& d) {
  const IntegerMatrix p0 = build_p0(d);
  const std::size_t vars = p0.cols();
  SmithResult snf = smith_normal_form(p0);

  // In the coordinates y = V^T x the row span of P0 becomes the span of the
  // diagonal, so coordinate i of y survives modulo d_i (free when d_i = 0).
  std::vector<std::size_t> free_pos, torsion_pos;
  std::vector<Int> factors;
  for (std::size_t i = 0; i < vars; ++i) {
    Int di = i < std::min(p0.rows(), p0.cols()) ? snf.d(i, i) : Int(0);
    if (di == 0) {
      free_pos.push_back(i);
    } else if (di > 1) {
      torsion_pos.push_back(i);
      factors.push_back(di);
    }
  }

  GradingData g;
  g.group.rank = free_pos.size();
  g.group.torsion = factors;

  auto degree_of = [&](std::size_t var) {
    std::vector<Int> deg;
    deg.reserve(free_pos.size() + torsion_pos.size());
    // y = V^T e_var is row `var` of V.
    for (std::size_t i : free_pos) deg.push_back(snf.v(var, i));
    for (std::size_t k = 0; k < torsion_pos.size(); ++k) {
      Int c;
      mpz_mod(c.get_mpz_t(), snf.v(var, torsion_pos[k]).get_mpz_t(),
              factors[k].get_mpz_t());
      deg.push_back(c);
    }
    return deg;
  };

  std::size_t col = 0;
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    for (std::size_t j = 0; j < d.blocks[i].size(); ++j, ++col)
      g.degrees.emplace_back(variable_label(d, i, j), degree_of(col));
  for (std::size_t k = 0; k < d.m; ++k, ++col)
    g.degrees.emplace_back("S" + std::to_string(k + 1), degree_of(col));
  return g;
}

IntegerMatrix torsion_free_cover(const RingDatum& d) {
  validate_datum(d);
  auto gcds = block_gcds(d);
  if (!rationality_from_gcds(gcds, d.type).is_rational())
    throw NotRationalError("torsion-free cover requires a rational datum");

  std::vector<std::size_t> offset(d.blocks.size());
  for (std::size_t i = 0, col = 0; i < d.blocks.size(); ++i) {
    offset[i] = col;
    col += d.blocks[i].size();
  }
  const std::size_t r = d.r();
  IntegerMatrix p1(r, d.n() + d.m);

  if (d.type == RingType::type2) {
    if (!is_gcd_ordered(d))
      throw NotGcdOrderedError("torsion-free cover requires gcd-ordering");
    const long long g01 = std::gcd(gcds[0], gcds[1]);
    const long long g02 = std::gcd(gcds[0], gcds[2]);
    for (std::size_t i = 1; i <= r; ++i) {
      const long long div = i == 1 ? g01 : i == 2 ? g02 : 1;
      for (std::size_t j = 0; j < d.blocks[0].size(); ++j)
        p1(i - 1, offset[0] + j) = Int(static_cast<long>(-(d.blocks[0][j] / div)));
      for (std::size_t j = 0; j < d.blocks[i].size(); ++j)
        p1(i - 1, offset[i] + j) = Int(static_cast<long>(d.blocks[i][j] / div));
    }
  } else {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < d.blocks[i].size(); ++j)
        p1(i, offset[i] + j) = Int(static_cast<long>(d.blocks[i][j] / gcds[i]));
  }
  return p1;
}

}  // namespace coxiter
