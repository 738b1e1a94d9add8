#include "coxiter/ring_datum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coxiter/criteria.hpp"
#include "coxiter/errors.hpp"

namespace coxiter {

std::size_t RingDatum::n() const {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  return total;
}

RingDatum make_type2(std::vector<ExponentBlock> blocks, std::size_t m) {
  RingDatum d;
  d.type = RingType::type2;
  d.blocks = std::move(blocks);
  d.m = m;
  d.coeff_columns.reserve(d.blocks.size());
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    if (i == 0)
      d.coeff_columns.push_back({Rational(1), Rational(0)});
    else if (i == 1)
      d.coeff_columns.push_back({Rational(0), Rational(1)});
    else
      d.coeff_columns.push_back(
          {Rational(1), Rational(static_cast<long>(i) - 1)});
  }
  return d;
}

RingDatum make_type1(std::vector<ExponentBlock> blocks, std::size_t m) {
  RingDatum d;
  d.type = RingType::type1;
  d.blocks = std::move(blocks);
  d.m = m;
  d.coeff_values.reserve(d.blocks.size());
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    d.coeff_values.emplace_back(static_cast<long>(i));
  return d;
}

const RingDatum& validate_datum(const RingDatum& d) {
  const std::size_t min_blocks = d.type == RingType::type2 ? 3 : 2;
  if (d.blocks.size() < min_blocks)
    throw TooFewBlocksError("expected at least " +
                            std::to_string(min_blocks) + " blocks, got " +
                            std::to_string(d.blocks.size()));
  for (const auto& block : d.blocks) {
    if (block.empty()) throw EmptyBlockError("empty exponent block");
    for (long long e : block)
      if (e < 1)
        throw NonpositiveExponentError("exponent " + std::to_string(e) +
                                       " is not positive");
  }
  if (d.type == RingType::type2) {
    if (d.coeff_columns.size() != d.blocks.size())
      throw DegenerateCoefficientsError(
          "coefficient column count does not match block count");
    for (std::size_t i = 0; i < d.coeff_columns.size(); ++i)
      for (std::size_t j = i + 1; j < d.coeff_columns.size(); ++j) {
        const auto& a = d.coeff_columns[i];
        const auto& b = d.coeff_columns[j];
        if (a[0] * b[1] - a[1] * b[0] == 0)
          throw DegenerateCoefficientsError(
              "coefficient columns " + std::to_string(i) + " and " +
              std::to_string(j) + " are linearly dependent");
      }
  } else {
    if (d.coeff_values.size() != d.blocks.size())
      throw DegenerateCoefficientsError(
          "coefficient count does not match block count");
    for (std::size_t i = 0; i < d.coeff_values.size(); ++i)
      for (std::size_t j = i + 1; j < d.coeff_values.size(); ++j)
        if (d.coeff_values[i] == d.coeff_values[j])
          throw DegenerateCoefficientsError(
              "coefficients " + std::to_string(i) + " and " +
              std::to_string(j) + " coincide");
  }
  return d;
}

IntegerMatrix build_p0(const RingDatum& d) {
  validate_datum(d);
  const std::size_t r = d.r();
  IntegerMatrix p0(r, d.n() + d.m);
  // Column offsets of each block.
  std::vector<std::size_t> offset(d.blocks.size());
  for (std::size_t i = 0, col = 0; i < d.blocks.size(); ++i) {
    offset[i] = col;
    col += d.blocks[i].size();
  }
  if (d.type == RingType::type2) {
    // Row i (1-based): -l_0 in block 0, l_i in block i.
    for (std::size_t i = 1; i <= r; ++i) {
      for (std::size_t j = 0; j < d.blocks[0].size(); ++j)
        p0(i - 1, offset[0] + j) = Int(static_cast<long>(-d.blocks[0][j]));
      for (std::size_t j = 0; j < d.blocks[i].size(); ++j)
        p0(i - 1, offset[i] + j) = Int(static_cast<long>(d.blocks[i][j]));
    }
  } else {
    // Block diagonal: row i holds l_i in block i.
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < d.blocks[i].size(); ++j)
        p0(i, offset[i] + j) = Int(static_cast<long>(d.blocks[i][j]));
  }
  return p0;
}

std::vector<long long> block_gcds(const RingDatum& d) {
  validate_datum(d);
  std::vector<long long> gcds;
  gcds.reserve(d.blocks.size());
  for (const auto& block : d.blocks) {
    long long g = 0;
    for (long long e : block) g = std::gcd(g, e);
    gcds.push_back(g);
  }
  return gcds;
}

std::string variable_label(const RingDatum& d, std::size_t block,
                           std::size_t j) {
  const std::size_t display = d.type == RingType::type2 ? block : block + 1;
  return "T" + std::to_string(display) + std::to_string(j + 1);
}

namespace {

std::string render_monomial(const RingDatum& d, std::size_t block) {
  std::string s;
  for (std::size_t j = 0; j < d.blocks[block].size(); ++j) {
    if (j) s += "*";
    s += variable_label(d, block, j);
    if (d.blocks[block][j] > 1)
      s += "^" + std::to_string(d.blocks[block][j]);
  }
  return s;
}

// Appends "c * monomial" to the running sum string.
void append_term(std::string& s, const Rational& c, const std::string& mono) {
  if (c == 0) return;
  Rational a = abs(c);
  if (s.empty())
    s += c < 0 ? "-" : "";
  else
    s += c < 0 ? " - " : " + ";
  if (a != 1) s += a.get_str() + "*";
  s += mono;
}

}  // namespace

std::vector<std::string> render_relations(const RingDatum& d) {
  validate_datum(d);
  std::vector<std::string> out;
  const std::size_t relations = d.r() - 1;
  out.reserve(relations);
  for (std::size_t i = 0; i < relations; ++i) {
    std::string s;
    if (d.type == RingType::type1) {
      // g_i = T_i^{l_i} - T_{i+1}^{l_{i+1}} - (a_{i+1} - a_i)
      s = render_monomial(d, i) + " - " + render_monomial(d, i + 1);
      Rational c = d.coeff_values[i + 1] - d.coeff_values[i];
      s += c > 0 ? " - " + Rational(abs(c)).get_str()
                 : " + " + Rational(abs(c)).get_str();
    } else {
      // Cofactor expansion of the 3x3 determinant along the monomial row.
      auto det2 = [&](std::size_t a, std::size_t b) -> Rational {
        return d.coeff_columns[a][0] * d.coeff_columns[b][1] -
               d.coeff_columns[a][1] * d.coeff_columns[b][0];
      };
      append_term(s, det2(i + 1, i + 2), render_monomial(d, i));
      append_term(s, -det2(i, i + 2), render_monomial(d, i + 1));
      append_term(s, det2(i, i + 1), render_monomial(d, i + 2));
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool is_gcd_ordered(const RingDatum& d) {
  validate_datum(d);
  if (d.type != RingType::type2)
    throw WrongTypeError("gcd-ordering is defined for Type 2 data");
  auto gcds = block_gcds(d);
  if (!rationality_from_gcds(gcds, d.type).is_rational())
    throw NotRationalError("gcd-ordering requires a rational datum");
  for (std::size_t j = 3; j < gcds.size(); ++j)
    for (std::size_t i = 0; i < gcds.size(); ++i)
      if (i != j && std::gcd(gcds[i], gcds[j]) != 1) return false;
  const long long g12 = std::gcd(gcds[1], gcds[2]);
  const long long g012 = std::gcd(gcds[0], g12);
  return g12 == g012;
}

GcdOrderResult gcd_order(const RingDatum& d) {
  validate_datum(d);
  if (d.type != RingType::type2)
    throw WrongTypeError("gcd-ordering is defined for Type 2 data");
  auto gcds = block_gcds(d);
  auto rc = rationality_from_gcds(gcds, d.type);
  if (!rc.is_rational())
    throw NotRationalError("cannot gcd-order a non-rational datum");

  const auto by_gcd_desc = [&](std::size_t a, std::size_t b) {
    return gcds[a] != gcds[b] ? gcds[a] > gcds[b] : a < b;
  };
  std::vector<std::size_t> front(rc.indices), rest;
  std::sort(front.begin(), front.end(), by_gcd_desc);
  for (std::size_t i = 0; i < gcds.size(); ++i)
    if (std::find(front.begin(), front.end(), i) == front.end())
      rest.push_back(i);
  std::sort(rest.begin(), rest.end(), by_gcd_desc);

  GcdOrderResult result;
  result.permutation = std::move(front);
  result.permutation.insert(result.permutation.end(), rest.begin(),
                            rest.end());
  result.datum = d;
  for (std::size_t k = 0; k < result.permutation.size(); ++k) {
    result.datum.blocks[k] = d.blocks[result.permutation[k]];
    result.datum.coeff_columns[k] = d.coeff_columns[result.permutation[k]];
  }
  if (!is_gcd_ordered(result.datum))
    throw std::logic_error("gcd_order produced a non-gcd-ordered datum");
  return result;
}

}  // namespace coxiter
