#include "coxiter/normal_form.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace coxiter {

namespace {

// Floor division quotient, so that a - q*b lies in [0, |b|).
Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Rounded division quotient, so that |a - q*b| <= |b|/2.
Int round_div(const Int& a, const Int& b) {
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * abs(r) > abs(b)) q += 1;
  return q;
}

struct Pivot {
  std::size_t row, col;
};

// Nonzero entry of minimal |value| in the trailing submatrix starting at
// (t, t); ties by smallest row, then column.
std::optional<Pivot> min_abs_pivot(const IntegerMatrix& a, std::size_t t) {
  std::optional<Pivot> best;
  Int best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = Pivot{i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

HermiteResult hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    // Eliminate below (pivot_row, col) with gcd steps.
    while (true) {
      std::size_t best = h.rows();
      Int best_abs;
      for (std::size_t i = pivot_row; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Int v = abs(h(i, col));
        if (best == h.rows() || v < best_abs) {
          best = i;
          best_abs = v;
        }
      }
      if (best == h.rows()) break;  // column is zero from pivot_row down
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool clean = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Int q = round_div(h(i, col), h(pivot_row, col));
        h.add_row_multiple(i, pivot_row, -q);
        u.add_row_multiple(i, pivot_row, -q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = floor_div(h(i, col), h(pivot_row, col));
      if (q != 0) {
        h.add_row_multiple(i, pivot_row, -q);
        u.add_row_multiple(i, pivot_row, -q);
      }
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

SmithResult smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t bound = std::min(d.rows(), d.cols());
  for (std::size_t t = 0; t < bound; ++t) {
    while (true) {
      auto p = min_abs_pivot(d, t);
      if (!p) break;
      d.swap_rows(t, p->row);
      u.swap_rows(t, p->row);
      d.swap_cols(t, p->col);
      v.swap_cols(t, p->col);
      bool dirty = false;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = round_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = round_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Row and column t are clear; enforce that the pivot divides the
      // rest of the submatrix, which yields the divisibility chain.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < d.rows() && divides_all; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    if (d(t, t) == 0) break;  // trailing submatrix is zero
  }
  return {std::move(d), std::move(u), std::move(v)};
}

AbelianGroupInvariants cokernel_invariants(const IntegerMatrix& m) {
  AbelianGroupInvariants g;
  if (m.rows() == 0 || m.cols() == 0) {
    g.rank = m.cols();
    return g;
  }
  SmithResult snf = smith_normal_form(m);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
    const Int& di = snf.d(i, i);
    if (di == 0) break;
    ++nonzero;
    if (di > 1) g.torsion.push_back(di);
  }
  g.rank = m.cols() - nonzero;
  return g;
}

Int determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntegerMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && a(s, k) == 0) ++s;
      if (s == n) return 0;
      a.swap_rows(k, s);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

namespace {

// Visits all k-subsets of {0, ..., n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

Int determinantal_divisor(const IntegerMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols()))
    throw std::out_of_range("minor size out of range");
  Int g = 0;
  auto rows = first_combination(k);
  do {
    auto cols = first_combination(k);
    do {
      IntegerMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      g = gcd(g, determinant(sub));
      if (g == 1) return g;
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  return g;
}

}  // namespace coxiter
