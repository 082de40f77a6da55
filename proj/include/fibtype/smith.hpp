#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fibtype/matrix.hpp"

namespace fibtype {

/// Canonical abelian invariants: torsion d_1 | d_2 | ... (each >= 2)
/// plus the free rank.
struct AbelianInvariants {
  std::vector<mpz_class> torsion;
  int free_rank = 0;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool is_finite() const { return free_rank == 0; }

  /// Group order; 0 encodes infinite.
  mpz_class order() const {
    if (free_rank > 0) return 0;
    mpz_class o = 1;
    for (const mpz_class& d : torsion) o *= d;
    return o;
  }
};

struct SmithResult {
  AbelianInvariants invariants;
  IntegerMatrix diagonal;
  std::optional<std::pair<IntegerMatrix, IntegerMatrix>> transforms;  // U, V
};

/// Smith normal form by elementary row/column operations, pivoting on a
/// minimal-absolute-value entry to limit growth. When with_transforms is
/// set, U*M*V == diagonal with det U, det V = +-1.
inline SmithResult smith_normal_form(const IntegerMatrix& m_in, bool with_transforms = false) {
  IntegerMatrix m = m_in;
  const int rows = m.rows(), cols = m.cols();
  IntegerMatrix u, v;
  if (with_transforms) {
    u = IntegerMatrix::identity(rows);
    v = IntegerMatrix::identity(cols);
  }

  auto row_op = [&](int a, int b, const mpz_class& f) {
    m.add_row(a, b, f);
    if (with_transforms) u.add_row(a, b, f);
  };
  auto col_op = [&](int a, int b, const mpz_class& f) {
    m.add_col(a, b, f);
    if (with_transforms) v.add_col(a, b, f);
  };

  int t = 0;
  const int limit = std::min(rows, cols);
  while (t < limit) {
    // locate a nonzero entry of minimal |value| in the trailing submatrix
    int pr = -1, pc = -1;
    mpz_class best;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (m(i, j) == 0) continue;
        mpz_class a = abs(m(i, j));
        if (pr < 0 || a < best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // submatrix is zero
    if (pr != t) {
      m.swap_rows(t, pr);
      if (with_transforms) u.swap_rows(t, pr);
    }
    if (pc != t) {
      m.swap_cols(t, pc);
      if (with_transforms) v.swap_cols(t, pc);
    }

    // one reduction pass against the pivot; on any nonzero remainder a
    // strictly smaller pivot candidate exists, so reselect globally rather
    // than iterating here (this keeps entry growth in check)
    bool remainder = false;
    for (int i = t + 1; i < rows; ++i) {
      if (m(i, t) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, t).get_mpz_t(), m(t, t).get_mpz_t());
      if (q != 0) row_op(i, t, -q);
      if (m(i, t) != 0) remainder = true;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (m(t, j) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m(t, j).get_mpz_t(), m(t, t).get_mpz_t());
      if (q != 0) col_op(j, t, -q);
      if (m(t, j) != 0) remainder = true;
    }
    if (remainder) continue;  // redo pivot selection at the same t

    // divisibility: pivot must divide every remaining entry
    bool fixed = false;
    for (int i = t + 1; i < rows && !fixed; ++i)
      for (int j = t + 1; j < cols && !fixed; ++j)
        if (m(i, j) % m(t, t) != 0) {
          row_op(t, i, 1);
          fixed = true;
        }
    if (fixed) continue;  // redo pivot at same t

    if (m(t, t) < 0) {
      m.negate_row(t);
      if (with_transforms) u.negate_row(t);
    }
    ++t;
  }

  SmithResult res;
  res.invariants.free_rank = cols - t;
  for (int i = 0; i < t; ++i)
    if (m(i, i) > 1) res.invariants.torsion.push_back(m(i, i));
  res.diagonal = std::move(m);
  if (with_transforms) res.transforms = std::make_pair(std::move(u), std::move(v));
  return res;
}

}  // namespace fibtype
