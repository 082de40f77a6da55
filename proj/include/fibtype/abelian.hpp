#pragma once

#include "fibtype/matrix.hpp"
#include "fibtype/polynomial.hpp"
#include "fibtype/presentation.hpp"
#include "fibtype/smith.hpp"

namespace fibtype {

/// Row i, column j = total exponent of x_j in relator i.
inline IntegerMatrix relation_matrix(const GeneralPresentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators.size()), p.generator_count);
  for (int i = 0; i < m.rows(); ++i)
    for (const Letter& l : p.relators[static_cast<std::size_t>(i)].letters)
      m(i, l.gen) += l.exp;
  return m;
}

/// n x n circulant matrix; row i = exponent sums of the i-th shifted relator.
inline IntegerMatrix relation_matrix(const CyclicPresentation& p) {
  return relation_matrix(to_general(p));
}

inline AbelianInvariants abelianization(const GeneralPresentation& p) {
  return smith_normal_form(relation_matrix(p)).invariants;
}

inline AbelianInvariants abelianization(const CyclicPresentation& p) {
  return smith_normal_form(relation_matrix(p)).invariants;
}

/// Independent oracle: |G_n(m,k)^ab| = |Res(t^n - 1, 1 + t^m - t^k)|,
/// with 0 encoding an infinite abelianization.
inline mpz_class abelian_order_via_resultant(const FibTypeParams& p) {
  IntPoly tn;  // t^n - 1
  tn.c.assign(static_cast<std::size_t>(p.n) + 1, 0);
  tn.c[0] = -1;
  tn.c[static_cast<std::size_t>(p.n)] = 1;
  IntPoly f = RepresenterPolynomial::for_params(p.m, p.k).dense();
  return resultant_magnitude(tn, f);
}

}  // namespace fibtype
