#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "fibtype/abelian.hpp"

using namespace fibtype;

namespace {

/// Oracle for the resultant, independent of the pseudo-remainder route:
/// determinant of the Sylvester matrix, computed by Bareiss elimination.
mpz_class sylvester_resultant_abs(const IntPoly& a, const IntPoly& b) {
  int da = a.degree(), db = b.degree();
  if (da < 0 || db < 0) return 0;
  IntegerMatrix s(da + db, da + db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j)
      s(i, i + j) = a.c[static_cast<std::size_t>(da - j)];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j)
      s(db + i, i + j) = b.c[static_cast<std::size_t>(db - j)];
  return abs(s.determinant());
}

mpz_class pow2(int e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

}  // namespace

TEST_CASE("relation matrix of a cyclic presentation is circulant") {
  IntegerMatrix m = relation_matrix(make_fib_presentation(FibTypeParams::make(4, 1, 2)));
  REQUIRE(m.rows() == 4);
  REQUIRE(m.cols() == 4);
  // row 0: x0 x1 X2 -> (1, 1, -1, 0); each following row is shifted by one
  for (int i = 0; i < 4; ++i) {
    REQUIRE(m(i, i) == 1);
    REQUIRE(m(i, (i + 1) % 4) == 1);
    REQUIRE(m(i, (i + 2) % 4) == -1);
    REQUIRE(m(i, (i + 3) % 4) == 0);
  }
}

TEST_CASE("exponent sums collapse repeated generators") {
  GeneralPresentation p{2, {parse_word("x0 x1 x0 X1 X1", 2)}};
  IntegerMatrix m = relation_matrix(p);
  REQUIRE(m(0, 0) == 2);
  REQUIRE(m(0, 1) == -1);
}

TEST_CASE("resultant route matches the Sylvester determinant on the family") {
  for (int n = 1; n <= 12; ++n)
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) {
        FibTypeParams p = FibTypeParams::make(n, m, k);
        IntPoly tn;
        tn.c.assign(static_cast<std::size_t>(n) + 1, 0);
        tn.c[0] = -1;
        tn.c[static_cast<std::size_t>(n)] = 1;
        IntPoly f = RepresenterPolynomial::for_params(p.m, p.k).dense();
        REQUIRE(abelian_order_via_resultant(p) == sylvester_resultant_abs(tn, f));
      }
}

TEST_CASE("resultant route matches the Sylvester determinant on random polynomials") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> deg(1, 7), coeff(-5, 5);
  int done = 0;
  while (done < 300) {
    IntPoly a, b;
    a.c.assign(static_cast<std::size_t>(deg(rng)) + 1, 0);
    b.c.assign(static_cast<std::size_t>(deg(rng)) + 1, 0);
    for (mpz_class& x : a.c) x = coeff(rng);
    for (mpz_class& x : b.c) x = coeff(rng);
    a.trim();
    b.trim();
    if (a.degree() < 1 || b.degree() < 1) continue;
    ++done;
    REQUIRE(resultant_magnitude(a, b) == sylvester_resultant_abs(a, b));
  }
}

TEST_CASE("abelianization order agrees with the resultant for random parameters") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> nd(1, 30);
  for (int trial = 0; trial < 500; ++trial) {
    int n = nd(rng);
    std::uniform_int_distribution<int> md(0, n - 1);
    FibTypeParams p = FibTypeParams::make(n, md(rng), md(rng));
    AbelianInvariants inv = abelianization(make_fib_presentation(p));
    REQUIRE(inv.order() == abelian_order_via_resultant(p));
  }
}

TEST_CASE("k=0 abelianizations are cyclic of order 2^n - 1") {
  for (int n = 2; n <= 12; ++n) {
    AbelianInvariants inv =
        abelianization(make_fib_presentation(FibTypeParams::make(n, 0, 1)));
    REQUIRE(inv.free_rank == 0);
    REQUIRE(inv.torsion == std::vector<mpz_class>{pow2(n) - 1});
  }
}

TEST_CASE("known abelianizations of small members of the family") {
  // G_9(3,1): cyclic of order 7
  REQUIRE(abelianization(make_fib_presentation(FibTypeParams::make(9, 3, 1))).torsion ==
          std::vector<mpz_class>{7});
  // G_5(1,2): cyclic of order 11
  REQUIRE(abelianization(make_fib_presentation(FibTypeParams::make(5, 1, 2))).torsion ==
          std::vector<mpz_class>{11});
  // G_7(1,2): cyclic of order 29
  REQUIRE(abelianization(make_fib_presentation(FibTypeParams::make(7, 1, 2))).torsion ==
          std::vector<mpz_class>{29});
  // G_6(1,2) abelianizes to Z_4 x Z_4
  REQUIRE(abelianization(make_fib_presentation(FibTypeParams::make(6, 1, 2))).torsion ==
          std::vector<mpz_class>{4, 4});
  // G_n(1,1) = trivial word shape x0 x1 x1^{-1}: infinite cyclic? no:
  // relator reduces to x0, so the group is trivial
  REQUIRE(abelianization(make_fib_presentation(FibTypeParams::make(4, 1, 1)))
              .is_trivial());
}

TEST_CASE("generator elimination preserves the abelianization") {
  for (int n = 4; n <= 24; n += 2) {
    for (auto [m, k] : {std::pair{1, 2}, std::pair{2, 1}}) {
      CyclicPresentation full = make_fib_presentation(FibTypeParams::make(n, m, k));
      CyclicPresentation half = halve_even_presentation(full);
      REQUIRE(abelianization(full) == abelianization(half));
    }
  }
}

TEST_CASE("Alexander-style coefficient conditions") {
  RepresenterPolynomial trefoil;  // 1 - 3t + t^2 (up to the sign of the middle term)
  trefoil.add(0, 1);
  trefoil.add(1, -3);
  trefoil.add(2, 1);
  REQUIRE(alexander_condition_check(trefoil).is_alexander);

  RepresenterPolynomial fig8;  // 1 - t + t^2
  fig8.add(0, 1);
  fig8.add(1, -1);
  fig8.add(2, 1);
  REQUIRE(alexander_condition_check(fig8).is_alexander);

  RepresenterPolynomial f1;  // 1 + t - t^2: fails palindromicity
  f1.add(0, 1);
  f1.add(1, 1);
  f1.add(2, -1);
  REQUIRE_FALSE(alexander_condition_check(f1).is_alexander);

  RepresenterPolynomial f2;  // 1 + t + t^2: f(1) = 3
  f2.add(0, 1);
  f2.add(1, 1);
  f2.add(2, 1);
  REQUIRE_FALSE(alexander_condition_check(f2).is_alexander);
}

TEST_CASE("degenerate representer polynomials") {
  // m = k collapses t^m - t^k, leaving the constant 1
  RepresenterPolynomial f = RepresenterPolynomial::for_params(3, 3);
  REQUIRE(f.dense().degree() == 0);
  // k = 0 gives t^m: 1 - 1 + t^m
  REQUIRE(RepresenterPolynomial::for_params(2, 0).dense().c ==
          std::vector<mpz_class>{0, 0, 1});
}
