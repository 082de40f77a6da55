#include <catch2/catch_amalgamated.hpp>

#include "fibtype/classify.hpp"

using namespace fibtype;
using A = Verdict::Answer;

TEST_CASE("sphere-parameter triples give cyclic groups with the half-power order") {
  Verdict v = classify(FibTypeParams::make(6, 5, 2));
  REQUIRE(v.group_answer == A::Yes);
  REQUIRE(v.group_structure == "cyclic(7)");
  REQUIRE(v.known_order == 7);
  REQUIRE(v.spine_answer == A::No);

  Verdict w = classify(FibTypeParams::make(6, 5, 3));
  REQUIRE(w.group_structure == "cyclic(7)");
  REQUIRE(w.spine_answer == A::No);
}

TEST_CASE("the two open H(9,m) cases stay unknown but are refused as spines") {
  for (int m : {4, 7}) {
    Verdict v = classify(FibTypeParams::make(9, m, 1));
    REQUIRE(v.group_answer == A::Unknown);
    REQUIRE(v.spine_answer == A::No);
  }
}

TEST_CASE("odd-index Fibonacci groups are settled by index") {
  REQUIRE(classify(FibTypeParams::make(3, 1, 2)).group_structure == "fibonacci(3)");
  REQUIRE(classify(FibTypeParams::make(3, 1, 2)).known_order == 8);
  REQUIRE(classify(FibTypeParams::make(3, 1, 2)).spine_answer == A::Yes);
  REQUIRE(classify(FibTypeParams::make(5, 1, 2)).group_structure == "cyclic(11)");
  REQUIRE(classify(FibTypeParams::make(5, 1, 2)).spine_answer == A::No);
  REQUIRE(classify(FibTypeParams::make(7, 1, 2)).group_structure == "cyclic(29)");
  REQUIRE(classify(FibTypeParams::make(9, 1, 2)).group_answer == A::No);
}

TEST_CASE("h-form families: trivial, powers-of-two cyclic, Sieradski, Fibonacci") {
  REQUIRE(classify(FibTypeParams::make(6, 1, 1)).group_structure == "trivial");
  REQUIRE(classify(FibTypeParams::make(6, 1, 1)).spine_family == "s3");
  REQUIRE(classify(FibTypeParams::make(5, 0, 1)).group_structure == "cyclic(31)");
  REQUIRE(classify(FibTypeParams::make(5, 0, 1)).spine_answer == A::No);
  REQUIRE(classify(FibTypeParams::make(10, 2, 1)).group_structure == "sieradski(10)");
  REQUIRE(classify(FibTypeParams::make(10, 2, 1)).spine_answer == A::Yes);
  REQUIRE(classify(FibTypeParams::make(4, 3, 1)).group_structure == "cyclic(5)");
  REQUIRE(classify(FibTypeParams::make(6, 4, 1)).group_structure == "cyclic(9)");
  REQUIRE(classify(FibTypeParams::make(8, 7, 1)).group_structure == "fibonacci(8)");
  REQUIRE(classify(FibTypeParams::make(8, 7, 1)).spine_answer == A::Yes);
  REQUIRE(classify(FibTypeParams::make(7, 3, 1)).group_answer == A::No);
  REQUIRE(classify(FibTypeParams::make(6, 3, 1)).group_answer == A::No);
}

TEST_CASE("gcd splits classify through their factor") {
  Verdict v = classify(FibTypeParams::make(6, 2, 4));
  REQUIRE(v.factors.size() == 2);
  REQUIRE(v.group_answer == A::Yes);
  REQUIRE(v.group_structure == "free-product(fibonacci(3), fibonacci(3))");
  REQUIRE(v.spine_answer == A::Yes);
  REQUIRE(v.spine_family == "wedge(fibonacci(3), fibonacci(3))");

  Verdict t = classify(FibTypeParams::make(4, 2, 2));
  REQUIRE(t.group_structure == "trivial");

  Verdict u = classify(FibTypeParams::make(18, 8, 2));
  REQUIRE(u.group_answer == A::Unknown);
  REQUIRE(u.spine_answer == A::No);
}

TEST_CASE("verdicts are invariant under the parameter flip") {
  for (int n = 1; n <= 9; ++n)
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) {
        Verdict a = classify(FibTypeParams::make(n, m, k));
        Verdict b = classify(flipped(FibTypeParams::make(n, m, k)));
        CAPTURE(n, m, k);
        REQUIRE(a.group_answer == b.group_answer);
        REQUIRE(a.spine_answer == b.spine_answer);
        REQUIRE(a.known_order == b.known_order);
      }
}

TEST_CASE("every verdict carries a justification trail") {
  for (int n = 1; n <= 8; ++n)
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) {
        Verdict v = classify(FibTypeParams::make(n, m, k));
        CAPTURE(n, m, k);
        REQUIRE_FALSE(v.justification.empty());
        if (v.spine_answer == A::Yes) REQUIRE(v.group_answer == A::Yes);
        if (v.group_answer == A::Yes) REQUIRE_FALSE(v.group_structure.empty());
      }
}

TEST_CASE("cross check confirms cyclic orders by enumeration") {
  Verdict v = classify(FibTypeParams::make(5, 1, 2));
  CrossCheckReport rep = cross_check(v);
  CAPTURE(rep.failures);
  REQUIRE(rep.passed);

  SECTION("a corrupted order is rejected") {
    v.known_order = 12;
    CrossCheckReport bad = cross_check(v);
    REQUIRE_FALSE(bad.passed);
  }
}

TEST_CASE("cross check validates spine certificates and obstructions") {
  for (auto [n, m, k] : {std::tuple{6, 1, 1}, {10, 2, 1}, {8, 7, 1}, {6, 0, 1},
                         {6, 5, 3}, {8, 3, 4}, {5, 1, 2}}) {
    Verdict v = classify(FibTypeParams::make(n, m, k));
    CrossCheckReport rep = cross_check(v);
    CAPTURE(n, m, k, rep.failures);
    REQUIRE(rep.passed);
  }
}

TEST_CASE("cross check sweep for all small triples") {
  for (int n = 1; n <= 7; ++n)
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) {
        Verdict v = classify(FibTypeParams::make(n, m, k));
        CrossCheckReport rep = cross_check(v);
        CAPTURE(n, m, k, rep.failures);
        REQUIRE(rep.passed);
      }
}
