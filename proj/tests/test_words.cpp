#include <catch2/catch_amalgamated.hpp>

#include "fibtype/word.hpp"

using namespace fibtype;

TEST_CASE("parsing accepts lowercase, uppercase and exponents") {
  Word w = parse_word("x0 x3 X2", 5);
  REQUIRE(w.letters == std::vector<Letter>{{0, 1}, {3, 1}, {2, -1}});

  Word e = parse_word("x1^2 X0^3", 3);
  REQUIRE(e.letters == std::vector<Letter>{{1, 2}, {0, -3}});
}

TEST_CASE("parsing rejects malformed tokens and out-of-range indices") {
  REQUIRE_THROWS_AS(parse_word("y0", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_word("x", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_word("x0^0", 3), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_word("x3", 3), std::invalid_argument);
}

TEST_CASE("format and parse round-trip") {
  Word w = parse_word("x0 x0 X1 x2", 4);
  REQUIRE(parse_word(format_word(w), 4) == w);
  REQUIRE(format_word(w) == "x0 x0 X1 x2");
}

TEST_CASE("normalization performs free reduction") {
  Word w;
  w.letters = {{0, 1}, {1, 1}, {1, -1}, {0, 1}};
  REQUIRE(normalized(w).letters == std::vector<Letter>{{0, 2}});

  Word all_cancels;
  all_cancels.letters = {{2, 3}, {2, -3}};
  REQUIRE(normalized(all_cancels).letters.empty());
}

TEST_CASE("cyclic reduction strips conjugating ends") {
  // x1^-1 x0 x2 x1  ->  x0 x2
  Word w;
  w.letters = {{1, -1}, {0, 1}, {2, 1}, {1, 1}};
  REQUIRE(cyclically_reduced(w).letters == std::vector<Letter>{{0, 1}, {2, 1}});
}

TEST_CASE("inverse and concat satisfy group identities") {
  Word w = parse_word("x0 X1 x2^2", 3);
  REQUIRE(concat(w, inverse(w)).letters.empty());
  REQUIRE(normalized(inverse(inverse(w))) == normalized(w));
}

TEST_CASE("shift wraps generator indices mod n") {
  Word w = parse_word("x0 x4 X2", 5);
  Word s = shifted(w, 3, 5);
  REQUIRE(format_word(s) == "x3 x2 X0");
}

TEST_CASE("rotation equality ignores the starting point") {
  Word a = parse_word("x0 x1 X2", 3);
  Word b = parse_word("x1 X2 x0", 3);
  Word c = parse_word("x0 X1 x2", 3);
  REQUIRE(equal_up_to_rotation(a, b));
  REQUIRE_FALSE(equal_up_to_rotation(a, c));
  // inverse of a cyclic word is equivalent only via the inversion variant
  REQUIRE_FALSE(equal_up_to_rotation(a, inverse(a)));
  REQUIRE(equal_up_to_rotation_or_inversion(a, inverse(a)));
}

TEST_CASE("column expansion encodes signs in parity") {
  Word w = parse_word("x1^2 X0", 2);
  REQUIRE(expand_to_columns(w) == std::vector<int>{2, 2, 1});
}
