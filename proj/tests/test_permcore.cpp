#include <algorithm>

#include "doctest.h"
#include "mahonia/oracle.hpp"
#include "mahonia/permcore.hpp"
#include "test_helpers.hpp"

using namespace mahonia;

TEST_CASE("parse_permutation accepts compact and delimited forms") {
  CHECK(parse_permutation("392648517").values() == std::vector<int>{3, 9, 2, 6, 4, 8, 5, 1, 7});
  CHECK(parse_permutation("3,9,2,6,4,8,5,1,7").values() ==
        std::vector<int>{3, 9, 2, 6, 4, 8, 5, 1, 7});
  CHECK(parse_permutation("1").values() == std::vector<int>{1});
  CHECK(parse_permutation("10 2 1 3 4 5 6 7 8 9").size() == 10);
}

TEST_CASE("parse_permutation rejects bad input with 1-based positions") {
  // "3 9 2" followed by "9" again cannot be a permutation: with 4 tokens the
  // range check fires first (9 > 4).
  CHECK_THROWS_WITH_AS(parse_permutation("3 9 2 9"),
                       "value 9 out of range [1,4] at position 2", ParseError);
  CHECK_THROWS_WITH_AS(parse_permutation("3 1 2 3"),
                       "duplicate value 3 at position 4", ParseError);
  CHECK_THROWS_WITH_AS(parse_permutation(""), "empty input", ParseError);
  CHECK_THROWS_WITH_AS(parse_permutation("   "), "empty input", ParseError);
  CHECK_THROWS_WITH_AS(parse_permutation("1 2 x"),
                       "invalid token \"x\" at position 3", ParseError);
  CHECK_THROWS_WITH_AS(parse_permutation("1 5 2"),
                       "value 5 out of range [1,3] at position 2", ParseError);
  CHECK_THROWS_AS(parse_permutation("1 -2 3"), ParseError);
}

TEST_CASE("parse_word infers the alphabet from the letters") {
  const Word w = parse_word("211324314");
  CHECK(w.letters() == std::vector<int>{2, 1, 1, 3, 2, 4, 3, 1, 4});
  CHECK(w.alphabet_size() == 4);
  CHECK(w.spec().multiplicities() == std::vector<int>{3, 2, 2, 2});

  CHECK(parse_word("1").spec().multiplicities() == std::vector<int>{1});
  CHECK(parse_word("312432143").spec().multiplicities() == std::vector<int>{2, 2, 3, 2});
}

TEST_CASE("parse_word against an explicit spec") {
  const MultisetSpec spec({3, 2, 2, 2});
  CHECK(parse_word("211324314", spec).spec() == spec);
  CHECK_THROWS_WITH_AS(parse_word("211324315", spec),
                       "letter 5 exceeds alphabet size 4 at position 9", ParseError);
  CHECK_THROWS_WITH_AS(parse_word("211324311", spec),
                       "letter 1 occurs 4 times, expected 3", ParseError);
}

TEST_CASE("MultisetSpec allows zero multiplicities and trims on request") {
  const MultisetSpec spec({2, 0, 1, 0});
  CHECK(spec.alphabet_size() == 4);
  CHECK(spec.length() == 3);
  CHECK(spec.trimmed().multiplicities() == std::vector<int>{2, 0, 1});
  CHECK_THROWS_AS(MultisetSpec({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(MultisetSpec({1, -1}), std::invalid_argument);
}

TEST_CASE("complement golden values") {
  CHECK(complement(Permutation::identity(6)).values() == std::vector<int>{6, 5, 4, 3, 2, 1});
  CHECK(complement(parse_permutation("38516427")).values() ==
        std::vector<int>{6, 1, 4, 8, 3, 5, 7, 2});
  CHECK(complement(parse_permutation("1")).values() == std::vector<int>{1});
}

TEST_CASE("complement is an involution on S_n, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [](const Permutation& sigma) {
      CHECK(complement(complement(sigma)) == sigma);
    });
}

TEST_CASE("render / parse round-trips in both formats, n <= 8") {
  for (int n = 1; n <= 8; ++n)
    for_each_permutation(n, [](const Permutation& sigma) {
      CHECK(parse_permutation(render_compact(sigma.values())) == sigma);
      CHECK(parse_permutation(render_spaced(sigma.values())) == sigma);
    });
}

TEST_CASE("render falls back to spaced once a value needs two digits") {
  const Permutation p = parse_permutation("10 2 1 3 4 5 6 7 8 9");
  CHECK(render(p) == "10 2 1 3 4 5 6 7 8 9");
  CHECK(render(parse_permutation("312")) == "312");
  CHECK(render_csv(std::vector<int>{0, 1, 1, 2}) == "0,1,1,2");
  CHECK_THROWS_AS(render_compact(p.values()), std::invalid_argument);
}

TEST_CASE("Permutation constructor validates") {
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
  for (int trial = 0; trial < 50; ++trial)
    CHECK_NOTHROW(testutil::random_permutation(12));
}

TEST_CASE("Code enforces the E_n bound") {
  CHECK_NOTHROW(Code({0, 1, 2, 3}));
  CHECK_THROWS_AS(Code({1}), std::invalid_argument);
  CHECK_THROWS_AS(Code({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Code({0, -1}), std::invalid_argument);
  CHECK(parse_code("0,1,1,2,3,4,4,1").entries() == std::vector<int>{0, 1, 1, 2, 3, 4, 4, 1});
  CHECK_THROWS_WITH_AS(parse_code("0,0,5,0"),
                       "entry 5 at position 3 violates the E_n bound [0,2]", ParseError);
}

TEST_CASE("GappedPermutation validates the gap") {
  const GappedPermutation g({3, 9, 2, 6, 4, 8, 5, 1}, 7);
  CHECK(g.ambient_size() == 9);
  CHECK(g.gap() == 7);
  CHECK_THROWS_AS(GappedPermutation({1, 2}, 2), std::invalid_argument);  // 2 equals the gap
  CHECK_THROWS_AS(GappedPermutation({1, 4}, 2), std::invalid_argument);  // 4 out of range
  CHECK_THROWS_AS(GappedPermutation({1, 1}, 3), std::invalid_argument);
  CHECK_NOTHROW(GappedPermutation({}, 1));  // ambient size 1
}

TEST_CASE("word detection helper") {
  CHECK(is_rearrangement_of_identity(std::vector<int>{3, 1, 2}));
  CHECK_FALSE(is_rearrangement_of_identity(std::vector<int>{2, 1, 2}));
  CHECK_FALSE(is_rearrangement_of_identity(std::vector<int>{1, 3}));
}
