#include <numeric>

#include "doctest.h"
#include "mahonia/codes.hpp"
#include "mahonia/oracle.hpp"
#include "mahonia/stats.hpp"
#include "test_helpers.hpp"

using namespace mahonia;

TEST_CASE("codes of 38516427") {
  const Permutation sigma = parse_permutation("38516427");
  CHECK(lehmer_encode(sigma).entries() == std::vector<int>{0, 0, 1, 3, 1, 3, 5, 1});
  CHECK(cyclic_major_encode(sigma).entries() == std::vector<int>{0, 1, 1, 2, 3, 4, 4, 1});
}

TEST_CASE("codes from the worked 9-element example") {
  CHECK(lehmer_encode(parse_permutation("496182537")).entries() ==
        std::vector<int>{0, 0, 1, 3, 1, 4, 3, 5, 2});
  CHECK(cyclic_major_encode(parse_permutation("392648517")).entries() ==
        std::vector<int>{0, 0, 1, 3, 1, 4, 3, 5, 2});
}

TEST_CASE("decoders on golden codes") {
  const Code code({0, 0, 1, 3, 1, 4, 3, 5, 2});
  CHECK(lehmer_decode(code) == parse_permutation("496182537"));
  CHECK(cyclic_major_decode(code) == parse_permutation("392648517"));
  CHECK(cyclic_major_decode(Code({0, 1, 1, 2, 3, 4, 4, 1})) == parse_permutation("38516427"));
}

TEST_CASE("decoders on extreme codes") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(lehmer_decode(Code(std::vector<int>(n, 0))) == Permutation::identity(n));
    CHECK(cyclic_major_decode(Code(std::vector<int>(n, 0))) == Permutation::identity(n));
    std::vector<int> maximal(n);
    std::iota(maximal.begin(), maximal.end(), 0);
    CHECK(lehmer_decode(Code(maximal)) == complement(Permutation::identity(n)));
  }
}

TEST_CASE("decoders agree with the search oracle on all of E_5") {
  for_each_code(5, [](const Code& code) {
    auto by_lehmer = testutil::decode_by_search(code, lehmer_encode);
    REQUIRE(by_lehmer.has_value());
    CHECK(lehmer_decode(code) == *by_lehmer);
    auto by_cmaj = testutil::decode_by_search(code, cyclic_major_encode);
    REQUIRE(by_cmaj.has_value());
    CHECK(cyclic_major_decode(code) == *by_cmaj);
  });
}

TEST_CASE("t_to_s golden values") {
  CHECK(t_to_s(Code({0, 0, 1, 3, 1, 3, 5, 1})).entries() ==
        std::vector<int>{0, 1, 1, 2, 3, 4, 4, 1});
  CHECK(t_to_s(Code(std::vector<int>(6, 0))).entries() == std::vector<int>(6, 0));
  // The maximal code belongs to the reversal; its image under t_to_s must be
  // the reversal's s-vector, computed here with the s_vector oracle.
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> maximal(n);
    std::iota(maximal.begin(), maximal.end(), 0);
    const Permutation reversal = complement(Permutation::identity(n));
    CHECK(t_to_s(Code(maximal)).entries() == s_vector(reversal));
  }
}

TEST_CASE("s_to_t inverts t_to_s") {
  CHECK(s_to_t(Code({0, 1, 1, 2, 3, 4, 4, 1})).entries() ==
        std::vector<int>{0, 0, 1, 3, 1, 3, 5, 1});
  CHECK(s_to_t(Code(std::vector<int>(5, 0))).entries() == std::vector<int>(5, 0));
  for_each_code(5, [](const Code& code) {
    CHECK(t_to_s(s_to_t(code)) == code);
    CHECK(s_to_t(t_to_s(code)) == code);
  });
}

TEST_CASE("round-trips on S_n, n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& sigma) {
      CHECK(lehmer_decode(lehmer_encode(sigma)) == sigma);
      CHECK(cyclic_major_decode(cyclic_major_encode(sigma)) == sigma);
      CHECK(t_to_s(lehmer_encode(sigma)) == cyclic_major_encode(sigma));
    });
}

TEST_CASE("code complement") {
  CHECK(code_complement(Code(std::vector<int>(5, 0))).entries() ==
        std::vector<int>{0, 1, 2, 3, 4});
  for_each_code(6, [](const Code& code) {
    CHECK(code_complement(code_complement(code)) == code);
  });
  const Permutation sigma = parse_permutation("38516427");
  CHECK(code_complement(lehmer_encode(sigma)) == lehmer_encode(parse_permutation("61483572")));
}

TEST_CASE("code sums are inv and maj") {
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation sigma = testutil::random_permutation(1 + trial % 9);
    const std::vector<int> t = lehmer_encode(sigma).entries();
    const std::vector<int> s = cyclic_major_encode(sigma).entries();
    CHECK(std::accumulate(t.begin(), t.end(), 0LL) == inv(sigma));
    CHECK(std::accumulate(s.begin(), s.end(), 0LL) == maj(sigma));
  }
}

TEST_CASE("stat vectors of words still satisfy the code bound") {
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<int> w = testutil::random_word(1 + trial % 10, 1 + trial % 4);
    CHECK_NOTHROW(Code(t_vector(w)));
    CHECK_NOTHROW(Code(s_vector(w)));
  }
}
