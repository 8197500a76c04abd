#include <set>

#include "doctest.h"
#include "mahonia/oracle.hpp"
#include "test_helpers.hpp"

using namespace mahonia;

TEST_CASE("counting helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(7) == 5040);
  CHECK(multinomial(MultisetSpec({3, 2, 2, 2})) == 7560);
  CHECK(multinomial(MultisetSpec({1, 1})) == 2);
  CHECK(multinomial(MultisetSpec({5})) == 1);
}

TEST_CASE("permutations enumerate in lexicographic order") {
  std::vector<std::string> seen;
  for_each_permutation(3, [&](const Permutation& p) { seen.push_back(render(p)); });
  CHECK(seen == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});

  std::uint64_t count = 0;
  for_each_permutation(5, [&](const Permutation&) { ++count; });
  CHECK(count == 120);
}

TEST_CASE("words enumerate in lexicographic order") {
  std::vector<std::string> seen;
  for_each_word(MultisetSpec({2, 1}), [&](const Word& w) { seen.push_back(render(w)); });
  CHECK(seen == std::vector<std::string>{"112", "121", "211"});
}

TEST_CASE("codes enumerate in lexicographic order") {
  std::vector<std::vector<int>> seen;
  for_each_code(3, [&](const Code& c) { seen.push_back(c.entries()); });
  CHECK(seen == std::vector<std::vector<int>>{
                    {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(for_each_permutation(10, [](const Permutation&) {}),
                  std::invalid_argument);
  CHECK_NOTHROW(for_each_permutation(10, [](const Permutation&) {}, 10));
  CHECK_THROWS_AS(for_each_word(MultisetSpec({6, 6}), [](const Word&) {}, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(for_each_code(0, [](const Code&) {}), std::invalid_argument);
}

TEST_CASE("spec family enumeration") {
  std::vector<std::vector<int>> specs;
  for_each_spec(3, 2, [&](const MultisetSpec& s) { specs.push_back(s.multiplicities()); });
  CHECK(specs == std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {3}, {1, 2}, {2, 1}});
}

TEST_CASE("q-factorial oracle") {
  CHECK(q_factorial_coefficients(1) == std::vector<std::uint64_t>{1});
  CHECK(q_factorial_coefficients(3) == std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(q_factorial_coefficients(4) == std::vector<std::uint64_t>{1, 3, 5, 6, 5, 3, 1});
}

TEST_CASE("maj distribution equals the q-factorial up to n = 8") {
  for (int n = 1; n <= 8; ++n)
    CHECK(distribution_over_sn(Stat::maj, n).coefficients == q_factorial_coefficients(n));
}

TEST_CASE("distribution tables") {
  CHECK(distribution_over_sn(Stat::maj, 3).coefficients ==
        std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(distribution_over_sn(Stat::inv, 3).coefficients ==
        std::vector<std::uint64_t>{1, 2, 2, 1});
  CHECK(distribution_over_sn(Stat::z, 4).coefficients ==
        std::vector<std::uint64_t>{1, 3, 5, 6, 5, 3, 1});
  CHECK(distribution_over_sn(Stat::maj, 1).coefficients == std::vector<std::uint64_t>{1});
  CHECK(distribution_over_sn(Stat::des, 3).coefficients == std::vector<std::uint64_t>{1, 4, 1});
  CHECK(distribution_over_class(Stat::maj, MultisetSpec({1, 1})).coefficients ==
        std::vector<std::uint64_t>{1, 1});
  CHECK(distribution_over_class(Stat::z, MultisetSpec({1, 1})).coefficients ==
        std::vector<std::uint64_t>{1, 1});
  CHECK(distribution_over_sn(Stat::maj, 5).population == 120);
}

TEST_CASE("verification checks pass at n = 5") {
  for (auto* fn : {&verify_h_equals_im, &verify_h_properties, &verify_complement_commutation,
                   &verify_trace_identity, &verify_code_roundtrips, &verify_code_transform,
                   &verify_code_sums, &verify_foata_sn, &verify_partial_composition,
                   &verify_strong_fixed_equivalence, &verify_mahonian,
                   &verify_fixed_point_characterization, &verify_phi_fixed_strictness}) {
    const VerificationReport report = (*fn)(5, kDefaultMaxN);
    CHECK_MESSAGE(report.pass, report.check_name, ": ", report.counterexample);
  }
}

TEST_CASE("class verification checks pass on a mid-sized class") {
  const MultisetSpec spec({3, 2, 2, 2});
  VerificationReport report = verify_foata_class(spec);
  CHECK_MESSAGE(report.pass, report.counterexample);
  CHECK(report.population == 7560);
  report = verify_mahonian(spec);
  CHECK_MESSAGE(report.pass, report.counterexample);
}

TEST_CASE("phi-fixed strictness is vacuous below S_4") {
  const VerificationReport report = verify_phi_fixed_strictness(3, kDefaultMaxN);
  CHECK(report.pass);
  CHECK(report.population == 0);
  CHECK(verify_phi_fixed_strictness(4, kDefaultMaxN).pass);
}

TEST_CASE("fixed points of H") {
  CHECK(fixed_points_of_h(1) == std::vector<Permutation>{parse_permutation("1")});
  const auto s2 = fixed_points_of_h(2);
  CHECK(s2 == std::vector<Permutation>{parse_permutation("12"), parse_permutation("21")});
  for (int n = 1; n <= 8; ++n)
    CHECK(fixed_points_of_h(n).size() == std::uint64_t{1} << (n - 1));
  const auto s8 = fixed_points_of_h(8);
  CHECK(std::find(s8.begin(), s8.end(), parse_permutation("45367281")) != s8.end());
}

TEST_CASE("suite runner") {
  SuiteOptions opt;
  opt.n = 4;
  for (const std::string& name : suite_names()) {
    const auto reports = run_suite(name, opt);
    CHECK(!reports.empty());
    for (const auto& report : reports)
      CHECK_MESSAGE(report.pass, name, "/", report.check_name, ": ", report.counterexample);
  }
  CHECK(run_suite("all", opt).size() == 15);
  CHECK_THROWS_AS(run_suite("bogus", opt), std::invalid_argument);
}
