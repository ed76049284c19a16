#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/cluster_io.hpp"
#include "test_support.hpp"

#include <random>

using namespace fatpoints;

namespace {

WeightedCluster chain2(Int m1, Int m2) {
  return {ProximityStructure(2, {{2, 1}}), {std::move(m1), std::move(m2)}};
}

}  // namespace

TEST_CASE("validate accepts a satellite chain") {
  ProximityStructure s(3, {{2, 1}, {3, 2}, {3, 1}});
  CHECK(validate(s).empty());
  CHECK(s.proximity_count(1) == 2);
  CHECK(s.points_proximate_to(2) == std::vector<int>{3});
  CHECK(s.targets_of(3) == std::vector<int>{1, 2});
  CHECK(s.relation_matrix() ==
        std::vector<std::vector<bool>>{{false, false, false},
                                       {true, false, false},
                                       {true, true, false}});
}

TEST_CASE("validate rejects a satellite without its closure pair") {
  ProximityStructure s(3, {{3, 1}, {3, 2}});
  auto issues = validate(s);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].rule == ValidationIssue::Rule::satellite_closure);
  CHECK(issues[0].j == 3);
  CHECK(issues[0].message.find("(2, 1)") != std::string::npos);
}

TEST_CASE("validate rejects reversed pairs") {
  ProximityStructure s(2, {{1, 2}});
  auto issues = validate(s);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].rule == ValidationIssue::Rule::pair_range);
}

TEST_CASE("validate rejects out-of-range and degenerate input") {
  CHECK(validate(ProximityStructure(0, {})).front().rule ==
        ValidationIssue::Rule::point_count);
  CHECK(validate(ProximityStructure(3, {{5, 1}})).front().rule ==
        ValidationIssue::Rule::pair_range);
  CHECK(validate(ProximityStructure(2, {{2, 2}})).front().rule ==
        ValidationIssue::Rule::pair_range);
}

TEST_CASE("validate rejects three proximities at one point") {
  // closure pairs all present, so only the count rule fires
  ProximityStructure s(4, {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}});
  auto issues = validate(s);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].rule == ValidationIssue::Rule::too_many_proximities);
  CHECK(issues[0].j == 4);
}

TEST_CASE("validate rejects two satellites on one pair") {
  // blowing up point 3 separates the divisors of 1 and 2, so point 4 cannot
  // be proximate to both; accepting this would also break the uniqueness of
  // the unloaded representative
  ProximityStructure s(4, {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}});
  auto issues = validate(s);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].rule == ValidationIssue::Rule::satellite_pair_reuse);
  CHECK(issues[0].j == 4);
  CHECK(issues[0].message.find("3 and 4") != std::string::npos);
}

TEST_CASE("require_valid throws with the issue message") {
  CHECK_NOTHROW(require_valid(ProximityStructure(1, {})));
  CHECK_THROWS_AS(require_valid(ProximityStructure(2, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("excesses") {
  CHECK(excesses(chain2(0, 1)) == std::vector<Int>{-1, 1});
  CHECK(excesses({ProximityStructure(2, {}), {Int(5), Int(7)}}) ==
        std::vector<Int>{5, 7});
  WeightedCluster c{ProximityStructure(4, {{2, 1}, {3, 2}, {3, 1}, {4, 3}}),
                    {Int(2), Int(2), Int(2), Int(2)}};
  CHECK(excesses(c) == std::vector<Int>{-2, 0, 0, 2});
  CHECK_THROWS_AS(excesses({ProximityStructure(2, {}), {Int(1)}}), std::invalid_argument);
}

TEST_CASE("consistency") {
  CHECK(is_consistent(chain2(1, 0)));
  CHECK(!is_consistent(chain2(0, 1)));
  CHECK(is_consistent({ProximityStructure(3, {}), {Int(0), Int(0), Int(0)}}));
}

TEST_CASE("scheme degree") {
  CHECK(scheme_degree(chain2(1, 0)) == 1);
  CHECK(scheme_degree({ProximityStructure(3, {{2, 1}, {3, 2}}), {Int(2), Int(0), Int(0)}}) == 3);
  CHECK(scheme_degree({ProximityStructure(4, {{2, 1}, {3, 2}, {3, 1}, {4, 3}}),
                       {Int(3), Int(2), Int(1), Int(1)}}) == 11);
  CHECK_THROWS_AS(scheme_degree(chain2(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(scheme_degree({ProximityStructure(1, {}), {Int(-1)}}),
                  std::invalid_argument);
}

TEST_CASE("excesses is linear in the multiplicities") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 200; ++k) {
    ProximityStructure s = testing::random_structure(rng, 9);
    auto a = testing::random_multiplicities(rng, s.points, 20);
    auto b = testing::random_multiplicities(rng, s.points, 20);
    std::vector<Int> sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + b[i];
    auto ra = excesses({s, a});
    auto rb = excesses({s, b});
    auto rs = excesses({s, sum});
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(rs[i] == ra[i] + rb[i]);
  }
}

TEST_CASE("plain chains difference the multiplicities") {
  std::mt19937_64 rng(37);
  for (int r : {1, 2, 5, 9}) {
    std::vector<std::pair<int, int>> prox;
    for (int j = 2; j <= r; ++j) prox.emplace_back(j, j - 1);
    ProximityStructure s(r, std::move(prox));
    auto m = testing::random_multiplicities(rng, r, 20);
    auto rho = excesses({s, m});
    for (int i = 1; i < r; ++i)
      CHECK(rho[static_cast<std::size_t>(i) - 1] ==
            m[static_cast<std::size_t>(i) - 1] - m[static_cast<std::size_t>(i)]);
    CHECK(rho[static_cast<std::size_t>(r) - 1] == m[static_cast<std::size_t>(r) - 1]);
  }
}

TEST_CASE("generator output always validates") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 300; ++k)
    CHECK(validate(testing::random_structure(rng, 10)).empty());
}

TEST_CASE("cluster files round-trip") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    ProximityStructure s = testing::random_structure(rng, 8);
    WeightedCluster c{s, testing::random_multiplicities(rng, s.points, 1000)};
    CHECK(parse_cluster(print_cluster(c)) == c);
  }
  // multiplicities beyond 64 bits go through the string form
  WeightedCluster big{ProximityStructure(2, {{2, 1}}),
                      {Int("123456789012345678901234567890"), Int(-3)}};
  std::string text = print_cluster(big);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(parse_cluster(text) == big);
}

TEST_CASE("cluster file errors cite the line or field") {
  CHECK_THROWS_WITH_AS(parse_cluster("{\"points\": 2}"),
                       doctest::Contains("proximities"), FormatError);
  CHECK_THROWS_WITH_AS(parse_cluster("not json"), doctest::Contains("line 1"),
                       FormatError);
  CHECK_THROWS_WITH_AS(
      parse_cluster(R"({"points": 2, "proximities": [[2]], "multiplicities": [1, 1]})"),
      doctest::Contains("proximities[0]"), FormatError);
  CHECK_THROWS_WITH_AS(
      parse_cluster(
          R"({"points": 2, "proximities": [], "multiplicities": [1, "x"]})"),
      doctest::Contains("multiplicities[1]"), FormatError);
  CHECK_THROWS_WITH_AS(
      parse_cluster(R"({"points": 2, "proximities": [], "multiplicities": [1]})"),
      doctest::Contains("expected 2 entries"), FormatError);
  CHECK_THROWS_WITH_AS(
      parse_cluster(
          R"({"points": 3, "proximities": [[3, 1], [3, 2]], "multiplicities": [1, 1, 1]})"),
      doctest::Contains("missing"), FormatError);
}
