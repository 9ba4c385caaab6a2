#include <doctest.h>

#include <random>

#include "coadjoint/json_io.hpp"
#include "oracle.hpp"

using namespace coadjoint;

TEST_CASE("algebra schema: heisenberg by hand") {
  const json doc = json::parse(R"({
    "dim": 3,
    "brackets": [{"i": 3, "j": 2, "coeffs": {"1": 1}}]
  })");
  const NilpotentAlgebra alg = algebra_from_json(doc);
  CHECK(alg == catalog::heisenberg(1).algebra);
}

TEST_CASE("algebra schema: rational coefficients as strings, antisymmetry filled") {
  const json doc = json::parse(R"({
    "dim": 3,
    "brackets": [{"i": 2, "j": 3, "coeffs": {"1": "-1/2"}}]
  })");
  const NilpotentAlgebra alg = algebra_from_json(doc);
  CHECK(alg.c(1, 2, 0) == Rational(-1, 2));
  CHECK(alg.c(2, 1, 0) == Rational(1, 2));
}

TEST_CASE("algebra schema round-trips the roster") {
  for (const auto& entry : catalog::test_roster()) {
    INFO(entry.name);
    CHECK(algebra_from_json(algebra_to_json(entry.algebra)) == entry.algebra);
  }
}

TEST_CASE("algebra schema rejects malformed documents") {
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"brackets": []})")), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 0})")), std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 2, "brackets": [
    {"i": 2, "j": 5, "coeffs": {"1": 1}}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 2, "brackets": [
    {"i": 2, "j": 2, "coeffs": {"1": 1}}]})")),
                  std::invalid_argument);
  // Listing both (i,j) and (j,i) is a duplicate.
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 3, "brackets": [
    {"i": 3, "j": 2, "coeffs": {"1": 1}},
    {"i": 2, "j": 3, "coeffs": {"1": -1}}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(algebra_from_json(json::parse(R"({"dim": 2, "brackets": [
    {"i": 2, "j": 1, "coeffs": {"1": "1.5"}}]})")),
                  std::invalid_argument);
}

TEST_CASE("rationals: big numerators survive the trip") {
  const Rational huge(mpz_class("123456789012345678901234567890123"), mpz_class(7));
  CHECK(rational_from_json(rational_to_json(huge)) == huge);
  const Rational big_int(mpz_class("91234567890123456789012345678"));
  CHECK(rational_from_json(rational_to_json(big_int)) == big_int);
  CHECK(rational_to_json(Rational(5)).is_number_integer());
  CHECK(rational_to_json(Rational(1, 2)).is_string());
}

TEST_CASE("stratification report schema round-trips") {
  const auto report = stratify(catalog::filiform(4).algebra, 1, 9);
  const json j = report_to_json(report);
  CHECK(j["height"] == 1);
  CHECK(j["seed"] == 9);
  CHECK(j["exhaustive"] == true);
  const auto back = report_from_json(j);
  CHECK(back.search_height == report.search_height);
  CHECK(back.seed == report.seed);
  CHECK(back.exhaustive == report.exhaustive);
  REQUIRE(back.strata.size() == report.strata.size());
  for (std::size_t i = 0; i < back.strata.size(); ++i) {
    CHECK(back.strata[i].e == report.strata[i].e);
    CHECK(back.strata[i].witnesses == report.strata[i].witnesses);
  }
}

TEST_CASE("invariant bundle serializes every field with provenance flags") {
  InvariantOptions options;
  options.height = 1;
  options.seed = 3;
  const auto bundle = compute_invariants(catalog::heisenberg(1).algebra, options);
  const json j = bundle_to_json(bundle);
  for (const char* key : {"dim", "a", "real_rank", "stable_rank", "index", "index_crosscheck",
                          "clgth_lower", "nuclear_lower", "nuclear_upper", "mode", "exhaustive",
                          "estimate_used"})
    CHECK(j.contains(key));
  CHECK(j["mode"] == "coarse");
  CHECK(j["index_crosscheck"]["agreed"] == true);
}

TEST_CASE("dual subset schema: spec form round-trips") {
  const json doc = json::parse(R"({
    "n": 1,
    "part1": [
      {"lo": -1, "hi": 0, "lo_closed": true, "hi_closed": false},
      {"lo": 0, "hi": "1/1", "lo_closed": false, "hi_closed": true}
    ],
    "part2": [{"min": [0, 0], "max": [1, 1], "closed": true}]
  })");
  const auto s = dual_subset_from_json(doc);
  CHECK(s.n == 1);
  REQUIRE(s.part1.size() == 2);
  CHECK(dual::accumulates_at_zero(s));
  const json back = dual_subset_to_json(s);
  CHECK(dual::set_equal(dual_subset_from_json(back), s));
  CHECK(back["part2"][0]["closed"] == true);

  const auto empty = dual_subset_from_json(json::parse(R"({"n": 2, "part2": "EMPTY"})"));
  CHECK(empty.empty());
  CHECK(dual_subset_to_json(empty)["part2"] == "EMPTY");
  const auto all = dual_subset_from_json(json::parse(R"({"n": 1, "part2": "ALL"})"));
  CHECK(all.part2_all);
  CHECK(dual_subset_to_json(all)["part2"] == "ALL");
}

TEST_CASE("dual subset schema: infinities and mixed faces") {
  const json doc = json::parse(R"({
    "n": 1,
    "part1": [{"lo": "-inf", "hi": "-2", "lo_closed": false, "hi_closed": true}],
    "part2": [{"min": [0, 0], "max": [1, 1],
               "min_closed": [true, false], "max_closed": [false, true]}]
  })");
  const auto s = dual_subset_from_json(doc);
  REQUIRE(s.part1.size() == 1);
  CHECK(!s.part1[0].lo.finite());
  REQUIRE(s.part2.size() == 1);
  CHECK(s.part2[0].min_closed == std::vector<bool>{true, false});
  const json back = dual_subset_to_json(s);
  CHECK(back["part1"][0]["lo"] == "-inf");
  CHECK(back["part2"][0].contains("min_closed"));  // mixed faces keep the arrays
  CHECK(dual::set_equal(dual_subset_from_json(back), s));
}

TEST_CASE("dual subset schema round-trips random descriptors") {
  std::mt19937_64 rng(4321);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = oracle::random_dual_subset(rng, 1 + rng() % 2);
    CHECK(dual::set_equal(dual_subset_from_json(dual_subset_to_json(s)), s));
  }
}

TEST_CASE("dual subset schema rejects malformed documents") {
  CHECK_THROWS_AS(dual_subset_from_json(json::parse(R"({"part2": "ALL"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(dual_subset_from_json(json::parse(R"({"n": 0})")), std::invalid_argument);
  CHECK_THROWS_AS(dual_subset_from_json(json::parse(R"({"n": 1, "part2": "SOME"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      dual_subset_from_json(json::parse(R"({"n": 1, "part2": [{"min": [0], "max": [1]}]})")),
      std::invalid_argument);
  CHECK_THROWS_AS(dual_subset_from_json(json::parse(
                      R"({"n": 2, "part2": [{"min": [0,0], "max": [1,1], "closed": true}]})")),
                  std::invalid_argument);
}

TEST_CASE("catalog entries serialize with the expected-value sidecar") {
  const json j = catalog_entry_to_json(catalog::filiform(4));
  CHECK(j["name"] == "filiform:4");
  CHECK(j["algebra"]["dim"] == 4);
  CHECK(j["expected"]["clgth"]["value"] == 3);
  CHECK(j["expected"]["index"]["value"] == 2);
  CHECK(j["expected"]["index"]["origin"] == "closed-form");
  CHECK(algebra_from_json(j["algebra"]) == catalog::filiform(4).algebra);
}
