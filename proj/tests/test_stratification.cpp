#include <doctest.h>

#include <random>

#include "coadjoint/catalog.hpp"
#include "coadjoint/stratification.hpp"
#include "oracle.hpp"

using namespace coadjoint;

namespace {

IndexSet set(std::initializer_list<int> elems) { return IndexSet(std::vector<int>(elems)); }

}  // namespace

TEST_CASE("jump_set examples") {
  const auto heis = catalog::heisenberg(1).algebra;
  CHECK(jump_set(heis, {Rational(1), Rational(0), Rational(0)}) == set({2, 3}));
  CHECK(jump_set(heis, {Rational(0), Rational(1), Rational(0)}) == set({}));

  const auto fil = catalog::filiform(4).algebra;
  CHECK(jump_set(fil, {Rational(1), Rational(0), Rational(0), Rational(0)}) == set({2, 4}));
  CHECK(jump_set(fil, {Rational(0), Rational(1), Rational(0), Rational(0)}) == set({3, 4}));
}

TEST_CASE("jump_set requires an adapted basis") {
  NilpotentAlgebra alg(3);
  alg.set_bracket(0, 1, {{2, Rational(1)}});  // center last
  CHECK_THROWS_AS(jump_set(alg, Vec(3, Rational(0))), std::invalid_argument);
}

TEST_CASE("jump_set matches the definitional oracle and the rank of B") {
  std::mt19937_64 rng(901);
  for (const auto& entry : catalog::test_roster()) {
    const std::size_t m = entry.algebra.dim();
    for (int trial = 0; trial < 6; ++trial) {
      const Functional xi = oracle::rand_vec(rng, m);
      const IndexSet e = jump_set(entry.algebra, xi);
      CHECK(e == oracle::naive_jump_set(entry.algebra, xi));
      CHECK(e.size() == rank(b_matrix(entry.algebra, xi)));
    }
  }
}

TEST_CASE("jump sets are orbit and scaling invariants") {
  std::mt19937_64 rng(902);
  for (const auto& entry : catalog::test_roster()) {
    const std::size_t m = entry.algebra.dim();
    for (int trial = 0; trial < 5; ++trial) {
      const Functional xi = oracle::rand_vec(rng, m, 4, 2);
      const Vec x = oracle::rand_vec(rng, m, 4, 2);
      const IndexSet e = jump_set(entry.algebra, xi);
      CHECK(jump_set(entry.algebra, coadjoint_act(entry.algebra, x, xi)) == e);
      for (const Rational t : {Rational(2), Rational(-1, 3), Rational(7, 5)})
        CHECK(jump_set(entry.algebra, t * xi) == e);
    }
  }
}

TEST_CASE("jump set is empty exactly on characters") {
  std::mt19937_64 rng(903);
  for (const auto& entry : catalog::test_roster()) {
    const std::size_t m = entry.algebra.dim();
    for (int trial = 0; trial < 6; ++trial) {
      const Functional xi = oracle::rand_vec(rng, m, 2, 1);
      CHECK(jump_set(entry.algebra, xi).empty() == is_character(entry.algebra, xi));
    }
  }
}

TEST_CASE("precedes: examples and the maximum") {
  CHECK(precedes(set({2, 3}), set({3, 4})));
  CHECK(precedes(set({2, 3}), set({})));
  CHECK(!precedes(set({2, 3}), set({2, 3})));
  CHECK(precedes(set({1}), set({1, 2})) == false);  // {1,2} \ {1} = {2}: {1,2} first
  CHECK(precedes(set({1, 2}), set({1})));
  CHECK(precedes(set({2, 4}), set({2, 5})));
}

TEST_CASE("precedes is a strict total order") {
  std::mt19937_64 rng(904);
  const auto random_set = [&] {
    std::vector<int> elems;
    for (int j = 1; j <= 6; ++j)
      if (rng() % 2) elems.push_back(j);
    return IndexSet(std::move(elems));
  };
  for (int trial = 0; trial < 500; ++trial) {
    const IndexSet a = random_set(), b = random_set(), c = random_set();
    if (a == b) {
      CHECK(!precedes(a, b));
      CHECK(!precedes(b, a));
    } else {
      CHECK(precedes(a, b) != precedes(b, a));
    }
    if (precedes(a, b) && precedes(b, c)) CHECK(precedes(a, c));
  }
}

TEST_CASE("stratify: heisenberg(1) at height 1 is exhaustive with 2 strata") {
  const auto heis = catalog::heisenberg(1).algebra;
  const auto report = stratify(heis, 1, 42);
  CHECK(report.exhaustive);
  REQUIRE(report.strata.size() == 2);
  CHECK(report.strata[0].e == set({2, 3}));
  CHECK(report.strata[1].e == set({}));

  // Brute-force oracle over all 27 lattice points.
  std::vector<IndexSet> expected;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int c = -1; c <= 1; ++c) {
        const IndexSet e =
            oracle::naive_jump_set(heis, {Rational(a), Rational(b), Rational(c)});
        bool known = false;
        for (const auto& k : expected) known = known || k == e;
        if (!known) expected.push_back(e);
      }
  CHECK(expected.size() == report.strata.size());

  // Witnesses re-check.
  for (const auto& stratum : report.strata) {
    CHECK(!stratum.witnesses.empty());
    CHECK(stratum.witnesses.size() <= 3);
    for (const auto& w : stratum.witnesses) CHECK(jump_set(heis, w) == stratum.e);
  }
}

TEST_CASE("stratify: abelian finds only the character stratum") {
  const auto report = stratify(catalog::abelian(3).algebra, 2, 7);
  REQUIRE(report.strata.size() == 1);
  CHECK(report.strata[0].e == set({}));
}

TEST_CASE("stratify: filiform finds m-1 strata of the known shape") {
  for (int m = 4; m <= 6; ++m) {
    const auto report = stratify(catalog::filiform(m).algebra, 1, 3);
    CHECK(report.exhaustive);
    CHECK(coarse_length_lower_bound(report) == m - 1);
    // {j, m} for j = 2..m-1, then the empty set.
    REQUIRE(report.strata.size() == static_cast<std::size_t>(m - 1));
    for (int j = 2; j <= m - 1; ++j) CHECK(report.strata[j - 2].e == set({j, m}));
    CHECK(report.strata.back().e == set({}));
  }
}

TEST_CASE("stratify is deterministic and monotone in height") {
  const auto alg = catalog::g0_st(Rational(1), Rational(1)).algebra;
  const auto r1 = stratify(alg, 1, 99);
  const auto r1b = stratify(alg, 1, 99);
  REQUIRE(r1.strata.size() == r1b.strata.size());
  for (std::size_t i = 0; i < r1.strata.size(); ++i) {
    CHECK(r1.strata[i].e == r1b.strata[i].e);
    CHECK(r1.strata[i].witnesses == r1b.strata[i].witnesses);
  }
  const auto r2 = stratify(alg, 2, 99);
  REQUIRE(r1.exhaustive);
  REQUIRE(r2.exhaustive);
  for (const auto& s : r1.strata) CHECK(r2.find(s.e) != nullptr);
}

TEST_CASE("stratify falls back to sampling over large lattices") {
  StratifyOptions options;
  options.budget = 1000;  // force sampling mode
  options.sample_count = 300;
  const auto alg = catalog::heisenberg(2).algebra;
  const auto report = stratify(alg, 2, 5, options);
  CHECK(!report.exhaustive);
  // Axis points include the origin, so the character stratum is present.
  CHECK(report.find(set({})) != nullptr);
  CHECK(report.find(set({2, 3, 4, 5})) != nullptr);
}

TEST_CASE("generic stratum: examples") {
  CHECK(generic_stratum(catalog::heisenberg(1).algebra, 11) == set({2, 3}));
  CHECK(generic_stratum(catalog::abelian(4).algebra, 11) == set({}));
  CHECK(generic_stratum(catalog::filiform(5).algebra, 11) == set({2, 5}));
}

TEST_CASE("generic stratum of ut(4) has four elements, against the rank oracle") {
  const auto alg = catalog::ut(4).algebra;
  const IndexSet e = generic_stratum(alg, 17);
  CHECK(e.size() == 4);

  std::mt19937_64 rng(905);
  std::size_t max_rank = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Functional xi = oracle::rand_vec(rng, alg.dim(), 20, 1);
    max_rank = std::max(max_rank, oracle::naive_rank(b_matrix(alg, xi)));
  }
  CHECK(max_rank == 4);
}
