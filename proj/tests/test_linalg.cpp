#include <doctest.h>

#include <random>

#include "coadjoint/linalg.hpp"
#include "oracle.hpp"

using namespace coadjoint;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = oracle::rand_rational(rng);
  return m;
}

}  // namespace

TEST_CASE("rref normalizes pivots and clears columns") {
  Matrix m(3, 3);
  m(0, 0) = 2; m(0, 1) = 4; m(0, 2) = 6;
  m(1, 0) = 1; m(1, 1) = 2; m(1, 2) = 4;
  m(2, 0) = 0; m(2, 1) = 0; m(2, 2) = 1;
  const auto pivots = rref(m);
  REQUIRE(pivots.size() == 2);
  CHECK(pivots[0] == 0);
  CHECK(pivots[1] == 2);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 2);
  CHECK(m(0, 2) == 0);
  CHECK(m(1, 2) == 1);
}

TEST_CASE("Bareiss rank agrees with the naive-elimination oracle") {
  std::mt19937_64 rng(7001);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix m = random_matrix(rng, r, c);
    // Mix in rank-deficient cases: duplicate a row.
    if (r >= 2 && rng() % 2 == 0) m.set_row(r - 1, m.row(0));
    CHECK(rank(m) == oracle::naive_rank(m));
  }
}

TEST_CASE("kernel vectors annihilate and have the right count") {
  std::mt19937_64 rng(7002);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const Matrix m = random_matrix(rng, r, c);
    const Subspace k = kernel(m);
    CHECK(k.dim() == c - rank(m));
    for (std::size_t i = 0; i < k.dim(); ++i) CHECK(is_zero(m * k.basis().row(i)));
    // Oracle kernel vectors live inside the library kernel.
    for (const Vec& v : oracle::naive_kernel(m)) CHECK(k.contains(v));
  }
}

TEST_CASE("subspace sum and containment") {
  Matrix a(1, 3);
  a(0, 0) = 1;
  Matrix b(1, 3);
  b(0, 1) = 1;
  const Subspace sa = Subspace::row_space(a);
  const Subspace sb = Subspace::row_space(b);
  const Subspace sum = sa.sum(sb);
  CHECK(sum.dim() == 2);
  CHECK(sum.contains(sa));
  CHECK(sum.contains(sb));
  CHECK(!sa.contains(sb));
  CHECK(Subspace::full(3).contains(sum));
  CHECK(sum.contains(Subspace::zero(3)));
}

TEST_CASE("row_space is canonical: same space, same basis") {
  std::mt19937_64 rng(7003);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix m = random_matrix(rng, 3, 4);
    // Row-scramble: scale and swap; the row space is unchanged.
    Matrix scrambled = m;
    for (std::size_t j = 0; j < 4; ++j) {
      std::swap(scrambled(0, j), scrambled(2, j));
      scrambled(1, j) *= Rational(3, 2);
    }
    CHECK(Subspace::row_space(m) == Subspace::row_space(scrambled));
  }
}

TEST_CASE("SpanBuilder tracks rank incrementally") {
  std::mt19937_64 rng(7004);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t c = 2 + rng() % 4;
    const std::size_t r = 1 + rng() % 5;
    const Matrix m = random_matrix(rng, r, c);
    SpanBuilder span(c);
    for (std::size_t i = 0; i < r; ++i) span.insert(m.row(i));
    CHECK(span.rank() == rank(m));
    for (std::size_t i = 0; i < r; ++i) CHECK(span.contains(m.row(i)));
  }
}

TEST_CASE("inverse") {
  Matrix m(2, 2);
  m(0, 0) = 1; m(0, 1) = 2;
  m(1, 0) = 3; m(1, 1) = 4;
  const Matrix inv = inverse(m);
  CHECK(m * inv == Matrix::identity(2));
  CHECK(inv * m == Matrix::identity(2));

  Matrix singular(2, 2);
  singular(0, 0) = 1; singular(0, 1) = 2;
  singular(1, 0) = 2; singular(1, 1) = 4;
  CHECK_THROWS_AS(inverse(singular), std::invalid_argument);
  CHECK_THROWS_AS(inverse(Matrix(2, 3)), std::invalid_argument);
}
