// Independent reference implementations for cross-checking the library.
// Everything here recomputes from first principles with plain rational
// Gauss-Jordan (largest-pivot selection), sharing no elimination code with
// the library's Bareiss / first-nonzero-pivot routes.

#ifndef COADJOINT_TESTS_ORACLE_HPP
#define COADJOINT_TESTS_ORACLE_HPP

#include <random>

#include "coadjoint/algebra.hpp"
#include "coadjoint/heisenberg_dual.hpp"
#include "coadjoint/stratification.hpp"

namespace oracle {

using coadjoint::Functional;
using coadjoint::Matrix;
using coadjoint::NilpotentAlgebra;
using coadjoint::Rational;
using coadjoint::Vec;

std::size_t naive_rank(Matrix m);

/// Basis of {x : m x = 0}; rows are not canonicalized.
std::vector<Vec> naive_kernel(const Matrix& m);

/// The jump set computed literally from its definition: for each j, rank
/// of the stacked basis of g(xi) + g_j, rebuilt from scratch every step.
coadjoint::IndexSet naive_jump_set(const NilpotentAlgebra& alg, const Functional& xi);

/// xi o e^{-t ad x} developed as an explicit power series sum, term by
/// term (an independent route to the coadjoint action).
Functional naive_coadjoint_series(const NilpotentAlgebra& alg, const Rational& t, const Vec& x,
                                  const Functional& xi);

// Seeded generators for property tests.

Rational rand_rational(std::mt19937_64& rng, int range = 6, int max_den = 4);
Vec rand_vec(std::mt19937_64& rng, std::size_t m, int range = 6, int max_den = 4);

/// A random two-step nilpotent algebra with an adapted basis: a random
/// antisymmetric bracket into a central subspace (always Lie).
NilpotentAlgebra random_two_step(std::mt19937_64& rng, int center_dim, int rest_dim);

coadjoint::dual::DualSubset random_dual_subset(std::mt19937_64& rng, std::size_t n);
coadjoint::dual::DualSubset random_quasi_compact_subset(std::mt19937_64& rng, std::size_t n);

}  // namespace oracle

#endif
