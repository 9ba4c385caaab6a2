#ifndef COADJOINT_INVARIANTS_HPP
#define COADJOINT_INVARIANTS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "coadjoint/stratification.hpp"

namespace coadjoint {

/// Dimension of the character space g/[g,g]; equals the real rank of the
/// group C*-algebra.
int real_rank(const NilpotentAlgebra& alg);

/// 1 for the line; otherwise 1 + max(floor(r/2), 1) with r the real rank.
int stable_rank(const NilpotentAlgebra& alg);

/// The index computed along four routes that must coincide once the
/// generic rank was attained by the sample:
///   dim g - |generic jump set|,
///   dim g - max sampled orbit dimension |J_xi|,
///   min sampled stabilizer dimension,
///   dim g - max sampled rank B_xi (fraction-free route).
struct IndexReport {
  int by_generic_stratum = 0;
  int by_orbit_dim = 0;
  int by_min_stabilizer = 0;
  int by_max_rank = 0;
  bool agreed = false;
  int value() const { return by_generic_stratum; }
};

struct IndexOptions {
  std::size_t sample_count = 200;
  int coord_range = 10;
};

struct IndexDisagreement : std::runtime_error {
  IndexReport report;
  explicit IndexDisagreement(const IndexReport& r);
};

IndexReport index_crosscheck(const NilpotentAlgebra& alg, std::uint64_t seed,
                             const IndexOptions& options = {});

/// The common value of the four routes. Throws IndexDisagreement when the
/// sample was too thin for them to coincide (retry with a larger range).
int index(const NilpotentAlgebra& alg, std::uint64_t seed, const IndexOptions& options = {});

enum class BoundsMode { Coarse, Fine };

struct NuclearBounds {
  int lower = 0;
  int upper = 0;
};

struct UnknownStratumDimension : std::runtime_error {
  IndexSet stratum;
  explicit UnknownStratumDimension(const IndexSet& e);
};

/// Bounds on the nuclear dimension of the group C*-algebra.
///
/// Coarse: (max(2, a), dim g + clgth_lower - 1) for non-abelian algebras,
/// (n, n) for the abelian ones (commutative case, dual = R^n).
///
/// Fine: (max_e dim Xi_e, sum_e dim Xi_e + #strata - 1) over the strata in
/// the report. The generic stratum dimension (= index) and the character
/// stratum dimension (= a) are filled in exactly; any other stratum must
/// appear in stratum_dims or UnknownStratumDimension is thrown.
NuclearBounds nuclear_bounds(const NilpotentAlgebra& alg, BoundsMode mode,
                             const StratificationReport& report, const IndexReport& index_report,
                             const std::map<IndexSet, int, PrecedesLess>& stratum_dims = {});

/// Local-dimension probe for a stratum: perturbs a witness along random
/// rational directions and counts the independent directions that keep the
/// jump set. The result is an ESTIMATE, not a certified dimension; it is
/// never used by nuclear_bounds.
int estimate_stratum_dim(const NilpotentAlgebra& alg, const IndexSet& e,
                         const Functional& witness, std::uint64_t seed);

/// Everything the reports carry, bundled for serialization.
struct InvariantBundle {
  int dim_g = 0;
  int a = 0;  // dim(g/[g,g])
  int real_rank = 0;
  int stable_rank = 0;
  int index = 0;
  IndexReport index_report;
  int clgth_lower = 0;
  int nuclear_lower = 0;
  int nuclear_upper = 0;
  BoundsMode mode = BoundsMode::Coarse;
  bool exhaustive = false;     // the stratification behind clgth_lower
  bool estimate_used = false;  // a probe estimate entered stratum_dims
};

struct InvariantOptions {
  int height = 2;
  std::uint64_t seed = 0;
  BoundsMode mode = BoundsMode::Coarse;
  std::map<IndexSet, int, PrecedesLess> stratum_dims;
  bool stratum_dims_estimated = false;
  StratifyOptions stratify;
  IndexOptions index;
};

InvariantBundle compute_invariants(const NilpotentAlgebra& alg, const InvariantOptions& options);

}  // namespace coadjoint

#endif
