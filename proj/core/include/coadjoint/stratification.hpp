#ifndef COADJOINT_STRATIFICATION_HPP
#define COADJOINT_STRATIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coadjoint/algebra.hpp"

namespace coadjoint {

/// A set of flag positions e subset of {1..m}, kept sorted. Houses jump
/// sets J_xi and stratum labels.
struct IndexSet {
  std::vector<int> elems;  // strictly increasing, 1-based

  IndexSet() = default;
  explicit IndexSet(std::vector<int> e);

  bool empty() const { return elems.empty(); }
  std::size_t size() const { return elems.size(); }
  bool contains(int j) const;

  std::string to_string() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.elems == b.elems; }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }
};

/// The total order: e1 before e2 iff min(e1 \ e2) < min(e2 \ e1), with
/// min(empty) = infinity, so the empty set is the maximum.
bool precedes(const IndexSet& e1, const IndexSet& e2);

struct PrecedesLess {
  bool operator()(const IndexSet& a, const IndexSet& b) const { return precedes(a, b); }
};

/// Jump indices J_xi = {j : g_j not inside g(xi) + g_{j-1}}, computed by
/// the prefix-rank scan of the definition. |J_xi| = rank B_xi.
/// Requires an adapted algebra.
IndexSet jump_set(const NilpotentAlgebra& alg, const Functional& xi);

struct Stratum {
  IndexSet e;
  std::vector<Functional> witnesses;  // up to the witness cap, re-checkable
};

struct StratificationReport {
  std::vector<Stratum> strata;  // sorted by precedes
  int search_height = 0;
  std::uint64_t seed = 0;
  /// True when every lattice point with |coords| <= height was visited.
  /// Sampling mode (large lattices) leaves this false: absence of a
  /// stratum from the report is then not evidence of emptiness.
  bool exhaustive = false;

  const Stratum* find(const IndexSet& e) const;
};

struct StratifyOptions {
  /// Exhaustive enumeration runs when m*(2h+1)^m stays within this.
  std::uint64_t budget = 4'000'000;
  /// Lattice points drawn in sampling mode (axis points are always added).
  std::size_t sample_count = 10'000;
  std::size_t witness_cap = 3;
};

/// Enumerates the jump sets realized on the integer lattice of the given
/// height: every point when affordable, otherwise a seeded sample plus all
/// axis points. Deterministic given (height, seed).
StratificationReport stratify(const NilpotentAlgebra& alg, int height, std::uint64_t seed,
                              const StratifyOptions& options = {});

/// Streaming variant: the full witness stream, uncapped, one callback per
/// visited lattice point in enumeration order. Returns the exhaustive flag.
bool stratify_visit(const NilpotentAlgebra& alg, int height, std::uint64_t seed,
                    const std::function<void(const IndexSet&, const Functional&)>& visit,
                    const StratifyOptions& options = {});

/// Number of distinct strata discovered; a lower bound for the coarse
/// length, exact when the realized jump sets were all found.
int coarse_length_lower_bound(const StratificationReport& report);

struct GenericStratumOptions {
  int coord_range = 1000;
  int max_draws = 200;
};

/// The jump set attained on a dense open set of functionals: draws random
/// integer points, tracks the maximal B_xi rank, and returns once two
/// independent draws at that rank agree on the jump set.
/// Throws std::runtime_error when the retry budget is exhausted.
IndexSet generic_stratum(const NilpotentAlgebra& alg, std::uint64_t seed,
                         const GenericStratumOptions& options = {});

}  // namespace coadjoint

#endif
