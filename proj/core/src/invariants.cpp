#include "coadjoint/invariants.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace coadjoint {

namespace {

Functional random_point(std::mt19937_64& rng, std::size_t m, int range) {
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(range) + 1;
  Functional xi(m);
  for (std::size_t i = 0; i < m; ++i)
    xi[i] = Rational(static_cast<long>(rng() % width) - range);
  return xi;
}

}  // namespace

int real_rank(const NilpotentAlgebra& alg) {
  return static_cast<int>(alg.dim() - derived_subalgebra(alg).dim());
}

int stable_rank(const NilpotentAlgebra& alg) {
  if (alg.dim() == 1) return 1;
  const int r = real_rank(alg);
  return 1 + std::max(r / 2, 1);
}

IndexDisagreement::IndexDisagreement(const IndexReport& r)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "index routes disagree (insufficient sampling; retry with a larger range): "
           << "generic-stratum " << r.by_generic_stratum << ", orbit-dim " << r.by_orbit_dim
           << ", min-stabilizer " << r.by_min_stabilizer << ", max-rank " << r.by_max_rank;
        return os.str();
      }()),
      report(r) {}

IndexReport index_crosscheck(const NilpotentAlgebra& alg, std::uint64_t seed,
                             const IndexOptions& options) {
  const std::size_t m = alg.dim();
  IndexReport report;
  report.by_generic_stratum = static_cast<int>(m - generic_stratum(alg, seed).size());

  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t max_orbit_dim = 0;
  std::size_t min_stab_dim = m;
  std::size_t max_rank = 0;
  for (std::size_t n = 0; n < options.sample_count; ++n) {
    const Functional xi = random_point(rng, m, options.coord_range);
    max_orbit_dim = std::max(max_orbit_dim, jump_set(alg, xi).size());
    min_stab_dim = std::min(min_stab_dim, stabilizer(alg, xi).dim());
    max_rank = std::max(max_rank, rank(b_matrix(alg, xi)));
  }
  report.by_orbit_dim = static_cast<int>(m - max_orbit_dim);
  report.by_min_stabilizer = static_cast<int>(min_stab_dim);
  report.by_max_rank = static_cast<int>(m - max_rank);
  report.agreed = report.by_generic_stratum == report.by_orbit_dim &&
                  report.by_orbit_dim == report.by_min_stabilizer &&
                  report.by_min_stabilizer == report.by_max_rank;
  return report;
}

int index(const NilpotentAlgebra& alg, std::uint64_t seed, const IndexOptions& options) {
  const IndexReport report = index_crosscheck(alg, seed, options);
  if (!report.agreed) throw IndexDisagreement(report);
  return report.value();
}

UnknownStratumDimension::UnknownStratumDimension(const IndexSet& e)
    : std::runtime_error("unknown stratum dimension for " + e.to_string() +
                         " (pass it explicitly; only the generic and character strata "
                         "have built-in exact dimensions)"),
      stratum(e) {}

NuclearBounds nuclear_bounds(const NilpotentAlgebra& alg, BoundsMode mode,
                             const StratificationReport& report, const IndexReport& index_report,
                             const std::map<IndexSet, int, PrecedesLess>& stratum_dims) {
  const int m = static_cast<int>(alg.dim());
  const int a = real_rank(alg);
  const bool abelian = (a == m);

  if (mode == BoundsMode::Coarse) {
    if (abelian) return {m, m};  // continuous trace: dual = R^m
    // The rough universal estimate: 2 <= dim_n <= dim g + clgth - 1. Fine
    // mode recovers the sharper character-space lower bound a.
    return {2, m + coarse_length_lower_bound(report) - 1};
  }

  if (report.strata.empty()) throw std::invalid_argument("nuclear_bounds: empty stratification");

  const IndexSet generic = report.strata.front().e;
  int max_dim = 0;
  int sum_dim = 0;
  for (const auto& stratum : report.strata) {
    int d;
    if (auto it = stratum_dims.find(stratum.e); it != stratum_dims.end()) {
      d = it->second;
    } else if (stratum.e.empty()) {
      d = a;  // characters ~ (g/[g,g])*
    } else if (stratum.e == generic) {
      d = index_report.value();  // the generic orbit space has dimension ind G
    } else {
      throw UnknownStratumDimension(stratum.e);
    }
    max_dim = std::max(max_dim, d);
    sum_dim += d;
  }
  return {max_dim, sum_dim + static_cast<int>(report.strata.size()) - 1};
}

int estimate_stratum_dim(const NilpotentAlgebra& alg, const IndexSet& e,
                         const Functional& witness, std::uint64_t seed) {
  const std::size_t m = alg.dim();
  if (jump_set(alg, witness) != e)
    throw std::invalid_argument("estimate_stratum_dim: witness does not lie in the stratum");

  // Directions along which a small step keeps the jump set; their span's
  // dimension, minus the orbit dimension, approximates dim Xi_e.
  std::mt19937_64 rng(seed);
  SpanBuilder preserved(m);
  const Rational step(1, 64);
  for (int trial = 0; trial < static_cast<int>(8 * m) && preserved.rank() < m; ++trial) {
    Vec dir = random_point(rng, m, 4);
    if (is_zero(dir)) continue;
    Functional moved = witness;
    Vec scaled = step * dir;
    moved += scaled;
    if (jump_set(alg, moved) == e) preserved.insert(dir);
  }
  const int orbit_dim = static_cast<int>(e.size());
  return std::max(0, static_cast<int>(preserved.rank()) - orbit_dim);
}

InvariantBundle compute_invariants(const NilpotentAlgebra& alg, const InvariantOptions& options) {
  InvariantBundle bundle;
  bundle.dim_g = static_cast<int>(alg.dim());
  bundle.a = real_rank(alg);
  bundle.real_rank = bundle.a;
  bundle.stable_rank = stable_rank(alg);
  bundle.mode = options.mode;
  bundle.estimate_used = options.stratum_dims_estimated;

  const StratificationReport report = stratify(alg, options.height, options.seed, options.stratify);
  bundle.clgth_lower = coarse_length_lower_bound(report);
  bundle.exhaustive = report.exhaustive;

  bundle.index_report = index_crosscheck(alg, options.seed, options.index);
  if (!bundle.index_report.agreed) throw IndexDisagreement(bundle.index_report);
  bundle.index = bundle.index_report.value();

  const NuclearBounds nb =
      nuclear_bounds(alg, options.mode, report, bundle.index_report, options.stratum_dims);
  bundle.nuclear_lower = nb.lower;
  bundle.nuclear_upper = nb.upper;
  return bundle;
}

}  // namespace coadjoint
