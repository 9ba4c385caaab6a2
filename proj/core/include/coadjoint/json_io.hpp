#ifndef COADJOINT_JSON_IO_HPP
#define COADJOINT_JSON_IO_HPP

#include <json.hpp>

#include "coadjoint/catalog.hpp"
#include "coadjoint/heisenberg_dual.hpp"
#include "coadjoint/invariants.hpp"
#include "coadjoint/stratification.hpp"

namespace coadjoint {

using nlohmann::json;

/// Rationals in JSON: an integer when it fits, otherwise a "p/q" string.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json functional_to_json(const Functional& xi);
Functional functional_from_json(const json& j);

/// Algebra schema:
///   {"dim": m, "brackets": [{"i": i, "j": j, "coeffs": {"k": coeff, ...}}]}
/// with 1-based indices; only one of (i, j), (j, i) needs to be listed and
/// antisymmetry fills the other.
json algebra_to_json(const NilpotentAlgebra& alg);
NilpotentAlgebra algebra_from_json(const json& j);

json validation_to_json(const ValidationReport& report);

/// {"strata":[{"e":[...],"witnesses":[[...],...]}],"height":h,"seed":s,"exhaustive":b}
json report_to_json(const StratificationReport& report);
StratificationReport report_from_json(const json& j);

json bundle_to_json(const InvariantBundle& bundle);

/// {"n":n,"part1":[{"lo":...,"hi":...,"lo_closed":b,"hi_closed":b}],
///  "part2":"EMPTY"|"ALL"|[{"min":[...],"max":[...],"closed":b}]}
/// Bounds are rationals or "-inf"/"inf". A box whose faces are not
/// uniformly open or closed is written with "min_closed"/"max_closed"
/// arrays instead of the single flag; both forms are accepted on input.
json dual_subset_to_json(const dual::DualSubset& s);
dual::DualSubset dual_subset_from_json(const json& j);

json catalog_entry_to_json(const CatalogEntry& entry);

}  // namespace coadjoint

#endif
