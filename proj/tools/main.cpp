// coadjoint: exact invariants of nilpotent Lie groups from the command line.
//
// Subcommands: validate, invariants, stratify, jump, orbit, heis, catalog.
// Exit codes: 0 success, 1 validation/computation failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "coadjoint/json_io.hpp"

using namespace coadjoint;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;
constexpr int kDefaultHeight = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("COADJOINT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("COADJOINT_SEED is not an integer: " + std::string(env));
    }
  }
  return kDefaultSeed;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

struct AlgebraSource {
  std::string algebra_path;
  std::string catalog_name;

  void add_flags(CLI::App* app) {
    app->add_option("--algebra", algebra_path, "path to an algebra JSON file");
    app->add_option("--catalog", catalog_name, "catalog name, e.g. heisenberg:2");
  }
};

struct LoadedAlgebra {
  NilpotentAlgebra algebra;
  bool rebased = false;
  Matrix new_basis;  // rows = adapted basis in the input coordinates
};

/// Loads, validates, and (when only adaptedness fails) re-bases onto an
/// adapted basis. Violations other than adaptedness are fatal.
LoadedAlgebra load_algebra(const AlgebraSource& source) {
  if (source.algebra_path.empty() == source.catalog_name.empty())
    throw UsageError("exactly one of --algebra and --catalog is required");

  NilpotentAlgebra alg = source.algebra_path.empty()
                             ? catalog::lookup(source.catalog_name).algebra
                             : algebra_from_json(read_json_file(source.algebra_path));

  const ValidationReport report = validate(alg);
  bool only_adaptedness = true;
  for (const auto& v : report.violations)
    if (v.kind != ViolationKind::Adaptedness) only_adaptedness = false;
  if (!report.ok() && !only_adaptedness) {
    std::cerr << "algebra fails validation:\n";
    for (const auto& v : report.violations)
      std::cerr << "  " << violation_kind_name(v.kind) << " (" << v.i << "," << v.j << "," << v.k
                << "): " << v.detail << "\n";
    std::exit(1);
  }
  if (report.ok()) return {std::move(alg), false, Matrix::identity(alg.dim())};

  RebasedAlgebra rebased = jordan_holder_basis(alg);
  std::cerr << "note: input basis is not adapted; re-based onto an adapted basis "
               "(coordinates in the output refer to the new basis)\n";
  return {std::move(rebased.algebra), true, std::move(rebased.new_basis)};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run_validate(const AlgebraSource& source, bool as_json) {
  if (source.algebra_path.empty() == source.catalog_name.empty())
    throw UsageError("exactly one of --algebra and --catalog is required");
  const NilpotentAlgebra alg = source.algebra_path.empty()
                                   ? catalog::lookup(source.catalog_name).algebra
                                   : algebra_from_json(read_json_file(source.algebra_path));
  const ValidationReport report = validate(alg);
  if (as_json) {
    emit(validation_to_json(report));
  } else if (report.ok()) {
    std::cout << "ok\n";
  } else {
    for (const auto& v : report.violations)
      std::cout << "violation: " << violation_kind_name(v.kind) << " (" << v.i << "," << v.j << ","
                << v.k << "): " << v.detail << "\n";
  }
  return report.ok() ? 0 : 1;
}

int run_invariants(const AlgebraSource& source, int height, std::uint64_t seed,
                   const std::string& mode, const std::vector<std::string>& stratum_dims,
                   bool as_json) {
  const LoadedAlgebra loaded = load_algebra(source);
  InvariantOptions options;
  options.height = height;
  options.seed = seed;
  options.mode = mode == "fine" ? BoundsMode::Fine : BoundsMode::Coarse;
  for (const std::string& item : stratum_dims) {
    const auto eq = item.rfind('=');
    if (eq == std::string::npos)
      throw UsageError("--stratum-dim expects e=d, e.g. --stratum-dim 2,3=1");
    std::vector<int> elems;
    std::istringstream in(item.substr(0, eq));
    std::string tok;
    while (std::getline(in, tok, ','))
      if (!tok.empty()) elems.push_back(std::stoi(tok));
    options.stratum_dims[IndexSet(std::move(elems))] = std::stoi(item.substr(eq + 1));
  }

  const InvariantBundle bundle = compute_invariants(loaded.algebra, options);
  if (as_json) {
    json j = bundle_to_json(bundle);
    j["rebased"] = loaded.rebased;
    emit(j);
  } else {
    std::cout << "dim g        " << bundle.dim_g << "\n"
              << "dim g/[g,g]  " << bundle.a << "\n"
              << "real rank    " << bundle.real_rank << "\n"
              << "stable rank  " << bundle.stable_rank << "\n"
              << "index        " << bundle.index << "\n"
              << "clgth >=     " << bundle.clgth_lower
              << (bundle.exhaustive ? "" : "  (sampled, not exhaustive)") << "\n"
              << "nuclear dim  in [" << bundle.nuclear_lower << ", " << bundle.nuclear_upper
              << "]  (" << (bundle.mode == BoundsMode::Coarse ? "coarse" : "fine") << ")\n";
  }
  return 0;
}

int run_stratify(const AlgebraSource& source, int height, std::uint64_t seed, bool as_json) {
  const LoadedAlgebra loaded = load_algebra(source);
  const StratificationReport report = stratify(loaded.algebra, height, seed);
  if (as_json) {
    emit(report_to_json(report));
  } else {
    std::cout << "strata (height " << height << ", seed " << seed
              << (report.exhaustive ? ", exhaustive" : ", sampled") << "):\n";
    for (const auto& s : report.strata) {
      std::cout << "  " << s.e.to_string() << "  witnesses:";
      for (const auto& w : s.witnesses) std::cout << " " << to_string(w);
      std::cout << "\n";
    }
    std::cout << "coarse length >= " << coarse_length_lower_bound(report) << "\n";
  }
  return 0;
}

Functional parse_xi(const std::string& text, const LoadedAlgebra& loaded) {
  Functional xi = parse_rational_list(text);
  if (xi.size() != loaded.algebra.dim())
    throw UsageError("--xi needs " + std::to_string(loaded.algebra.dim()) + " coordinates");
  if (loaded.rebased) xi = loaded.new_basis * xi;  // xi'_p = <xi, b_p>
  return xi;
}

int run_jump(const AlgebraSource& source, const std::string& xi_text, bool as_json) {
  const LoadedAlgebra loaded = load_algebra(source);
  const IndexSet e = jump_set(loaded.algebra, parse_xi(xi_text, loaded));
  if (as_json) {
    emit(json{{"e", e.elems}});
  } else {
    std::cout << "jump set: " << e.to_string() << "\n";
  }
  return 0;
}

int run_orbit(const AlgebraSource& source, const std::string& xi_text, const std::string& x_text,
              bool as_json) {
  const LoadedAlgebra loaded = load_algebra(source);
  const Functional xi = parse_xi(xi_text, loaded);
  Vec x = parse_rational_list(x_text);
  if (x.size() != loaded.algebra.dim())
    throw UsageError("--x needs " + std::to_string(loaded.algebra.dim()) + " coordinates");
  if (loaded.rebased) x = inverse(loaded.new_basis).transpose() * x;

  const Functional moved = coadjoint_act(loaded.algebra, x, xi);
  const IndexSet e = jump_set(loaded.algebra, moved);
  if (as_json) {
    emit(json{{"xi", functional_to_json(moved)}, {"e", e.elems}});
  } else {
    std::cout << "Ad*(exp x) xi = " << to_string(moved) << "\n"
              << "jump set: " << e.to_string() << "\n";
  }
  return 0;
}

dual::DualSubset load_dual_subset(const std::string& path, int n_flag) {
  if (path.empty()) throw UsageError("--set is required");
  dual::DualSubset s = dual_subset_from_json(read_json_file(path));
  if (n_flag > 0 && static_cast<std::size_t>(n_flag) != s.n)
    throw UsageError("--n " + std::to_string(n_flag) + " does not match the set's n = " +
                     std::to_string(s.n));
  return s;
}

int run_heis_qc(const std::string& set_path, int n_flag, bool as_json) {
  const dual::QcDecision d = dual::is_quasi_compact(load_dual_subset(set_path, n_flag));
  if (as_json) {
    json reasons = json::array();
    for (auto r : d.reasons) reasons.push_back(dual::reason_code(r));
    emit(json{{"quasi_compact", d.quasi_compact}, {"reasons", std::move(reasons)}});
  } else {
    std::cout << (d.quasi_compact ? "quasi-compact" : "not quasi-compact") << "\n";
    for (auto r : d.reasons) std::cout << "  reason: " << dual::reason_code(r) << "\n";
  }
  return 0;
}

int run_heis_unary(const std::string& set_path, int n_flag, const std::string& op,
                   const std::string& t_text) {
  const dual::DualSubset s = load_dual_subset(set_path, n_flag);
  dual::DualSubset out;
  if (op == "closure") {
    out = dual::closure(s);
  } else {  // act
    out = dual::r_act(parse_rational(t_text), s);
  }
  emit(dual_subset_to_json(out));
  return 0;
}

int run_heis_binary(const std::string& set_path, const std::string& with_path, int n_flag,
                    const std::string& op) {
  if (with_path.empty()) throw UsageError("--with is required");
  const dual::DualSubset s = load_dual_subset(set_path, n_flag);
  const dual::DualSubset t = load_dual_subset(with_path, n_flag);
  emit(dual_subset_to_json(op == "union" ? dual::unite(s, t) : dual::intersect(s, t)));
  return 0;
}

int run_catalog_list(bool as_json) {
  if (as_json) {
    json out = json::array();
    for (const auto& name : catalog::family_names()) out.push_back(name);
    emit(out);
  } else {
    std::cout << "abelian:<n>      the abelian algebra R^n\n"
              << "heisenberg:<n>   the Heisenberg algebra of dimension 2n+1\n"
              << "filiform:<m>     the filiform algebra of dimension m (m >= 3)\n"
              << "ut:<k>           strictly upper-triangular k x k matrices (k >= 3)\n"
              << "g0:<s>,<t>       the 6-dimensional two-step family (s, t nonzero)\n"
              << "g:<s>,<t>        its 7-dimensional central extension\n";
  }
  return 0;
}

int run_catalog_get(const std::string& name, bool as_json) {
  const CatalogEntry entry = catalog::lookup(name);
  if (as_json) {
    emit(catalog_entry_to_json(entry));
  } else {
    std::cout << catalog_entry_to_json(entry).dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact orbit-method invariants of nilpotent Lie groups"};
  app.require_subcommand(1);

  bool as_json = false;
  int height = kDefaultHeight;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string mode = "coarse";
  std::string xi_text, x_text, t_text;
  std::string set_path, with_path;
  int n_flag = 0;
  std::string catalog_get_name;
  std::vector<std::string> stratum_dims;
  AlgebraSource source;

  const auto add_common = [&](CLI::App* sub, bool with_source = true) {
    sub->add_flag("--json", as_json, "machine-readable output");
    if (with_source) source.add_flags(sub);
    return sub;
  };

  auto* cmd_validate = add_common(app.add_subcommand("validate", "check the algebra invariants"));
  auto* cmd_invariants = add_common(app.add_subcommand("invariants", "compute the invariant bundle"));
  cmd_invariants->add_option("--height", height, "lattice height for stratification");
  cmd_invariants->add_option("--seed", seed, "sampling seed")->each([&](const std::string&) { seed_given = true; });
  cmd_invariants->add_option("--mode", mode, "coarse|fine nuclear bounds")
      ->check(CLI::IsMember({"coarse", "fine"}));
  cmd_invariants->add_option("--stratum-dim", stratum_dims,
                             "stratum dimension e=d for fine mode, e.g. 2,3=1 (repeatable)");
  auto* cmd_stratify = add_common(app.add_subcommand("stratify", "enumerate jump-set strata"));
  cmd_stratify->add_option("--height", height, "lattice height");
  cmd_stratify->add_option("--seed", seed, "sampling seed")->each([&](const std::string&) { seed_given = true; });
  auto* cmd_jump = add_common(app.add_subcommand("jump", "jump set of a functional"));
  cmd_jump->add_option("--xi", xi_text, "functional coordinates, e.g. 1,0,0,0")->required();
  auto* cmd_orbit = add_common(app.add_subcommand("orbit", "coadjoint action on a functional"));
  cmd_orbit->add_option("--xi", xi_text, "functional coordinates")->required();
  cmd_orbit->add_option("--x", x_text, "algebra element coordinates")->required();

  auto* cmd_heis = app.add_subcommand("heis", "Heisenberg dual topology queries");
  cmd_heis->require_subcommand(1);
  const auto add_heis_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "machine-readable output");
    sub->add_option("--n", n_flag, "ambient n (checked against the set file)");
    sub->add_option("--set", set_path, "dual subset JSON file")->required();
    return sub;
  };
  auto* heis_qc = add_heis_common(cmd_heis->add_subcommand("qc", "decide quasi-compactness"));
  auto* heis_closure = add_heis_common(cmd_heis->add_subcommand("closure", "closure in the dual"));
  auto* heis_union = add_heis_common(cmd_heis->add_subcommand("union", "union of two subsets"));
  heis_union->add_option("--with", with_path, "second dual subset JSON file")->required();
  auto* heis_intersect =
      add_heis_common(cmd_heis->add_subcommand("intersect", "intersection of two subsets"));
  heis_intersect->add_option("--with", with_path, "second dual subset JSON file")->required();
  auto* heis_act = add_heis_common(cmd_heis->add_subcommand("act", "scale by t"));
  heis_act->add_option("--t", t_text, "scaling factor (rational)")->required();

  auto* cmd_catalog = app.add_subcommand("catalog", "built-in example algebras");
  cmd_catalog->require_subcommand(1);
  auto* catalog_list = cmd_catalog->add_subcommand("list", "list the families");
  catalog_list->add_flag("--json", as_json, "machine-readable output");
  auto* catalog_get = cmd_catalog->add_subcommand("get", "emit one entry with expected values");
  catalog_get->add_flag("--json", as_json, "machine-readable output");
  catalog_get->add_option("name", catalog_get_name, "entry name, e.g. filiform:5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!seed_given) seed = default_seed();
    if (cmd_validate->parsed()) return run_validate(source, as_json);
    if (cmd_invariants->parsed())
      return run_invariants(source, height, seed, mode, stratum_dims, as_json);
    if (cmd_stratify->parsed()) return run_stratify(source, height, seed, as_json);
    if (cmd_jump->parsed()) return run_jump(source, xi_text, as_json);
    if (cmd_orbit->parsed()) return run_orbit(source, xi_text, x_text, as_json);
    if (cmd_heis->parsed()) {
      if (heis_qc->parsed()) return run_heis_qc(set_path, n_flag, as_json);
      if (heis_closure->parsed()) return run_heis_unary(set_path, n_flag, "closure", "");
      if (heis_act->parsed()) return run_heis_unary(set_path, n_flag, "act", t_text);
      if (heis_union->parsed()) return run_heis_binary(set_path, with_path, n_flag, "union");
      if (heis_intersect->parsed()) return run_heis_binary(set_path, with_path, n_flag, "intersect");
    }
    if (cmd_catalog->parsed()) {
      if (catalog_list->parsed()) return run_catalog_list(as_json);
      if (catalog_get->parsed()) return run_catalog_get(catalog_get_name, as_json);
    }
    throw UsageError("no subcommand selected");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownStratumDimension& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
