#include "coadjoint/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace coadjoint {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) malformed(std::string(key) + " must be an integer");
  return j[key].get<int>();
}

}  // namespace

json rational_to_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) {
    return json(static_cast<std::int64_t>(r.get_num().get_si()));
  }
  return json(to_string(r));
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  malformed("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

json functional_to_json(const Functional& xi) {
  json out = json::array();
  for (const Rational& r : xi) out.push_back(rational_to_json(r));
  return out;
}

Functional functional_from_json(const json& j) {
  if (!j.is_array()) malformed("functional must be an array of rationals");
  Functional xi;
  for (const auto& v : j) xi.push_back(rational_from_json(v));
  return xi;
}

json algebra_to_json(const NilpotentAlgebra& alg) {
  const std::size_t m = alg.dim();
  json brackets = json::array();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      json coeffs = json::object();
      for (std::size_t k = 0; k < m; ++k)
        if (alg.c(i, j, k) != 0) coeffs[std::to_string(k + 1)] = rational_to_json(alg.c(i, j, k));
      if (!coeffs.empty())
        brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"coeffs", std::move(coeffs)}});
    }
  return {{"dim", m}, {"brackets", std::move(brackets)}};
}

NilpotentAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) malformed("algebra document must be an object");
  const int m = int_field(j, "dim");
  if (m < 1) malformed("dim must be >= 1");
  NilpotentAlgebra alg(static_cast<std::size_t>(m));
  if (!j.contains("brackets")) return alg;
  if (!j["brackets"].is_array()) malformed("brackets must be an array");

  std::vector<bool> seen(static_cast<std::size_t>(m) * m, false);
  for (const auto& entry : j["brackets"]) {
    const int i = int_field(entry, "i");
    const int jj = int_field(entry, "j");
    if (i < 1 || i > m || jj < 1 || jj > m) malformed("bracket index out of range 1..dim");
    if (i == jj) malformed("bracket [X_i, X_i] must be zero; do not list i == j");
    const std::size_t a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(jj - 1);
    if (seen[a * m + b] || seen[b * m + a])
      malformed("duplicate bracket pair (" + std::to_string(i) + "," + std::to_string(jj) + ")");
    seen[a * m + b] = true;
    if (!entry.contains("coeffs") || !entry["coeffs"].is_object())
      malformed("bracket entry needs a coeffs object");
    for (const auto& [key, value] : entry["coeffs"].items()) {
      int k = 0;
      try {
        std::size_t used = 0;
        k = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        malformed("coeffs key '" + key + "' is not an index");
      }
      if (k < 1 || k > m) malformed("coeffs index out of range 1..dim");
      const Rational c = rational_from_json(value);
      alg.c(a, b, static_cast<std::size_t>(k - 1)) = c;
      alg.c(b, a, static_cast<std::size_t>(k - 1)) = -c;
    }
  }
  return alg;
}

json validation_to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json item = {{"kind", violation_kind_name(v.kind)}, {"detail", v.detail}};
    if (v.i || v.j || v.k) item["witness"] = {v.i, v.j, v.k};
    violations.push_back(std::move(item));
  }
  return {{"ok", report.ok()}, {"violations", std::move(violations)}};
}

json report_to_json(const StratificationReport& report) {
  json strata = json::array();
  for (const auto& s : report.strata) {
    json witnesses = json::array();
    for (const auto& w : s.witnesses) witnesses.push_back(functional_to_json(w));
    strata.push_back({{"e", s.e.elems}, {"witnesses", std::move(witnesses)}});
  }
  return {{"strata", std::move(strata)},
          {"height", report.search_height},
          {"seed", report.seed},
          {"exhaustive", report.exhaustive}};
}

StratificationReport report_from_json(const json& j) {
  StratificationReport report;
  report.search_height = int_field(j, "height");
  if (!j.contains("seed") || !j["seed"].is_number()) malformed("seed must be a number");
  report.seed = j["seed"].get<std::uint64_t>();
  if (!j.contains("exhaustive") || !j["exhaustive"].is_boolean()) malformed("exhaustive must be a boolean");
  report.exhaustive = j["exhaustive"].get<bool>();
  if (!j.contains("strata") || !j["strata"].is_array()) malformed("strata must be an array");
  for (const auto& s : j["strata"]) {
    Stratum stratum;
    if (!s.contains("e") || !s["e"].is_array()) malformed("stratum needs an index set e");
    stratum.e = IndexSet(s["e"].get<std::vector<int>>());
    if (s.contains("witnesses"))
      for (const auto& w : s["witnesses"]) stratum.witnesses.push_back(functional_from_json(w));
    report.strata.push_back(std::move(stratum));
  }
  return report;
}

json bundle_to_json(const InvariantBundle& bundle) {
  return {{"dim", bundle.dim_g},
          {"a", bundle.a},
          {"real_rank", bundle.real_rank},
          {"stable_rank", bundle.stable_rank},
          {"index", bundle.index},
          {"index_crosscheck",
           {{"by_generic_stratum", bundle.index_report.by_generic_stratum},
            {"by_orbit_dim", bundle.index_report.by_orbit_dim},
            {"by_min_stabilizer", bundle.index_report.by_min_stabilizer},
            {"by_max_rank", bundle.index_report.by_max_rank},
            {"agreed", bundle.index_report.agreed}}},
          {"clgth_lower", bundle.clgth_lower},
          {"nuclear_lower", bundle.nuclear_lower},
          {"nuclear_upper", bundle.nuclear_upper},
          {"mode", bundle.mode == BoundsMode::Coarse ? "coarse" : "fine"},
          {"exhaustive", bundle.exhaustive},
          {"estimate_used", bundle.estimate_used}};
}

namespace {

json bound_to_json(const dual::Bound& b) {
  switch (b.kind) {
    case dual::Bound::Kind::NegInf: return json("-inf");
    case dual::Bound::Kind::PosInf: return json("inf");
    case dual::Bound::Kind::Finite: return rational_to_json(b.value);
  }
  return json();
}

dual::Bound bound_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "-inf") return dual::Bound::neg_inf();
    if (s == "inf" || s == "+inf") return dual::Bound::pos_inf();
  }
  return dual::Bound::at(rational_from_json(j));
}

json box_to_json(const dual::Box& b) {
  json out = {{"min", functional_to_json(b.min)}, {"max", functional_to_json(b.max)}};
  if (b.uniformly_closed()) {
    out["closed"] = true;
  } else if (b.uniformly_open()) {
    out["closed"] = false;
  } else {
    out["min_closed"] = b.min_closed;
    out["max_closed"] = b.max_closed;
  }
  return out;
}

dual::Box box_from_json(const json& j) {
  dual::Box b;
  if (!j.contains("min") || !j.contains("max")) malformed("box needs min and max arrays");
  b.min = functional_from_json(j["min"]);
  b.max = functional_from_json(j["max"]);
  if (b.min.size() != b.max.size()) malformed("box min and max lengths differ");
  if (j.contains("min_closed") || j.contains("max_closed")) {
    if (!j.contains("min_closed") || !j.contains("max_closed"))
      malformed("per-face box flags need both min_closed and max_closed");
    b.min_closed = j["min_closed"].get<std::vector<bool>>();
    b.max_closed = j["max_closed"].get<std::vector<bool>>();
    if (b.min_closed.size() != b.min.size() || b.max_closed.size() != b.max.size())
      malformed("per-face flag arrays must match the box dimension");
  } else {
    if (!j.contains("closed") || !j["closed"].is_boolean())
      malformed("box needs a boolean closed flag");
    const bool closed = j["closed"].get<bool>();
    b.min_closed.assign(b.min.size(), closed);
    b.max_closed.assign(b.max.size(), closed);
  }
  return b;
}

}  // namespace

json dual_subset_to_json(const dual::DualSubset& s) {
  json part1 = json::array();
  for (const auto& iv : s.part1)
    part1.push_back({{"lo", bound_to_json(iv.lo)},
                     {"hi", bound_to_json(iv.hi)},
                     {"lo_closed", iv.lo.finite() && iv.lo_closed},
                     {"hi_closed", iv.hi.finite() && iv.hi_closed}});
  json part2;
  if (s.part2_all) {
    part2 = "ALL";
  } else if (s.part2.empty()) {
    part2 = "EMPTY";
  } else {
    part2 = json::array();
    for (const auto& b : s.part2) part2.push_back(box_to_json(b));
  }
  return {{"n", s.n}, {"part1", std::move(part1)}, {"part2", std::move(part2)}};
}

dual::DualSubset dual_subset_from_json(const json& j) {
  dual::DualSubset s;
  const int n = int_field(j, "n");
  if (n < 1) malformed("n must be >= 1");
  s.n = static_cast<std::size_t>(n);
  if (j.contains("part1")) {
    if (!j["part1"].is_array()) malformed("part1 must be an array of intervals");
    for (const auto& item : j["part1"]) {
      dual::Interval iv;
      if (!item.contains("lo") || !item.contains("hi")) malformed("interval needs lo and hi");
      iv.lo = bound_from_json(item["lo"]);
      iv.hi = bound_from_json(item["hi"]);
      iv.lo_closed = item.value("lo_closed", false);
      iv.hi_closed = item.value("hi_closed", false);
      s.part1.push_back(iv);
    }
  }
  if (j.contains("part2")) {
    const json& p2 = j["part2"];
    if (p2.is_string()) {
      const std::string tag = p2.get<std::string>();
      if (tag == "ALL") s.part2_all = true;
      else if (tag != "EMPTY") malformed("part2 must be \"EMPTY\", \"ALL\", or a box array");
    } else if (p2.is_array()) {
      for (const auto& item : p2) {
        dual::Box b = box_from_json(item);
        if (b.dim() != 2 * s.n) malformed("box dimension must be 2n");
        s.part2.push_back(std::move(b));
      }
    } else {
      malformed("part2 must be \"EMPTY\", \"ALL\", or a box array");
    }
  }
  return dual::canonicalize(std::move(s));
}

json catalog_entry_to_json(const CatalogEntry& entry) {
  const auto expected_field = [](const std::optional<ExpectedValue>& v) -> json {
    if (!v) return nullptr;
    return {{"value", v->value},
            {"origin", v->origin == Origin::ClosedForm ? "closed-form" : "pinned"},
            {"note", v->note}};
  };
  json expected = json::object();
  if (entry.expected.dim) expected["dim"] = expected_field(entry.expected.dim);
  if (entry.expected.real_rank) expected["real_rank"] = expected_field(entry.expected.real_rank);
  if (entry.expected.stable_rank) expected["stable_rank"] = expected_field(entry.expected.stable_rank);
  if (entry.expected.index) expected["index"] = expected_field(entry.expected.index);
  if (entry.expected.clgth) expected["clgth"] = expected_field(entry.expected.clgth);
  return {{"name", entry.name},
          {"algebra", algebra_to_json(entry.algebra)},
          {"expected", std::move(expected)}};
}

}  // namespace coadjoint
