#include "coadjoint/stratification.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace coadjoint {

namespace {

void require_adapted(const NilpotentAlgebra& alg, const char* op) {
  if (!is_adapted(alg))
    throw std::invalid_argument(std::string(op) + ": algebra basis is not adapted "
                                                  "(re-base with jordan_holder_basis first)");
}

Functional lattice_point(std::mt19937_64& rng, std::size_t m, int height) {
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(height) + 1;
  Functional xi(m);
  for (std::size_t i = 0; i < m; ++i)
    xi[i] = Rational(static_cast<long>(rng() % width) - height);
  return xi;
}

}  // namespace

IndexSet::IndexSet(std::vector<int> e) : elems(std::move(e)) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
}

bool IndexSet::contains(int j) const {
  return std::binary_search(elems.begin(), elems.end(), j);
}

std::string IndexSet::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) os << ",";
    os << elems[i];
  }
  os << "}";
  return os.str();
}

bool precedes(const IndexSet& e1, const IndexSet& e2) {
  // min(e1 \ e2) < min(e2 \ e1); both differences empty iff e1 == e2.
  std::size_t a = 0, b = 0;
  while (a < e1.elems.size() && b < e2.elems.size()) {
    if (e1.elems[a] == e2.elems[b]) {
      ++a;
      ++b;
    } else if (e1.elems[a] < e2.elems[b]) {
      return true;  // e1.elems[a] is the smaller symmetric-difference element
    } else {
      return false;
    }
  }
  return a < e1.elems.size();  // leftover in e1 beats min(empty) = infinity
}

IndexSet jump_set(const NilpotentAlgebra& alg, const Functional& xi) {
  require_adapted(alg, "jump_set");
  const std::size_t m = alg.dim();
  const Subspace stab = stabilizer(alg, xi);

  SpanBuilder span(m);
  for (std::size_t r = 0; r < stab.dim(); ++r) span.insert(stab.basis().row(r));

  std::vector<int> jumps;
  for (std::size_t j = 0; j < m; ++j) {
    Vec e(m, Rational(0));
    e[j] = 1;
    if (span.insert(std::move(e))) jumps.push_back(static_cast<int>(j) + 1);
  }
  return IndexSet(std::move(jumps));
}

const Stratum* StratificationReport::find(const IndexSet& e) const {
  for (const auto& s : strata)
    if (s.e == e) return &s;
  return nullptr;
}

StratificationReport stratify(const NilpotentAlgebra& alg, int height, std::uint64_t seed,
                              const StratifyOptions& options) {
  require_adapted(alg, "stratify");
  if (height < 1) throw std::invalid_argument("stratify: height must be positive");
  const std::size_t m = alg.dim();

  StratificationReport report;
  report.search_height = height;
  report.seed = seed;

  // m * (2h+1)^m against the budget, watching for overflow.
  const std::uint64_t width = 2 * static_cast<std::uint64_t>(height) + 1;
  std::uint64_t cost = m;
  bool affordable = true;
  for (std::size_t i = 0; i < m && affordable; ++i) {
    if (cost > options.budget / width) affordable = false;
    else cost *= width;
  }
  report.exhaustive = affordable;

  std::map<IndexSet, std::vector<Functional>, PrecedesLess> found;
  const auto visit = [&](const Functional& xi) {
    IndexSet e = jump_set(alg, xi);
    auto& witnesses = found[std::move(e)];
    if (witnesses.size() < options.witness_cap) witnesses.push_back(xi);
  };

  if (affordable) {
    // Odometer over {-h..h}^m in lexicographic order.
    std::vector<long> coords(m, -height);
    Functional xi(m);
    for (;;) {
      for (std::size_t i = 0; i < m; ++i) xi[i] = Rational(coords[i]);
      visit(xi);
      std::size_t i = m;
      while (i > 0 && coords[i - 1] == height) coords[--i] = -height;
      if (i == 0) break;
      ++coords[i - 1];
    }
  } else {
    // Axis points (origin included) keep the character stratum and every
    // single-coordinate stratum in view, then a seeded sample.
    Functional zero(m, Rational(0));
    visit(zero);
    for (std::size_t i = 0; i < m; ++i)
      for (long t = -height; t <= height; ++t) {
        if (t == 0) continue;
        Functional xi(m, Rational(0));
        xi[i] = Rational(t);
        visit(xi);
      }
    std::mt19937_64 rng(seed);
    for (std::size_t n = 0; n < options.sample_count; ++n) visit(lattice_point(rng, m, height));
  }

  for (auto& [e, witnesses] : found) report.strata.push_back({e, std::move(witnesses)});
  return report;
}

int coarse_length_lower_bound(const StratificationReport& report) {
  return static_cast<int>(report.strata.size());
}

IndexSet generic_stratum(const NilpotentAlgebra& alg, std::uint64_t seed,
                         const GenericStratumOptions& options) {
  require_adapted(alg, "generic_stratum");
  const std::size_t m = alg.dim();
  std::mt19937_64 rng(seed);

  std::size_t best_rank = 0;
  bool have_best = false;
  std::map<IndexSet, int, PrecedesLess> agreement;  // per jump set at the best rank

  for (int draw = 0; draw < options.max_draws; ++draw) {
    const Functional xi = lattice_point(rng, m, options.coord_range);
    const IndexSet e = jump_set(alg, xi);
    const std::size_t r = e.size();  // = rank B_xi
    if (!have_best || r > best_rank) {
      best_rank = r;
      have_best = true;
      agreement.clear();
    }
    if (r == best_rank && ++agreement[e] >= 2) return e;
  }
  throw std::runtime_error(
      "generic_stratum: no two draws at the maximal rank agreed within the retry budget "
      "(degenerate sampling range?)");
}

}  // namespace coadjoint
