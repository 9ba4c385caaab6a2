#include "coadjoint/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace coadjoint::catalog {

namespace {

ExpectedValue closed_form(int value, std::string note) {
  return {value, Origin::ClosedForm, std::move(note)};
}

ExpectedValue pinned(int value, std::string note) {
  return {value, Origin::Pinned, std::move(note)};
}

int stable_rank_formula(int dim, int real_rank) {
  return dim == 1 ? 1 : 1 + std::max(real_rank / 2, 1);
}

}  // namespace

CatalogEntry abelian(int n) {
  if (n < 1) throw std::invalid_argument("abelian: n must be >= 1");
  CatalogEntry e{"abelian:" + std::to_string(n), NilpotentAlgebra(n), {}};
  e.expected.dim = closed_form(n, "by construction");
  e.expected.real_rank = closed_form(n, "commutative: the whole algebra is the character space");
  e.expected.stable_rank = closed_form(stable_rank_formula(n, n), "rank formula, commutative case");
  e.expected.index = closed_form(n, "every coadjoint orbit is a singleton");
  e.expected.clgth = closed_form(1, "the empty jump set is the only stratum");
  return e;
}

CatalogEntry heisenberg(int n) {
  if (n < 1) throw std::invalid_argument("heisenberg: n must be >= 1");
  const int m = 2 * n + 1;
  NilpotentAlgebra alg(m);
  for (int j = 1; j <= n; ++j) {
    // 1-based: [X_{n+1+j}, X_{1+j}] = X_1.
    alg.set_bracket(n + j, j, {{0, Rational(1)}});
  }
  CatalogEntry e{"heisenberg:" + std::to_string(n), std::move(alg), {}};
  e.expected.dim = closed_form(m, "by construction");
  e.expected.real_rank = closed_form(2 * n, "derived algebra = center, dimension 1");
  e.expected.stable_rank = closed_form(1 + std::max(n, 1), "rank formula at r = 2n");
  e.expected.index = closed_form(1, "generic orbits are the 2n-dimensional hyperplanes, "
                                    "one per nonzero central parameter");
  e.expected.clgth = pinned(2, "exhaustive height-1 stratification");
  return e;
}

CatalogEntry filiform(int m) {
  if (m < 3) throw std::invalid_argument("filiform: m must be >= 3");
  NilpotentAlgebra alg(m);
  for (int j = 2; j <= m - 1; ++j) {
    // [X_m, X_j] = X_{j-1}; the j = 1 relation is [X_m, X_1] = 0.
    alg.set_bracket(m - 1, j - 1, {{static_cast<std::size_t>(j - 2), Rational(1)}});
  }
  CatalogEntry e{"filiform:" + std::to_string(m), std::move(alg), {}};
  e.expected.dim = closed_form(m, "by construction");
  e.expected.real_rank = closed_form(2, "derived algebra is spanned by X_1..X_{m-2}");
  e.expected.stable_rank = closed_form(2, "rank formula at r = 2");
  e.expected.index = closed_form(m - 2, "all nontrivial coadjoint orbits are 2-dimensional");
  e.expected.clgth = closed_form(m - 1, "jump sets {j, m} for j = 2..m-1 plus the empty set");
  return e;
}

CatalogEntry ut(int k) {
  if (k < 3) throw std::invalid_argument("ut: k must be >= 3");
  // Matrix units E_{ij}, i < j, ordered by decreasing j - i, then by
  // decreasing (i, j) within a diagonal.
  std::vector<std::pair<int, int>> units;
  for (int gap = k - 1; gap >= 1; --gap)
    for (int i = k - gap; i >= 1; --i) units.emplace_back(i, i + gap);

  const int m = static_cast<int>(units.size());
  const auto position = [&](int i, int j) -> int {
    for (int p = 0; p < m; ++p)
      if (units[p] == std::make_pair(i, j)) return p;
    return -1;
  };

  NilpotentAlgebra alg(m);
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb.
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      const auto [a, b] = units[p];
      const auto [c, d] = units[q];
      std::vector<std::pair<std::size_t, Rational>> terms;
      if (b == c) terms.emplace_back(position(a, d), Rational(1));
      if (d == a) terms.emplace_back(position(c, b), Rational(-1));
      if (!terms.empty()) alg.set_bracket(p, q, terms);
    }

  CatalogEntry e{"ut:" + std::to_string(k), std::move(alg), {}};
  e.expected.dim = closed_form(m, "k(k-1)/2 strictly upper-triangular entries");
  e.expected.real_rank = closed_form(k - 1, "the derived algebra misses exactly the first "
                                            "superdiagonal");
  e.expected.stable_rank = closed_form(stable_rank_formula(m, k - 1), "rank formula at r = k-1");
  e.expected.index = pinned(k / 2, "maximal B_xi rank over random functionals; equals the "
                                   "number of strictly-upper antidiagonal entries");
  return e;
}

CatalogEntry g0_st(const Rational& s, const Rational& t) {
  if (s == 0 || t == 0) throw std::invalid_argument("g0_st: s and t must be nonzero");
  NilpotentAlgebra alg(6);
  alg.set_bracket(5, 4, {{2, s}});      // [X6, X5] = s X3
  alg.set_bracket(5, 3, {{1, s + t}});  // [X6, X4] = (s+t) X2
  alg.set_bracket(4, 3, {{0, t}});      // [X5, X4] = t X1
  CatalogEntry e{"g0:" + to_string(s) + "," + to_string(t), std::move(alg), {}};
  e.expected.dim = closed_form(6, "by construction");
  const int derived_dim = 2 + (s + t != 0 ? 1 : 0);
  e.expected.real_rank = closed_form(6 - derived_dim, "derived algebra spanned by the bracket "
                                                      "images s X3, (s+t) X2, t X1");
  e.expected.stable_rank = closed_form(stable_rank_formula(6, 6 - derived_dim), "rank formula");
  e.expected.index = pinned(4, "B_xi is supported on the 3x3 block over X4,X5,X6, so its rank "
                               "is at most 2");
  return e;
}

CatalogEntry g_st(const Rational& s, const Rational& t) {
  if (s == 0 || t == 0) throw std::invalid_argument("g_st: s and t must be nonzero");
  // Basis: Z (central, listed first), then X1..X6 of g0(s,t).
  NilpotentAlgebra alg(7);
  alg.set_bracket(6, 5, {{3, s}});      // [X6, X5] = s X3
  alg.set_bracket(6, 4, {{2, s + t}});  // [X6, X4] = (s+t) X2
  alg.set_bracket(5, 4, {{1, t}});      // [X5, X4] = t X1
  // The antidiagonal cocycle: [X1, X6] = [X2, X5] = [X3, X4] = Z.
  alg.set_bracket(1, 6, {{0, Rational(1)}});
  alg.set_bracket(2, 5, {{0, Rational(1)}});
  alg.set_bracket(3, 4, {{0, Rational(1)}});
  CatalogEntry e{"g:" + to_string(s) + "," + to_string(t), std::move(alg), {}};
  e.expected.dim = closed_form(7, "central extension of the 6-dimensional family");
  const int derived_dim = 3 + (s + t != 0 ? 1 : 0);
  e.expected.real_rank = closed_form(7 - derived_dim, "derived algebra spanned by Z and the "
                                                      "g0 bracket images");
  e.expected.stable_rank = closed_form(stable_rank_formula(7, 7 - derived_dim), "rank formula");
  e.expected.index = closed_form(1, "three-step with one-dimensional center: the cocycle makes "
                                    "B_xi nondegenerate on g/z whenever xi(Z) != 0");
  return e;
}

std::vector<std::string> family_names() {
  return {"abelian", "heisenberg", "filiform", "ut", "g0", "g"};
}

CatalogEntry lookup(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);

  const auto int_param = [&](const char* family) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(params, &used);
      if (used != params.size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(family) + ": expected an integer parameter, got '" +
                                  params + "'");
    }
  };
  const auto rational_pair = [&](const char* family) {
    const Vec values = [&] {
      try {
        return parse_rational_list(params);
      } catch (const std::exception&) {
        return Vec{};
      }
    }();
    if (values.size() != 2)
      throw std::invalid_argument(std::string(family) + ": expected parameters s,t, got '" +
                                  params + "'");
    return std::make_pair(values[0], values[1]);
  };

  if (name == "abelian") return abelian(int_param("abelian"));
  if (name == "heisenberg") return heisenberg(int_param("heisenberg"));
  if (name == "filiform") return filiform(int_param("filiform"));
  if (name == "ut") return ut(int_param("ut"));
  if (name == "g0") {
    const auto [s, t] = rational_pair("g0");
    return g0_st(s, t);
  }
  if (name == "g") {
    const auto [s, t] = rational_pair("g");
    return g_st(s, t);
  }
  throw std::invalid_argument("unknown catalog name '" + name + "'");
}

std::vector<CatalogEntry> test_roster() {
  std::vector<CatalogEntry> entries;
  entries.push_back(abelian(1));
  entries.push_back(abelian(2));
  entries.push_back(abelian(4));
  for (int n = 1; n <= 3; ++n) entries.push_back(heisenberg(n));
  for (int m = 4; m <= 8; ++m) entries.push_back(filiform(m));
  for (int k = 3; k <= 5; ++k) entries.push_back(ut(k));
  entries.push_back(g0_st(Rational(1), Rational(1)));
  entries.push_back(g0_st(Rational(1, 2), Rational(-1, 3)));
  entries.push_back(g_st(Rational(1), Rational(1)));
  entries.push_back(g_st(Rational(2), Rational(-3)));
  return entries;
}

}  // namespace coadjoint::catalog
