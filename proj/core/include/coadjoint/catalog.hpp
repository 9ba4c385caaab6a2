#ifndef COADJOINT_CATALOG_HPP
#define COADJOINT_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "coadjoint/algebra.hpp"

namespace coadjoint {

/// Provenance of an expected invariant value.
enum class Origin {
  ClosedForm,  // follows from an exact closed-form statement for the family
  Pinned,      // computed by this library once and frozen as golden data
};

struct ExpectedValue {
  int value = 0;
  Origin origin = Origin::ClosedForm;
  std::string note;  // the mathematical fact behind the value
};

/// Golden data attached to a catalog algebra; tests assert every field.
struct ExpectedInvariants {
  std::optional<ExpectedValue> dim;
  std::optional<ExpectedValue> real_rank;
  std::optional<ExpectedValue> stable_rank;
  std::optional<ExpectedValue> index;
  std::optional<ExpectedValue> clgth;
};

struct CatalogEntry {
  std::string name;  // e.g. "heisenberg:2"
  NilpotentAlgebra algebra;
  ExpectedInvariants expected;
};

namespace catalog {

/// The abelian algebra R^n.
CatalogEntry abelian(int n);

/// The Heisenberg algebra of dimension 2n+1: center first, then the n
/// symplectic pairs, with [X_{n+1+i}, X_{1+i}] = X_1.
CatalogEntry heisenberg(int n);

/// The filiform algebra of dimension m >= 3: [X_m, X_j] = X_{j-1} for
/// j = 1..m-1 (X_0 = 0), all other brackets zero.
CatalogEntry filiform(int m);

/// Strictly upper-triangular k x k matrices, k >= 3. The basis lists the
/// matrix units E_{ij} (i < j) by decreasing j - i and, within each
/// diagonal, by decreasing (i, j); this makes every prefix an ideal and
/// reproduces the Heisenberg structure constants verbatim at k = 3.
CatalogEntry ut(int k);

/// The 6-dimensional two-step family: [X6,X5] = s X3, [X6,X4] = (s+t) X2,
/// [X5,X4] = t X1, for nonzero rationals s, t.
CatalogEntry g0_st(const Rational& s, const Rational& t);

/// The 7-dimensional central extension of g0(s,t) by the antidiagonal
/// 2-cocycle: a central Z (listed first) with [X1,X6] = [X2,X5] =
/// [X3,X4] = Z added on top of the g0 relations. Three-step nilpotent
/// with one-dimensional center.
CatalogEntry g_st(const Rational& s, const Rational& t);

/// All family names understood by lookup().
std::vector<std::string> family_names();

/// Parses "name" or "name:params" (e.g. "heisenberg:2", "g:1,-2/3").
/// Throws std::invalid_argument for unknown names or bad parameters.
CatalogEntry lookup(const std::string& spec);

/// A fixed roster covering every family at small parameters, used by the
/// cross-checking test suites.
std::vector<CatalogEntry> test_roster();

}  // namespace catalog

}  // namespace coadjoint

#endif
