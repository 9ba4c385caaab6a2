#ifndef COADJOINT_ALGEBRA_HPP
#define COADJOINT_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "coadjoint/linalg.hpp"
#include "coadjoint/rational.hpp"

namespace coadjoint {

/// A finite-dimensional Lie algebra over Q given by structure constants
/// c[i][j][k] with [X_i, X_j] = sum_k c_{ij}^k X_k (indices 0-based here;
/// all user-facing I/O is 1-based).
///
/// The intended invariants, checked by validate():
///   - antisymmetry and the Jacobi identity,
///   - nilpotency (the lower central series reaches 0),
///   - adaptedness: every prefix span{X_1..X_j} is an ideal, so the basis
///     realizes a Jordan-Holder flag.
class NilpotentAlgebra {
 public:
  explicit NilpotentAlgebra(std::size_t dim)
      : dim_(dim), c_(dim * dim * dim, Rational(0)) {}

  std::size_t dim() const { return dim_; }

  Rational& c(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Sets [X_i, X_j] = sum over (k, coeff) and fills the antisymmetric slot.
  void set_bracket(std::size_t i, std::size_t j,
                   const std::vector<std::pair<std::size_t, Rational>>& terms);

  friend bool operator==(const NilpotentAlgebra& a, const NilpotentAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> c_;
};

enum class ViolationKind { Antisymmetry, Jacobi, Nilpotency, Adaptedness };

struct Violation {
  ViolationKind kind;
  // Witness triple, 1-based; (0,0,0) when no triple applies (nilpotency).
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

std::string violation_kind_name(ViolationKind kind);

/// Checks all four structural invariants; every violation is reported
/// with a witness, none is fatal.
ValidationReport validate(const NilpotentAlgebra& alg);

/// Every prefix span{X_1..X_j} is an ideal, i.e. c[i][j][k] = 0 whenever
/// k > min(i, j).
bool is_adapted(const NilpotentAlgebra& alg);

/// [x, y] expanded through the structure constants.
Vec bracket(const NilpotentAlgebra& alg, const Vec& x, const Vec& y);

/// The derived subalgebra [g, g].
Subspace derived_subalgebra(const NilpotentAlgebra& alg);

/// The center {x : [x, g] = 0}.
Subspace center(const NilpotentAlgebra& alg);

/// g = g^1 >= g^2 = [g, g^1] >= ... down to and including the zero subspace.
/// Stops early (without reaching zero) when the series stalls.
std::vector<Subspace> lower_central_series(const NilpotentAlgebra& alg);

/// z_1 = center <= z_2 <= ... up to and including g itself.
/// Stops early when the series stalls (non-nilpotent input).
std::vector<Subspace> ascending_central_series(const NilpotentAlgebra& alg);

struct RebasedAlgebra {
  NilpotentAlgebra algebra;
  /// Rows are the new basis vectors in the old coordinates.
  Matrix new_basis;
};

/// Re-bases onto a basis adapted to the ascending central series, making
/// every prefix span an ideal. Within each layer the input basis vectors
/// that already lie in the layer are kept first, in input order.
/// The identity re-basing is returned for already-adapted input.
/// Throws std::invalid_argument when the algebra is not nilpotent.
RebasedAlgebra jordan_holder_basis(const NilpotentAlgebra& alg);

/// Structure constants in the basis whose vectors are the rows of
/// new_basis, expressed in the old coordinates. new_basis must be square
/// and invertible.
NilpotentAlgebra change_basis(const NilpotentAlgebra& alg, const Matrix& new_basis);

/// The skew form B_xi(X, Y) = <xi, [X, Y]> as a matrix:
/// entry (i, j) = sum_k c_{ij}^k xi_k.
Matrix b_matrix(const NilpotentAlgebra& alg, const Functional& xi);

/// The coadjoint stabilizer g(xi) = ker B_xi.
Subspace stabilizer(const NilpotentAlgebra& alg, const Functional& xi);

/// Ad*(exp x) xi = xi o e^{-ad x}; the series is a finite sum because
/// ad x is nilpotent.
Functional coadjoint_act(const NilpotentAlgebra& alg, const Vec& x, const Functional& xi);

/// Matrix of ad x: column j holds [x, X_j].
Matrix ad_matrix(const NilpotentAlgebra& alg, const Vec& x);

/// True when xi vanishes on [g, g] (one-dimensional representation,
/// singleton coadjoint orbit).
bool is_character(const NilpotentAlgebra& alg, const Functional& xi);

}  // namespace coadjoint

#endif
