#ifndef COADJOINT_LINALG_HPP
#define COADJOINT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "coadjoint/rational.hpp"

namespace coadjoint {

/// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, const Vec& v);
  void append_row(const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vec operator*(const Matrix& m, const Vec& v);
Matrix operator*(const Matrix& a, const Matrix& b);

Vec& operator+=(Vec& a, const Vec& b);
Vec operator*(const Rational& t, const Vec& v);
bool is_zero(const Vec& v);

/// Reduced row echelon form in place; returns the pivot columns.
/// Pivot entries are normalized to 1 and their columns cleared.
std::vector<std::size_t> rref(Matrix& m);

/// Rank by fraction-free Bareiss elimination over the integers
/// (rows are scaled by their denominator lcm first, which preserves rank).
std::size_t rank(const Matrix& m);

/// Incremental row-space builder: feeds vectors one at a time and tracks
/// linear independence without re-eliminating from scratch.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  /// Returns true when v enlarges the span (and keeps its reduction).
  bool insert(Vec v);

  /// Residual of v after elimination against the current rows.
  /// Zero iff v lies in the span.
  Vec reduce(Vec v) const;

  bool contains(const Vec& v) const { return is_zero(reduce(v)); }
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }

  /// The accumulated rows as a matrix (echelon up to row order).
  Matrix matrix() const;

 private:
  std::size_t ambient_;
  std::vector<Vec> rows_;            // each with leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;  // pivot column per row
};

/// A linear subspace of Q^m, stored as a reduced-row-echelon basis.
/// The RREF basis is the canonical representative of the row space,
/// so equality of subspaces is equality of the stored matrices.
class Subspace {
 public:
  Subspace() = default;

  /// Zero subspace of the given ambient dimension.
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  /// Row space of m (any matrix; rows need not be independent).
  static Subspace row_space(Matrix m);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Sum of subspaces (span of the union of bases).
  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;  // RREF, no zero rows
};

/// Kernel {x : m x = 0} as a subspace of Q^cols.
Subspace kernel(const Matrix& m);

/// Inverse of a square matrix. Throws std::invalid_argument when singular.
Matrix inverse(const Matrix& m);

}  // namespace coadjoint

#endif
