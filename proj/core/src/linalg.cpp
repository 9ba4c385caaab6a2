#include "coadjoint/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace coadjoint {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::append_row(const Vec& v) {
  if (cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r == 0; });
}

Vec operator*(const Matrix& m, const Vec& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch in matrix*vector");
  Vec out(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) out[i] += m(i, j) * v[j];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("dimension mismatch in matrix product");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Vec& operator+=(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in vector sum");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator*(const Rational& t, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = t * v[i];
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(pivot_row, j);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Scale rows to integers, then run Bareiss.
  std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational s = m(i, j) * Rational(l);
      a[i][j] = s.get_num();
    }
  }
  const std::size_t nr = m.rows(), nc = m.cols();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < nc && r < nr; ++col) {
    std::size_t sel = r;
    while (sel < nr && a[sel][col] == 0) ++sel;
    if (sel == nr) continue;
    if (sel != r) std::swap(a[sel], a[r]);
    const mpz_class pivot = a[r][col];
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = col + 1; j < nc; ++j) {
        a[i][j] = (a[i][j] * pivot - a[i][col] * a[r][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = pivot;
    ++r;
  }
  return r;
}

bool SpanBuilder::insert(Vec v) {
  if (v.size() != ambient_) throw std::invalid_argument("dimension mismatch in SpanBuilder");
  v = reduce(std::move(v));
  std::size_t p = 0;
  while (p < ambient_ && v[p] == 0) ++p;
  if (p == ambient_) return false;
  const Rational inv = 1 / v[p];
  for (std::size_t j = p; j < ambient_; ++j) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Vec SpanBuilder::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t j = pivots_[r]; j < ambient_; ++j) v[j] -= f * rows_[r][j];
  }
  return v;
}

Matrix SpanBuilder::matrix() const {
  Matrix m(rows_.size(), ambient_);
  for (std::size_t i = 0; i < rows_.size(); ++i) m.set_row(i, rows_[i]);
  return m;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Matrix(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(Matrix::identity(ambient_dim));
}

Subspace Subspace::row_space(Matrix m) {
  Subspace s;
  s.ambient_ = m.cols();
  const auto pivots = rref(m);
  s.basis_ = Matrix(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) s.basis_.set_row(i, m.row(i));
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("dimension mismatch in Subspace::contains");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && basis_(i, p) == 0) ++p;
    if (p == ambient_) continue;
    const Rational f = r[p];
    if (f == 0) continue;
    for (std::size_t j = p; j < ambient_; ++j) r[j] -= f * basis_(i, j);
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("ambient dimension mismatch");
  Matrix stacked(0, ambient_);
  for (std::size_t i = 0; i < basis_.rows(); ++i) stacked.append_row(basis_.row(i));
  for (std::size_t i = 0; i < other.basis_.rows(); ++i) stacked.append_row(other.basis_.row(i));
  return row_space(std::move(stacked));
}

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(r);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.append_row(v);
  }
  return Subspace::row_space(std::move(basis));
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1) throw std::invalid_argument("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace coadjoint
