#include "coadjoint/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace coadjoint {

namespace {

Vec basis_vector(std::size_t dim, std::size_t i) {
  Vec v(dim, Rational(0));
  v[i] = 1;
  return v;
}

/// Span of [g, S] for a subspace S.
Subspace bracket_span(const NilpotentAlgebra& alg, const Subspace& s) {
  const std::size_t m = alg.dim();
  Matrix rows(0, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec xi = basis_vector(m, i);
    for (std::size_t r = 0; r < s.dim(); ++r) {
      Vec w = bracket(alg, xi, s.basis().row(r));
      if (!is_zero(w)) rows.append_row(w);
    }
  }
  return Subspace::row_space(std::move(rows));
}

/// {x : [x, X_j] in W for all j}, computed as the kernel of the stacked
/// residual maps R_W o ad(.)X_j.
Subspace bracket_preimage(const NilpotentAlgebra& alg, const Subspace& w) {
  const std::size_t m = alg.dim();
  SpanBuilder span(m);
  for (std::size_t r = 0; r < w.dim(); ++r) span.insert(w.basis().row(r));

  Matrix conditions(0, m);
  for (std::size_t j = 0; j < m; ++j) {
    // Row block: x -> residual of [x, X_j] modulo W.
    Matrix block(m, m);
    for (std::size_t i = 0; i < m; ++i) {
      Vec img(m, Rational(0));
      for (std::size_t k = 0; k < m; ++k) img[k] = alg.c(i, j, k);
      img = span.reduce(std::move(img));
      for (std::size_t k = 0; k < m; ++k) block(k, i) = img[k];
    }
    for (std::size_t k = 0; k < m; ++k) {
      Vec row = block.row(k);
      if (!is_zero(row)) conditions.append_row(row);
    }
  }
  if (conditions.rows() == 0) return Subspace::full(m);
  return kernel(conditions);
}

}  // namespace

void NilpotentAlgebra::set_bracket(std::size_t i, std::size_t j,
                                   const std::vector<std::pair<std::size_t, Rational>>& terms) {
  for (const auto& [k, v] : terms) {
    c(i, j, k) = v;
    c(j, i, k) = -v;
  }
}

std::string violation_kind_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Antisymmetry: return "antisymmetry";
    case ViolationKind::Jacobi: return "jacobi";
    case ViolationKind::Nilpotency: return "nilpotency";
    case ViolationKind::Adaptedness: return "adaptedness";
  }
  return "?";
}

ValidationReport validate(const NilpotentAlgebra& alg) {
  ValidationReport report;
  const std::size_t m = alg.dim();

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        if (alg.c(i, j, k) != -alg.c(j, i, k)) {
          report.violations.push_back({ViolationKind::Antisymmetry, i + 1, j + 1, k + 1,
                                       "c[i][j][k] != -c[j][i][k]"});
        }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Vec sum = bracket(alg, bracket(alg, basis_vector(m, i), basis_vector(m, j)), basis_vector(m, k));
        sum += bracket(alg, bracket(alg, basis_vector(m, j), basis_vector(m, k)), basis_vector(m, i));
        sum += bracket(alg, bracket(alg, basis_vector(m, k), basis_vector(m, i)), basis_vector(m, j));
        if (!is_zero(sum)) {
          report.violations.push_back({ViolationKind::Jacobi, i + 1, j + 1, k + 1,
                                       "Jacobi identity fails on basis triple"});
        }
      }

  const auto series = lower_central_series(alg);
  if (series.back().dim() != 0) {
    std::ostringstream os;
    os << "lower central series stalls at dimension " << series.back().dim();
    report.violations.push_back({ViolationKind::Nilpotency, 0, 0, 0, os.str()});
  }

  // Prefix spans are ideals iff c[i][j][k] = 0 whenever k > min(i, j).
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t k = std::min(i, j) + 1; k < m; ++k)
        if (alg.c(i, j, k) != 0) {
          report.violations.push_back({ViolationKind::Adaptedness, i + 1, j + 1, k + 1,
                                       "bracket leaves the prefix ideal"});
        }

  return report;
}

Vec bracket(const NilpotentAlgebra& alg, const Vec& x, const Vec& y) {
  const std::size_t m = alg.dim();
  if (x.size() != m || y.size() != m)
    throw std::invalid_argument("bracket: vector length does not match algebra dimension");
  Vec out(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j] == 0) continue;
      const Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < m; ++k)
        if (alg.c(i, j, k) != 0) out[k] += f * alg.c(i, j, k);
    }
  }
  return out;
}

Subspace derived_subalgebra(const NilpotentAlgebra& alg) {
  return bracket_span(alg, Subspace::full(alg.dim()));
}

Subspace center(const NilpotentAlgebra& alg) {
  return bracket_preimage(alg, Subspace::zero(alg.dim()));
}

std::vector<Subspace> lower_central_series(const NilpotentAlgebra& alg) {
  std::vector<Subspace> series{Subspace::full(alg.dim())};
  while (series.back().dim() > 0) {
    Subspace next = bracket_span(alg, series.back());
    if (next.dim() == series.back().dim()) break;  // stalled: not nilpotent
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subspace> ascending_central_series(const NilpotentAlgebra& alg) {
  std::vector<Subspace> series{center(alg)};
  while (series.back().dim() < alg.dim()) {
    Subspace next = bracket_preimage(alg, series.back());
    if (next.dim() == series.back().dim()) break;  // stalled: not nilpotent
    series.push_back(std::move(next));
  }
  return series;
}

bool is_adapted(const NilpotentAlgebra& alg) {
  const std::size_t m = alg.dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = std::min(i, j) + 1; k < m; ++k)
        if (alg.c(i, j, k) != 0) return false;
  return true;
}

RebasedAlgebra jordan_holder_basis(const NilpotentAlgebra& alg) {
  const std::size_t m = alg.dim();
  const auto series = ascending_central_series(alg);
  if (series.empty() || series.back().dim() != m)
    throw std::invalid_argument("jordan_holder_basis: algebra is not nilpotent");
  if (is_adapted(alg)) return RebasedAlgebra{alg, Matrix::identity(m)};

  SpanBuilder chosen(m);
  Matrix new_basis(0, m);
  for (const Subspace& layer : series) {
    // Input basis vectors already inside the layer, in input order.
    for (std::size_t i = 0; i < m && new_basis.rows() < layer.dim(); ++i) {
      const Vec e = basis_vector(m, i);
      if (layer.contains(e) && chosen.insert(e)) new_basis.append_row(e);
    }
    // Complete with the canonical echelon basis of the layer.
    for (std::size_t r = 0; r < layer.dim() && new_basis.rows() < layer.dim(); ++r) {
      const Vec v = layer.basis().row(r);
      if (chosen.insert(v)) new_basis.append_row(v);
    }
  }
  return RebasedAlgebra{change_basis(alg, new_basis), new_basis};
}

NilpotentAlgebra change_basis(const NilpotentAlgebra& alg, const Matrix& new_basis) {
  const std::size_t m = alg.dim();
  if (new_basis.rows() != m || new_basis.cols() != m)
    throw std::invalid_argument("change_basis: basis matrix must be square of the algebra dimension");
  const Matrix to_new = inverse(new_basis).transpose();  // old coords -> new coords

  NilpotentAlgebra out(m);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q) {
      const Vec w = bracket(alg, new_basis.row(p), new_basis.row(q));
      if (is_zero(w)) continue;
      const Vec y = to_new * w;
      for (std::size_t r = 0; r < m; ++r) {
        out.c(p, q, r) = y[r];
        out.c(q, p, r) = -y[r];
      }
    }
  return out;
}

Matrix b_matrix(const NilpotentAlgebra& alg, const Functional& xi) {
  const std::size_t m = alg.dim();
  if (xi.size() != m)
    throw std::invalid_argument("b_matrix: functional length does not match algebra dimension");
  Matrix b(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Rational v(0);
      for (std::size_t k = 0; k < m; ++k)
        if (alg.c(i, j, k) != 0 && xi[k] != 0) v += alg.c(i, j, k) * xi[k];
      if (v != 0) {
        b(i, j) = v;
        b(j, i) = -v;
      }
    }
  return b;
}

Subspace stabilizer(const NilpotentAlgebra& alg, const Functional& xi) {
  return kernel(b_matrix(alg, xi));
}

Matrix ad_matrix(const NilpotentAlgebra& alg, const Vec& x) {
  const std::size_t m = alg.dim();
  Matrix a(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    Vec img = bracket(alg, x, basis_vector(m, j));
    for (std::size_t k = 0; k < m; ++k) a(k, j) = img[k];
  }
  return a;
}

Functional coadjoint_act(const NilpotentAlgebra& alg, const Vec& x, const Functional& xi) {
  const std::size_t m = alg.dim();
  if (x.size() != m || xi.size() != m)
    throw std::invalid_argument("coadjoint_act: dimension mismatch");

  // e^{-ad x}: the sum stops once a power of ad x vanishes.
  Matrix a = ad_matrix(alg, x);
  Matrix exp = Matrix::identity(m);
  Matrix power = Matrix::identity(m);
  Rational factorial(1);
  for (std::size_t p = 1; p <= m; ++p) {
    power = power * a;
    if (power.is_zero()) break;
    factorial *= Rational(static_cast<long>(p));
    const Rational coeff = Rational((p % 2) ? -1 : 1) / factorial;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) exp(i, j) += coeff * power(i, j);
  }
  return exp.transpose() * xi;
}

bool is_character(const NilpotentAlgebra& alg, const Functional& xi) {
  const std::size_t m = alg.dim();
  // <xi, [X_i, X_j]> = 0 for all basis pairs.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Rational v(0);
      for (std::size_t k = 0; k < m; ++k) v += alg.c(i, j, k) * xi[k];
      if (v != 0) return false;
    }
  return true;
}

}  // namespace coadjoint
