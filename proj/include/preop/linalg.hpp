#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "preop/error.hpp"
#include "preop/field.hpp"

namespace preop {

/// Dense matrix over an exact field. The workhorse behind every rank,
/// kernel, image and quotient computation in the cohomology pipeline.
template <exact_field F>
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols, typename F::Config cfg)
      : rows_(rows), cols_(cols), cfg_(cfg), a_(rows * cols, cfg.zero()) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const typename F::Config& field() const { return cfg_; }

  F& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const F& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  static ExactMatrix identity(std::size_t n, typename F::Config cfg) {
    ExactMatrix m(n, n, cfg);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = cfg.one();
    return m;
  }

  std::vector<F> column(std::size_t c) const {
    std::vector<F> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
  }

  void set_column(std::size_t c, std::span<const F> v) {
    if (v.size() != rows_) throw dimension_error("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
  }

  /// Matrix-vector product.
  std::vector<F> apply(std::span<const F> v) const {
    if (v.size() != cols_) throw dimension_error("matrix-vector size mismatch");
    std::vector<F> out(rows_, cfg_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      F acc = cfg_.zero();
      const F* row = &a_[r * cols_];
      for (std::size_t c = 0; c < cols_; ++c) {
        if (row[c].is_zero() || v[c].is_zero()) continue;
        acc += row[c] * v[c];
      }
      out[r] = acc;
    }
    return out;
  }

  ExactMatrix multiply(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw dimension_error("matrix product size mismatch");
    ExactMatrix out(rows_, o.cols_, cfg_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& x = at(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) {
          const F& y = o.at(k, c);
          if (y.is_zero()) continue;
          out.at(r, c) += x * y;
        }
      }
    return out;
  }

  bool is_zero() const {
    for (const F& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const ExactMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_, cols_;
  typename F::Config cfg_;
  std::vector<F> a_;
};

template <exact_field F>
struct RrefResult {
  ExactMatrix<F> matrix;
  std::size_t rank;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form by Gauss-Jordan elimination. Pivot selection is
/// the first nonzero entry in column order, so the result is deterministic
/// and canonical (each pivot scaled to 1, zeros above and below).
template <exact_field F>
RrefResult<F> rref(ExactMatrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!m.at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(r, j), m.at(sel, j));
    F inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (m.at(r, j).is_zero()) continue;
      m.at(r, j) = m.at(r, j) * inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const F factor = m.at(i, c);
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (m.at(r, j).is_zero()) continue;
        m.at(i, j) -= factor * m.at(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult<F>{std::move(m), pivots.size(), std::move(pivots)};
}

/// Linear subspace of K^n held as a reduced-echelon basis (pivots strictly
/// increasing, pivot entries 1, pivot columns cleared elsewhere). The
/// canonical form makes membership and coset reduction pure pivot
/// elimination and all downstream bases reproducible.
template <exact_field F>
class Subspace {
 public:
  static Subspace zero(std::size_t ambient, typename F::Config cfg) {
    return Subspace(ambient, {}, {}, cfg);
  }

  /// Canonicalize arbitrary spanning vectors into an echelon basis.
  static Subspace span_of(const std::vector<std::vector<F>>& vectors, std::size_t ambient,
                          typename F::Config cfg) {
    ExactMatrix<F> m(vectors.size(), ambient, cfg);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != ambient) throw dimension_error("spanning vector length mismatch");
      for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
    }
    auto red = rref(std::move(m));
    std::vector<std::vector<F>> basis;
    basis.reserve(red.rank);
    for (std::size_t i = 0; i < red.rank; ++i) {
      std::vector<F> row;
      row.reserve(ambient);
      for (std::size_t j = 0; j < ambient; ++j) row.push_back(red.matrix.at(i, j));
      basis.push_back(std::move(row));
    }
    return Subspace(ambient, std::move(basis), std::move(red.pivot_columns), cfg);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<F>>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const typename F::Config& field() const { return cfg_; }

  /// Canonical representative of v + S: eliminate the pivot coordinates.
  std::vector<F> coset_reduce(std::span<const F> v) const {
    if (v.size() != ambient_) throw dimension_error("vector/ambient dimension mismatch");
    std::vector<F> out(v.begin(), v.end());
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const F factor = out[pivots_[i]];
      if (factor.is_zero()) continue;
      for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
        if (basis_[i][j].is_zero()) continue;
        out[j] -= factor * basis_[i][j];
      }
    }
    return out;
  }

  bool contains(std::span<const F> v) const {
    auto r = coset_reduce(v);
    for (const F& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  Subspace(std::size_t ambient, std::vector<std::vector<F>> basis, std::vector<std::size_t> pivots,
           typename F::Config cfg)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)), cfg_(cfg) {}

  std::size_t ambient_;
  std::vector<std::vector<F>> basis_;
  std::vector<std::size_t> pivots_;
  typename F::Config cfg_;
};

/// Basis of the null space. dim = cols - rank.
template <exact_field F>
Subspace<F> kernel_basis(const ExactMatrix<F>& m) {
  auto red = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : red.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<F>> vectors;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<F> v(cols, m.field().zero());
    v[c] = m.field().one();
    for (std::size_t i = 0; i < red.pivot_columns.size(); ++i)
      v[red.pivot_columns[i]] = -red.matrix.at(i, c);
    vectors.push_back(std::move(v));
  }
  return Subspace<F>::span_of(vectors, cols, m.field());
}

/// Basis of the column space. dim = rank.
template <exact_field F>
Subspace<F> image_basis(const ExactMatrix<F>& m) {
  std::vector<std::vector<F>> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace<F>::span_of(cols, m.rows(), m.field());
}

/// Particular solution of M x = b, if the system is consistent.
template <exact_field F>
std::optional<std::vector<F>> solve(const ExactMatrix<F>& m, std::span<const F> b) {
  if (b.size() != m.rows()) throw dimension_error("right-hand side length mismatch");
  ExactMatrix<F> aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  auto red = rref(std::move(aug));
  for (std::size_t p : red.pivot_columns)
    if (p == m.cols()) return std::nullopt;
  std::vector<F> x(m.cols(), m.field().zero());
  for (std::size_t i = 0; i < red.pivot_columns.size(); ++i)
    x[red.pivot_columns[i]] = red.matrix.at(i, m.cols());
  return x;
}

/// Representatives of ker/im: the echelon basis vectors of ker whose pivots
/// are not pivots of im. Requires im to be contained in ker; a violation
/// carries a witness vector (it signals delta^2 != 0 upstream).
template <exact_field F>
std::vector<std::vector<F>> quotient_basis(const Subspace<F>& ker, const Subspace<F>& im) {
  if (ker.ambient_dim() != im.ambient_dim()) throw dimension_error("quotient ambient mismatch");
  for (const auto& b : im.basis())
    if (!ker.contains(b)) {
      std::string msg = "image vector outside kernel: [";
      for (std::size_t j = 0; j < b.size(); ++j) msg += (j ? "," : "") + b[j].str();
      throw inclusion_error(msg + "]");
    }
  std::vector<bool> im_pivot(ker.ambient_dim(), false);
  for (std::size_t p : im.pivots()) im_pivot[p] = true;
  std::vector<std::vector<F>> reps;
  for (std::size_t i = 0; i < ker.dim(); ++i)
    if (!im_pivot[ker.pivots()[i]]) reps.push_back(ker.basis()[i]);
  return reps;
}

}  // namespace preop
