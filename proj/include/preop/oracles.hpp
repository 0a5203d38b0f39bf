#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "preop/algebra.hpp"
#include "preop/cochain.hpp"
#include "preop/linalg.hpp"

namespace preop {

/// Independent cross-checks for the cohomology pipeline. Everything here is
/// built straight from the structure constants by explicit linear systems;
/// none of it goes through the partial-composition machinery it is used to
/// audit.

/// Center of A: solutions of e_i a = a e_i for all i.
template <exact_field F>
Subspace<F> center_basis(const AlgebraSpec<F>& alg) {
  const std::size_t d = alg.dim();
  ExactMatrix<F> m(d * d, d, alg.field());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t a = 0; a < d; ++a)
        m.at(i * d + k, a) = alg.structure_coeff(i, a, k) - alg.structure_coeff(a, i, k);
  return kernel_basis(m);
}

/// Derivation space: matrices D with D(xy) = D(x)y + xD(y), as vectors in
/// K^(d*d) with D(e_a) = sum_b D[a*d+b] e_b.
template <exact_field F>
Subspace<F> derivation_space(const AlgebraSpec<F>& alg) {
  const std::size_t d = alg.dim();
  ExactMatrix<F> m(d * d * d, d * d, alg.field());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const std::size_t row = (i * d + j) * d + k;
        for (std::size_t a = 0; a < d; ++a) {
          m.at(row, a * d + k) += alg.structure_coeff(i, j, a);
          m.at(row, i * d + a) -= alg.structure_coeff(a, j, k);
          m.at(row, j * d + a) -= alg.structure_coeff(i, a, k);
        }
      }
  return kernel_basis(m);
}

/// Inner derivations: the span of ad_a = [a, .] inside K^(d*d).
template <exact_field F>
Subspace<F> inner_derivation_space(const AlgebraSpec<F>& alg) {
  const std::size_t d = alg.dim();
  ExactMatrix<F> m(d * d, d, alg.field());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        m.at(i * d + k, a) = alg.structure_coeff(a, i, k) - alg.structure_coeff(i, a, k);
  return image_basis(m);
}

/// Classical bar-complex (Hochschild) coboundary C^n -> C^(n+1):
///   (delta f)(a_1,...,a_(n+1)) = a_1 f(a_2,...)
///     + sum_(i=1..n) (-1)^i f(..., a_i a_(i+1), ...)
///     + (-1)^(n+1) f(a_1,...,a_n) a_(n+1).
/// Assembled directly from the formula, independent of the pre-operad path.
template <exact_field F>
ExactMatrix<F> bar_coboundary_matrix(const AlgebraSpec<F>& alg, int n) {
  const std::size_t d = alg.dim();
  const std::size_t cols = Cochain<F>::tensor_size(d, n);
  const std::size_t rows = Cochain<F>::tensor_size(d, n + 1);
  const std::size_t in_rows = rows / d;  // d^(n+1) input combinations per output index
  ExactMatrix<F> m(rows, cols, alg.field());
  std::vector<std::size_t> dpow(static_cast<std::size_t>(n) + 2, 1);
  for (std::size_t k = 1; k < dpow.size(); ++k) dpow[k] = dpow[k - 1] * d;
  const bool last_negative = (n + 1) % 2 == 1;

  for (std::size_t col = 0; col < cols; ++col) {
    const std::size_t o = col / dpow[static_cast<std::size_t>(n)];
    const std::size_t mrest = col % dpow[static_cast<std::size_t>(n)];  // m_1..m_n packed

    // a_1 f(a_2,...): inputs (x1, m_1..m_n), output coordinate of e_x1 * e_o
    for (std::size_t x1 = 0; x1 < d; ++x1)
      for (std::size_t out = 0; out < d; ++out) {
        const F& c = alg.structure_coeff(x1, o, out);
        if (c.is_zero()) continue;
        m.at(out * in_rows + x1 * dpow[static_cast<std::size_t>(n)] + mrest, col) += c;
      }

    // (-1)^i f(..., a_i a_(i+1), ...): split m as (head, m_i, tail)
    for (int i = 1; i <= n; ++i) {
      const std::size_t tail_n = dpow[static_cast<std::size_t>(n - i)];
      const std::size_t head = mrest / dpow[static_cast<std::size_t>(n - i + 1)];
      const std::size_t mi = (mrest / tail_n) % d;
      const std::size_t tail = mrest % tail_n;
      const bool neg = i % 2 == 1;
      for (std::size_t xi = 0; xi < d; ++xi)
        for (std::size_t xj = 0; xj < d; ++xj) {
          const F& c = alg.structure_coeff(xi, xj, mi);
          if (c.is_zero()) continue;
          const std::size_t inputs =
              ((head * d + xi) * d + xj) * tail_n + tail;
          m.at(o * in_rows + inputs, col) += neg ? -c : c;
        }
    }

    // (-1)^(n+1) f(a_1,...,a_n) a_(n+1): inputs (m_1..m_n, x), e_o * e_x
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t out = 0; out < d; ++out) {
        const F& c = alg.structure_coeff(o, x, out);
        if (c.is_zero()) continue;
        m.at(out * in_rows + mrest * d + x, col) += last_negative ? -c : c;
      }
  }
  return m;
}

/// Hochschild cohomology dimensions per degree 0..max_degree computed purely
/// from bar-complex ranks: dim H^n = (d^(n+1) - rank B_n) - rank B_(n-1).
template <exact_field F>
std::vector<std::size_t> bar_cohomology_dims(const AlgebraSpec<F>& alg, int max_degree) {
  std::vector<std::size_t> dims;
  std::size_t prev_rank = 0;
  for (int n = 0; n <= max_degree; ++n) {
    auto red = rref(bar_coboundary_matrix(alg, n));
    const std::size_t cn = Cochain<F>::tensor_size(alg.dim(), n);
    dims.push_back(cn - red.rank - prev_rank);
    prev_rank = red.rank;
  }
  return dims;
}

/// Compare a coboundary matrix against the bar-complex one: returns +1 or -1
/// if they agree up to that global sign at this degree, nullopt otherwise.
template <exact_field F>
std::optional<int> delta_sign_vs_bar(const ExactMatrix<F>& ours, const ExactMatrix<F>& bar) {
  if (ours.rows() != bar.rows() || ours.cols() != bar.cols()) return std::nullopt;
  int sign = 0;
  for (std::size_t r = 0; r < ours.rows(); ++r)
    for (std::size_t c = 0; c < ours.cols(); ++c) {
      const F& a = ours.at(r, c);
      const F& b = bar.at(r, c);
      if (a.is_zero() != b.is_zero()) return std::nullopt;
      if (a.is_zero()) continue;
      if (a == b) {
        if (sign == -1) return std::nullopt;
        sign = 1;
      } else if (a == -b) {
        if (sign == 1) return std::nullopt;
        sign = -1;
      } else {
        return std::nullopt;
      }
    }
  return sign == 0 ? 1 : sign;  // zero matrices agree with sign +1
}

}  // namespace preop
