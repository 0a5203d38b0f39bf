#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "preop/algebra.hpp"
#include "preop/cochain.hpp"
#include "preop/error.hpp"
#include "preop/field.hpp"

namespace preop {

inline constexpr std::size_t kDefaultMemoryCap = 1'000'000;

/// The endomorphism pre-operad E_A of a finite-dimensional algebra A:
/// graded components Hom(A^{tensor n}, A) with the signed partial
/// compositions
///
///   f o_i g = (-1)^(i|g|) f o (1^i (x) g (x) 1^(|f|-i)),  0 <= i <= |f|,
///
/// unit 1_A in degree 1, and the componentwise linear structure. All
/// operations are pure; cochains are immutable values.
template <exact_field F>
class EndoPreOperad {
 public:
  using Element = Cochain<F>;
  using Scalar = F;

  explicit EndoPreOperad(AlgebraSpec<F> spec, std::size_t memory_cap = kDefaultMemoryCap)
      : alg_(std::make_shared<const AlgebraSpec<F>>(std::move(spec))), cap_(memory_cap) {}
  explicit EndoPreOperad(std::shared_ptr<const AlgebraSpec<F>> spec,
                         std::size_t memory_cap = kDefaultMemoryCap)
      : alg_(std::move(spec)), cap_(memory_cap) {}

  const AlgebraSpec<F>& algebra() const { return *alg_; }
  const std::shared_ptr<const AlgebraSpec<F>>& algebra_ptr() const { return alg_; }
  std::size_t memory_cap() const { return cap_; }

  int degree(const Element& f) const { return f.degree(); }

  /// Number of coefficients of C^n; guards the memory cap.
  std::size_t component_dim(int degree) const {
    std::size_t s = Element::tensor_size(alg_->dim(), degree);
    if (s > cap_)
      throw resource_error("degree " + std::to_string(degree) + " tensor needs " +
                           std::to_string(s) + " entries, cap is " + std::to_string(cap_));
    return s;
  }

  Element zero(int degree) const {
    component_dim(degree);
    return Element::zero(alg_, degree);
  }

  /// The identity map 1_A as a degree-1 cochain.
  Element unit() const {
    const std::size_t d = alg_->dim();
    std::vector<F> t(d * d, alg_->field().zero());
    for (std::size_t i = 0; i < d; ++i) t[i * d + i] = alg_->field().one();
    return Element(alg_, 1, std::move(t));
  }

  /// The fixed product mu in C^2 read off the structure constants.
  Element mu() const {
    const std::size_t d = alg_->dim();
    std::vector<F> t(d * d * d, alg_->field().zero());
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) t[(k * d + i) * d + j] = alg_->structure_coeff(i, j, k);
    return Element(alg_, 2, std::move(t));
  }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element negate(const Element& a) const { return -a; }
  Element subtract(const Element& a, const Element& b) const { return a - b; }
  Element scale(const F& k, const Element& a) const { return a.scaled(k); }

  /// Signed partial composition f o_i g.
  Element compose_at(const Element& f, int i, const Element& g) const {
    if (f.algebra_ptr().get() != alg_.get() || g.algebra_ptr().get() != alg_.get())
      throw config_error("operands belong to a different ambient algebra");
    const int m = f.degree(), n = g.degree();
    if (i < 0 || i > m - 1)
      throw position_error("slot " + std::to_string(i) + " out of range for degree " +
                           std::to_string(m));
    if (n < 0) throw degree_error("cannot substitute a formal degree -1 cochain");
    const int r = m + n - 1;
    component_dim(r);

    const std::size_t d = alg_->dim();
    std::size_t left_n = 1, mid_n = 1, right_n = 1;
    for (int k = 0; k < i; ++k) left_n *= d;
    for (int k = 0; k < n; ++k) mid_n *= d;
    for (int k = 0; k < m - 1 - i; ++k) right_n *= d;

    const bool negative = ((static_cast<long long>(i) * (n - 1)) % 2 + 2) % 2 == 1;
    std::vector<F> res(Element::tensor_size(d, r), alg_->field().zero());
    auto fc = f.coeffs();
    auto gc = g.coeffs();
    for (std::size_t out = 0; out < d; ++out)
      for (std::size_t left = 0; left < left_n; ++left)
        for (std::size_t s = 0; s < d; ++s) {
          const std::size_t f_base = ((out * left_n + left) * d + s) * right_n;
          const std::size_t g_base = s * mid_n;
          for (std::size_t right = 0; right < right_n; ++right) {
            const F& fv = fc[f_base + right];
            if (fv.is_zero()) continue;
            const F fs = negative ? -fv : fv;
            const std::size_t res_row = (out * left_n + left) * mid_n;
            for (std::size_t mid = 0; mid < mid_n; ++mid) {
              const F& gv = gc[g_base + mid];
              if (gv.is_zero()) continue;
              res[(res_row + mid) * right_n + right] += fs * gv;
            }
          }
        }
    return Element(alg_, r, std::move(res));
  }

  /// Standard basis cochain of C^n with a single 1 at the given flat index.
  Element basis_cochain(int degree, std::size_t flat) const {
    std::vector<F> t(component_dim(degree), alg_->field().zero());
    t[flat] = alg_->field().one();
    return Element(alg_, degree, std::move(t));
  }

  /// Deterministic pseudo-random cochain; coefficients are small integers in
  /// [-3, 3] embedded into the field. Same seed, same cochain.
  Element random_cochain(int degree, std::uint64_t seed) const {
    std::size_t size = component_dim(degree);
    std::mt19937_64 rng(seed);
    std::vector<F> t;
    t.reserve(size);
    for (std::size_t k = 0; k < size; ++k)
      t.push_back(alg_->field().from_int(static_cast<long long>(rng() % 7) - 3));
    return Element(alg_, degree, std::move(t));
  }

 private:
  std::shared_ptr<const AlgebraSpec<F>> alg_;
  std::size_t cap_;
};

}  // namespace preop
