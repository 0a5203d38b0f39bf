#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "preop/algebra.hpp"
#include "preop/error.hpp"
#include "preop/field.hpp"

namespace preop {

/// Homogeneous element of C^n = Hom(A^{tensor n}, A): a dense coefficient
/// tensor t[out][in_1]...[in_n] of size d^(n+1), row-major with the output
/// index most significant. Degree 0 cochains are coordinate vectors in A.
/// Degree -1 is admitted solely as the formal zero produced by empty
/// composition sums at degree 0; nothing nonzero ever lives there.
template <exact_field F>
class Cochain {
 public:
  Cochain(std::shared_ptr<const AlgebraSpec<F>> algebra, int degree, std::vector<F> coeffs)
      : alg_(std::move(algebra)), deg_(degree), t_(std::move(coeffs)) {
    if (deg_ < -1) throw degree_error("cochain degree below -1");
    if (t_.size() != tensor_size(alg_->dim(), deg_))
      throw dimension_error("coefficient tensor has size " + std::to_string(t_.size()) +
                            ", expected " + std::to_string(tensor_size(alg_->dim(), deg_)));
  }

  static Cochain zero(std::shared_ptr<const AlgebraSpec<F>> algebra, int degree) {
    auto cfg = algebra->field();
    std::size_t n = tensor_size(algebra->dim(), degree);
    return Cochain(std::move(algebra), degree, std::vector<F>(n, cfg.zero()));
  }

  /// d^(degree+1); the number of coefficients of a degree-n cochain.
  static std::size_t tensor_size(std::size_t d, int degree) {
    std::size_t s = 1;
    for (int k = 0; k <= degree; ++k) s *= d;
    return s;
  }

  int degree() const { return deg_; }
  int reduced_degree() const { return deg_ - 1; }
  std::size_t dim() const { return alg_->dim(); }
  const std::shared_ptr<const AlgebraSpec<F>>& algebra_ptr() const { return alg_; }
  const AlgebraSpec<F>& algebra() const { return *alg_; }

  std::span<const F> coeffs() const { return t_; }
  const F& coeff(std::size_t flat) const { return t_[flat]; }
  F& coeff(std::size_t flat) { return t_[flat]; }
  std::size_t size() const { return t_.size(); }

  /// Decode a flat index into (out, in_1, ..., in_n).
  std::vector<std::size_t> multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(static_cast<std::size_t>(deg_) + 1);
    for (std::size_t k = idx.size(); k-- > 0;) {
      idx[k] = flat % alg_->dim();
      flat /= alg_->dim();
    }
    return idx;
  }

  bool is_zero() const {
    for (const F& x : t_)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Index of the first nonzero coefficient, or size() if zero.
  std::size_t first_nonzero() const {
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!t_[i].is_zero()) return i;
    return t_.size();
  }

  bool operator==(const Cochain& o) const { return deg_ == o.deg_ && t_ == o.t_; }
  bool operator!=(const Cochain& o) const = default;

  Cochain operator+(const Cochain& o) const {
    require_compatible(o);
    Cochain out = *this;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!o.t_[i].is_zero()) out.t_[i] += o.t_[i];
    return out;
  }

  Cochain operator-(const Cochain& o) const {
    require_compatible(o);
    Cochain out = *this;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!o.t_[i].is_zero()) out.t_[i] -= o.t_[i];
    return out;
  }

  Cochain operator-() const {
    Cochain out = *this;
    for (F& x : out.t_)
      if (!x.is_zero()) x = -x;
    return out;
  }

  Cochain scaled(const F& k) const {
    if (k.is_zero()) return zero(alg_, deg_);
    Cochain out = *this;
    for (F& x : out.t_)
      if (!x.is_zero()) x = x * k;
    return out;
  }

  /// Multilinear evaluation on coordinate vectors; requires deg many args.
  std::vector<F> evaluate(const std::vector<std::vector<F>>& args) const {
    if (deg_ < 0) throw arity_error("cannot evaluate a formal degree -1 cochain");
    if (static_cast<int>(args.size()) != deg_)
      throw arity_error("expected " + std::to_string(deg_) + " arguments, got " +
                        std::to_string(args.size()));
    const std::size_t d = alg_->dim();
    for (const auto& a : args)
      if (a.size() != d) throw dimension_error("argument vector length mismatch");
    auto cfg = alg_->field();
    std::vector<F> out(d, cfg.zero());
    const std::size_t inputs = t_.size() / d;
    for (std::size_t m = 0; m < inputs; ++m) {
      // product of argument coordinates along the multi-index of m
      F w = cfg.one();
      std::size_t rest = m;
      bool dead = false;
      for (int k = deg_; k-- > 0;) {
        const F& c = args[static_cast<std::size_t>(k)][rest % d];
        rest /= d;
        if (c.is_zero()) {
          dead = true;
          break;
        }
        w = w * c;
      }
      if (dead) continue;
      for (std::size_t o = 0; o < d; ++o) {
        const F& c = t_[o * inputs + m];
        if (c.is_zero()) continue;
        out[o] += c * w;
      }
    }
    return out;
  }

 private:
  void require_compatible(const Cochain& o) const {
    if (alg_.get() != o.alg_.get())
      throw config_error("cochains live over different ambient algebras");
    if (deg_ != o.deg_)
      throw degree_error("degree mismatch: " + std::to_string(deg_) + " vs " +
                         std::to_string(o.deg_));
  }

  std::shared_ptr<const AlgebraSpec<F>> alg_;
  int deg_;
  std::vector<F> t_;
};

template <exact_field F>
Cochain<F> scale(const F& k, const Cochain<F>& f) {
  return f.scaled(k);
}

}  // namespace preop
