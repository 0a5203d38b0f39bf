#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "preop/error.hpp"
#include "preop/field.hpp"

namespace preop {

/// Finite-dimensional algebra presented by structure constants over an exact
/// field: product(i,j) is the coordinate vector of e_i * e_j. The product is
/// an arbitrary bilinear map; associativity is never assumed here (the formal
/// associator decides it downstream).
template <exact_field F>
class AlgebraSpec {
 public:
  AlgebraSpec(std::string name, std::size_t dim, std::vector<std::string> basis,
              std::vector<F> structure, std::optional<std::vector<F>> unit,
              typename F::Config field)
      : name_(std::move(name)),
        dim_(dim),
        basis_(std::move(basis)),
        structure_(std::move(structure)),
        unit_(std::move(unit)),
        field_(field) {
    validate();
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_labels() const { return basis_; }
  const typename F::Config& field() const { return field_; }
  const std::optional<std::vector<F>>& unit() const { return unit_; }

  /// k-th coordinate of e_i * e_j.
  const F& structure_coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim_ + j) * dim_ + k];
  }

  /// Bilinear product of coordinate vectors.
  std::vector<F> product(std::span<const F> a, std::span<const F> b) const {
    if (a.size() != dim_ || b.size() != dim_) throw dimension_error("product operand length");
    std::vector<F> out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j].is_zero()) continue;
        const F ab = a[i] * b[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const F& c = structure_coeff(i, j, k);
          if (c.is_zero()) continue;
          out[k] += ab * c;
        }
      }
    }
    return out;
  }

 private:
  void validate() const {
    if (dim_ == 0) throw load_error("algebra dimension must be positive");
    if (basis_.size() != dim_)
      throw load_error("expected " + std::to_string(dim_) + " basis labels, got " +
                       std::to_string(basis_.size()));
    if (structure_.size() != dim_ * dim_ * dim_)
      throw load_error("structure constants must form a " + std::to_string(dim_) + "x" +
                       std::to_string(dim_) + " table of coordinate vectors of length " +
                       std::to_string(dim_));
    if (unit_) {
      if (unit_->size() != dim_) throw load_error("unit vector has wrong length");
      for (std::size_t i = 0; i < dim_; ++i) {
        std::vector<F> e(dim_, field_.zero());
        e[i] = field_.one();
        auto left = product(*unit_, e);
        auto right = product(e, *unit_);
        if (left != e)
          throw load_error("declared unit fails u*" + basis_[i] + " = " + basis_[i]);
        if (right != e)
          throw load_error("declared unit fails " + basis_[i] + "*u = " + basis_[i]);
      }
    }
  }

  std::string name_;
  std::size_t dim_;
  std::vector<std::string> basis_;
  std::vector<F> structure_;  // ((i*d + j)*d + k)
  std::optional<std::vector<F>> unit_;
  typename F::Config field_;
};

}  // namespace preop
