#pragma once

// Shared in-memory fixture algebras for the unit suites.

#include <optional>
#include <string>
#include <vector>

#include "preop/algebra.hpp"
#include "preop/endo.hpp"
#include "preop/field.hpp"

namespace fixtures {

template <preop::exact_field F>
preop::AlgebraSpec<F> from_table(std::string name, std::size_t d,
                                 std::vector<std::string> basis,
                                 std::vector<std::vector<std::vector<long long>>> table,
                                 std::optional<std::vector<long long>> unit,
                                 typename F::Config cfg) {
  std::vector<F> structure;
  structure.reserve(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) structure.push_back(cfg.from_int(table[i][j][k]));
  std::optional<std::vector<F>> u;
  if (unit) {
    std::vector<F> uv;
    for (long long x : *unit) uv.push_back(cfg.from_int(x));
    u = std::move(uv);
  }
  return preop::AlgebraSpec<F>(std::move(name), d, std::move(basis), std::move(structure),
                               std::move(u), cfg);
}

/// Q[x]/(x^2): basis {1, x}.
template <preop::exact_field F>
preop::AlgebraSpec<F> dual_numbers(typename F::Config cfg = {}) {
  return from_table<F>("dual-numbers", 2, {"1", "x"},
                       {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}}, std::vector<long long>{1, 0}, cfg);
}

/// Q x Q: e_i e_j = delta_ij e_i.
template <preop::exact_field F>
preop::AlgebraSpec<F> qxq(typename F::Config cfg = {}) {
  return from_table<F>("QxQ", 2, {"e1", "e2"}, {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}},
                       std::vector<long long>{1, 1}, cfg);
}

/// 2x2 matrices over the field, basis E11, E12, E21, E22.
template <preop::exact_field F>
preop::AlgebraSpec<F> m2(typename F::Config cfg = {}) {
  return from_table<F>(
      "M2", 4, {"E11", "E12", "E21", "E22"},
      {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
       {{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}},
       {{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
       {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
      std::vector<long long>{1, 0, 0, 1}, cfg);
}

/// Non-associative 2-dim algebra: aa=a, ab=b, ba=0, bb=a; (bb)b != b(bb).
template <preop::exact_field F>
preop::AlgebraSpec<F> nonassoc(typename F::Config cfg = {}) {
  return from_table<F>("nonassoc-2d", 2, {"a", "b"}, {{{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}},
                       std::nullopt, cfg);
}

}  // namespace fixtures
