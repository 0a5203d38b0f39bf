#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "preop/calculus.hpp"
#include "preop/error.hpp"

namespace preop {

/// Pre-operads whose components can be enumerated and sampled; what the
/// quantified suites need on top of the calculus.
template <class P>
concept sampleable_pre_operad =
    pre_operad<P> && requires(const P& ops, int n, std::size_t k, std::uint64_t s) {
      { ops.component_dim(n) } -> std::same_as<std::size_t>;
      { ops.basis_cochain(n, k) } -> std::same_as<typename P::Element>;
      { ops.random_cochain(n, s) } -> std::same_as<typename P::Element>;
    };

enum class CheckStatus { pass, fail, not_applicable };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "not_applicable";
  }
}

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  long long cases = 0;
  std::uint64_t seed = 0;      // base seed of the randomized part
  int degree_low = 1;          // quantified degree range of the inputs
  int degree_high = 3;
  std::string note;
  std::optional<DefectWitness> witness;
  std::vector<int> witness_degrees;
  std::uint64_t witness_seed = 0;  // 0 marks a basis-exhaustive tuple
};

struct SuiteOptions {
  int max_degree = 3;
  int samples = 100;
  std::uint64_t seed = 42;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) { return splitmix64(a ^ splitmix64(b)); }

}  // namespace detail

/// Shared tuple source for all quantified checks: an exhaustive pool of
/// basis cochains (complete proof at those degrees, by multilinearity) when
/// the algebra is 2-dimensional, plus seeded random cochains always.
template <sampleable_pre_operad P>
class TupleSource {
 public:
  using Element = typename P::Element;

  TupleSource(const P& ops, SuiteOptions opts) : ops_(&ops), opts_(opts) {
    dim_ = ops.component_dim(0);
    exhaustive_ = dim_ == 2;
    top_degree_ = std::min(3, opts_.max_degree);
    if (exhaustive_)
      for (int n = 1; n <= top_degree_; ++n)
        for (std::size_t k = 0; k < ops.component_dim(n); ++k)
          pool_.push_back(ops.basis_cochain(n, k));
  }

  const SuiteOptions& options() const { return opts_; }
  int top_degree() const { return top_degree_; }
  bool exhaustive() const { return exhaustive_; }
  const std::vector<Element>& pool() const { return pool_; }

  /// Degrees for the k-th random tuple of a named check, in [1, top].
  std::vector<int> random_degrees(std::uint64_t check_tag, int arity, int sample) const {
    std::vector<int> out;
    out.reserve(arity);
    for (int a = 0; a < arity; ++a) {
      std::uint64_t u = detail::mix(opts_.seed, check_tag ^ (0x1000003ull * sample + a));
      out.push_back(1 + static_cast<int>(u % static_cast<std::uint64_t>(top_degree_)));
    }
    return out;
  }

  Element random_element(std::uint64_t check_tag, int sample, int slot, int degree) const {
    std::uint64_t s = detail::mix(opts_.seed, check_tag ^ (0x9000017ull * sample + 0x51ull * slot));
    return ops_->random_cochain(degree, s);
  }

  const P& ops() const { return *ops_; }

 private:
  const P* ops_;
  SuiteOptions opts_;
  std::size_t dim_ = 0;
  bool exhaustive_ = false;
  int top_degree_ = 3;
  std::vector<Element> pool_;
};

namespace detail {

inline std::uint64_t check_tag(const std::string& name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return h;
}

template <class Record, class Element>
void record_failure(Record& rec, const Defect<Element>& d, std::uint64_t tuple_seed) {
  rec.status = CheckStatus::fail;
  rec.witness = d.witness;
  rec.witness_degrees = d.degrees;
  rec.witness_seed = tuple_seed;
  rec.note = "defect in " + d.identity;
}

/// Quantify an n-ary defect producer over the exhaustive pool and the seeded
/// random tuples. Stops at the first nonzero defect.
template <sampleable_pre_operad P, class Fn>
CheckRecord quantify(const TupleSource<P>& src, const std::string& name, int arity, Fn&& defect_of) {
  using Element = typename P::Element;
  CheckRecord rec{name};
  rec.seed = src.options().seed;
  rec.degree_high = src.top_degree();
  const std::uint64_t tag = check_tag(name);
  std::vector<const Element*> tuple(arity);

  if (src.exhaustive()) {
    const auto& pool = src.pool();
    std::vector<std::size_t> idx(arity, 0);
    bool done = pool.empty();
    while (!done) {
      for (int a = 0; a < arity; ++a) tuple[a] = &pool[idx[a]];
      Defect<Element> d = defect_of(std::span<const Element* const>(tuple));
      ++rec.cases;
      if (!d.is_zero()) {
        record_failure(rec, d, 0);
        return rec;
      }
      int a = arity - 1;
      while (a >= 0 && ++idx[a] == pool.size()) idx[a--] = 0;
      done = a < 0;
    }
  }

  for (int s = 0; s < src.options().samples; ++s) {
    auto degs = src.random_degrees(tag, arity, s);
    std::vector<Element> elems;
    elems.reserve(arity);
    for (int a = 0; a < arity; ++a) elems.push_back(src.random_element(tag, s, a, degs[a]));
    for (int a = 0; a < arity; ++a) tuple[a] = &elems[a];
    Defect<Element> d = defect_of(std::span<const Element* const>(tuple));
    ++rec.cases;
    if (!d.is_zero()) {
      record_failure(rec, d, mix(src.options().seed, tag ^ static_cast<std::uint64_t>(s)));
      return rec;
    }
  }
  return rec;
}

}  // namespace detail

/// Pre-operad axiom suite: unit laws, the three composition-relation cases,
/// the first/third-case redundancy, bilinearity and degree bookkeeping.
template <sampleable_pre_operad P>
std::vector<CheckRecord> run_axiom_checks(const PreOperadHandle<P>& calc,
                                          const SuiteOptions& opts) {
  using Element = typename P::Element;
  const P& ops = calc.ops();
  TupleSource<P> src(ops, opts);
  std::vector<CheckRecord> out;

  // Unit laws: 1 o_0 f = f = f o_i 1, exhaustively on basis cochains up to
  // degree 4 (when small enough) and on seeded random cochains.
  {
    CheckRecord rec{"axiom_unit_laws"};
    rec.seed = opts.seed;
    rec.degree_low = 0;
    rec.degree_high = 4;
    const Element one = ops.unit();
    auto check_unit = [&](const Element& f, std::uint64_t tuple_seed) {
      Defect<Element> left = make_defect("unit_left", ops.compose_at(one, 0, f), f,
                                         {ops.degree(f)});
      ++rec.cases;
      if (!left.is_zero()) {
        detail::record_failure(rec, left, tuple_seed);
        return false;
      }
      for (int i = 0; i <= ops.degree(f) - 1; ++i) {
        Defect<Element> right = make_defect("unit_right_slot_" + std::to_string(i),
                                            ops.compose_at(f, i, one), f, {ops.degree(f)});
        ++rec.cases;
        if (!right.is_zero()) {
          detail::record_failure(rec, right, tuple_seed);
          return false;
        }
      }
      return true;
    };
    const int unit_top = 4;
    bool ok = true;
    if (ops.component_dim(0) <= 4) {
      for (int n = 0; ok && n <= unit_top; ++n)
        for (std::size_t k = 0; ok && k < ops.component_dim(n); ++k)
          ok = check_unit(ops.basis_cochain(n, k), 0);
    }
    const std::uint64_t tag = detail::check_tag(rec.name);
    for (int s = 0; ok && s < opts.samples; ++s) {
      int deg = static_cast<int>(detail::mix(opts.seed, tag ^ static_cast<std::uint64_t>(s)) %
                                 static_cast<std::uint64_t>(unit_top + 1));
      ok = check_unit(ops.random_cochain(deg, detail::mix(opts.seed, tag + s)),
                      detail::mix(opts.seed, tag ^ static_cast<std::uint64_t>(s)));
    }
    out.push_back(std::move(rec));
  }

  // Composition relations, all three cases plus the redundancy of the first
  // and third, in one sweep over each (h, f, g) tuple and every valid (i, j).
  {
    CheckRecord case1{"axiom_composition_case1"}, case2{"axiom_composition_case2"},
        case3{"axiom_composition_case3"}, redundancy{"composition_relation_redundancy"},
        degrees{"degree_bookkeeping"};
    case1.seed = case2.seed = case3.seed = redundancy.seed = degrees.seed = opts.seed;
    for (CheckRecord* r : {&case1, &case2, &case3, &redundancy, &degrees})
      r->degree_high = src.top_degree();
    bool failed = false;

    auto sweep = [&](const Element& h, const Element& f, const Element& g,
                     std::uint64_t tuple_seed) {
      const int dh = ops.degree(h), df = ops.degree(f), dg = ops.degree(g);
      const int rh = dh - 1, rf = df - 1, rg = dg - 1;
      for (int i = 0; i <= rh && !failed; ++i) {
        // degree bookkeeping: deg(h o_i f) = h + f - 1
        if (ops.degree(ops.compose_at(h, i, f)) != dh + df - 1) {
          degrees.status = CheckStatus::fail;
          degrees.witness_degrees = {dh, df};
          degrees.witness_seed = tuple_seed;
          degrees.note = "deg(h o_i f) != h + f - 1";
          failed = true;
          break;
        }
        ++degrees.cases;
        for (int j = 0; j <= rh + rf && !failed; ++j) {
          if (j <= i - 1) {
            auto d = calc.composition_relation_case1(h, f, g, i, j);
            ++case1.cases;
            if (!d.is_zero()) {
              detail::record_failure(case1, d, tuple_seed);
              failed = true;
              break;
            }
            // the mechanically derived third-case instance with roles swapped
            auto d3 = calc.composition_relation_case3(h, g, f, j, i + rg);
            ++redundancy.cases;
            if (!d3.is_zero()) {
              detail::record_failure(redundancy, d3, tuple_seed);
              failed = true;
            }
          } else if (j <= i + rf) {
            auto d = calc.composition_relation_case2(h, f, g, i, j);
            ++case2.cases;
            if (!d.is_zero()) {
              detail::record_failure(case2, d, tuple_seed);
              failed = true;
            }
          } else {
            auto d = calc.composition_relation_case3(h, f, g, i, j);
            ++case3.cases;
            if (!d.is_zero()) {
              detail::record_failure(case3, d, tuple_seed);
              failed = true;
            }
          }
        }
      }
    };

    if (src.exhaustive()) {
      const auto& pool = src.pool();
      for (std::size_t a = 0; a < pool.size() && !failed; ++a)
        for (std::size_t b = 0; b < pool.size() && !failed; ++b)
          for (std::size_t c = 0; c < pool.size() && !failed; ++c)
            sweep(pool[a], pool[b], pool[c], 0);
    }
    const std::uint64_t tag = detail::check_tag("axiom_composition");
    for (int s = 0; s < opts.samples && !failed; ++s) {
      auto degs = src.random_degrees(tag, 3, s);
      sweep(src.random_element(tag, s, 0, degs[0]), src.random_element(tag, s, 1, degs[1]),
            src.random_element(tag, s, 2, degs[2]),
            detail::mix(opts.seed, tag ^ static_cast<std::uint64_t>(s)));
    }
    out.push_back(std::move(case1));
    out.push_back(std::move(case2));
    out.push_back(std::move(case3));
    out.push_back(std::move(redundancy));
    out.push_back(std::move(degrees));
  }

  // Bilinearity of o_i in both arguments, on random cochains.
  {
    CheckRecord rec{"axiom_bilinearity"};
    rec.seed = opts.seed;
    rec.degree_high = src.top_degree();
    const std::uint64_t tag = detail::check_tag(rec.name);
    for (int s = 0; s < opts.samples; ++s) {
      auto degs = src.random_degrees(tag, 2, s);
      Element f = src.random_element(tag, s, 0, degs[0]);
      Element f2 = src.random_element(tag, s, 1, degs[0]);
      Element g = src.random_element(tag, s, 2, degs[1]);
      Element g2 = src.random_element(tag, s, 3, degs[1]);
      int slot = static_cast<int>(detail::mix(opts.seed, tag + 7 * s) %
                                  static_cast<std::uint64_t>(degs[0]));
      Defect<Element> dl =
          make_defect("left_linearity", ops.compose_at(ops.add(f, f2), slot, g),
                      ops.add(ops.compose_at(f, slot, g), ops.compose_at(f2, slot, g)),
                      {degs[0], degs[1]});
      Defect<Element> dr =
          make_defect("right_linearity", ops.compose_at(f, slot, ops.add(g, g2)),
                      ops.add(ops.compose_at(f, slot, g), ops.compose_at(f, slot, g2)),
                      {degs[0], degs[1]});
      rec.cases += 2;
      if (!dl.is_zero() || !dr.is_zero()) {
        detail::record_failure(rec, dl.is_zero() ? dr : dl,
                               detail::mix(opts.seed, tag ^ static_cast<std::uint64_t>(s)));
        break;
      }
    }
    out.push_back(std::move(rec));
  }

  return out;
}

/// Identity suite of sections 3-6: Getzler, Gerstenhaber, G1, G2, the
/// delta derivations, Theorems 1/2/2*, right translations, the cup
/// associator and the cup-derivation obstruction. Identities conditioned on
/// mu^2 = 0 report not_applicable on non-associative input.
template <sampleable_pre_operad P>
std::vector<CheckRecord> run_identity_checks(const PreOperadHandle<P>& calc,
                                             const SuiteOptions& opts) {
  using Element = typename P::Element;
  const P& ops = calc.ops();
  TupleSource<P> src(ops, opts);
  std::vector<CheckRecord> out;
  using Tuple = std::span<const Element* const>;

  out.push_back(detail::quantify(src, "getzler", 3, [&](Tuple t) {
    return calc.getzler_defect(*t[0], *t[1], *t[2]);
  }));
  out.push_back(detail::quantify(src, "gerstenhaber_associator_symmetry", 3, [&](Tuple t) {
    return calc.gerstenhaber_defect(*t[0], *t[1], *t[2]);
  }));
  out.push_back(detail::quantify(src, "g1_antisymmetry", 2, [&](Tuple t) {
    return calc.antisymmetry_defect(*t[0], *t[1]);
  }));
  out.push_back(detail::quantify(src, "g2_jacobi", 3, [&](Tuple t) {
    return calc.jacobi_defect(*t[0], *t[1], *t[2]);
  }));
  out.push_back(detail::quantify(src, "delta_commutator_derivation", 2, [&](Tuple t) {
    return calc.delta_commutator_derivation_defect(*t[0], *t[1]);
  }));
  out.push_back(detail::quantify(src, "delta_squared_vs_mu_squared", 1, [&](Tuple t) {
    return calc.delta_squared_defect(*t[0]);
  }));
  out.push_back(detail::quantify(src, "theorem1_dev_total", 2, [&](Tuple t) {
    return calc.dev_total(*t[0], *t[1]);
  }));
  out.push_back(detail::quantify(src, "theorem2_dev_tribrace", 3, [&](Tuple t) {
    return calc.dev_tribrace_theorem2(*t[0], *t[1], *t[2]);
  }));
  out.push_back(detail::quantify(src, "theorem2star_dev_tribrace", 3, [&](Tuple t) {
    return calc.dev_tribrace_theorem2star(*t[0], *t[1], *t[2]);
  }));
  out.push_back(detail::quantify(src, "right_translation_derivation", 3, [&](Tuple t) {
    return calc.right_translation_defect(*t[0], *t[1], *t[2]);
  }));
  out.push_back(detail::quantify(src, "cup_associator_tetrabrace", 3, [&](Tuple t) {
    return calc.cup_associator_defect(*t[0], *t[1], *t[2]);
  }));
  out.push_back(detail::quantify(src, "cup_derivation_obstruction", 2, [&](Tuple t) {
    return calc.cup_derivation_defect(*t[0], *t[1]);
  }));
  out.push_back(detail::quantify(src, "cup_tribrace_form", 2, [&](Tuple t) {
    return calc.cup_tribrace_defect(*t[0], *t[1]);
  }));
  out.push_back(detail::quantify(src, "cup_unit_decomposition", 1, [&](Tuple t) {
    return calc.cup_unit_decomposition_defect(*t[0]);
  }));

  // Degree-0 operands are governed by the empty-sum convention; confirm the
  // identities that remain total there, delta^2 = -delta_mu^2 included.
  {
    CheckRecord rec{"degree0_convention_probes"};
    rec.seed = opts.seed;
    rec.degree_low = 0;
    rec.degree_high = src.top_degree();
    const std::uint64_t tag = detail::check_tag(rec.name);
    bool failed = false;
    auto run = [&](Defect<Element> d, std::uint64_t tuple_seed) {
      if (failed) return;
      ++rec.cases;
      if (!d.is_zero()) {
        detail::record_failure(rec, d, tuple_seed);
        failed = true;
      }
    };
    for (std::size_t k = 0; k < ops.component_dim(0) && !failed; ++k) {
      Element a = ops.basis_cochain(0, k);
      run(calc.delta_squared_defect(a), 0);
      for (int n = 1; n <= src.top_degree() && !failed; ++n)
        for (std::size_t j = 0; j < ops.component_dim(n) && !failed; ++j) {
          Element f = ops.basis_cochain(n, j);
          run(calc.dev_total(a, f), 0);
          run(calc.dev_total(f, a), 0);
          run(calc.antisymmetry_defect(a, f), 0);
          run(calc.getzler_defect(f, a, f), 0);
          run(calc.getzler_defect(a, f, f), 0);
          run(calc.delta_commutator_derivation_defect(a, f), 0);
        }
    }
    for (int s = 0; s < opts.samples && !failed; ++s) {
      std::uint64_t tuple_seed = detail::mix(opts.seed, tag ^ static_cast<std::uint64_t>(s));
      Element a = src.random_element(tag, s, 0, 0);
      auto degs = src.random_degrees(tag, 2, s);
      Element f = src.random_element(tag, s, 1, degs[0]);
      Element g = src.random_element(tag, s, 2, degs[1]);
      run(calc.delta_squared_defect(a), tuple_seed);
      run(calc.dev_total(a, f), tuple_seed);
      run(calc.dev_total(f, a), tuple_seed);
      run(calc.antisymmetry_defect(a, f), tuple_seed);
      run(calc.getzler_defect(f, a, g), tuple_seed);
      run(calc.getzler_defect(a, f, g), tuple_seed);
      run(calc.jacobi_defect(a, f, g), tuple_seed);
      run(calc.delta_commutator_derivation_defect(a, f), tuple_seed);
    }
    out.push_back(std::move(rec));
  }

  // Identities the paper conditions on formal associativity.
  const bool mu2_zero = calc.formal_associator().is_zero();
  if (mu2_zero) {
    out.push_back(detail::quantify(src, "g3_cup_associative", 3, [&](Tuple t) {
      Element lhs = calc.cup(calc.cup(*t[0], *t[1]), *t[2]);
      Element rhs = calc.cup(*t[0], calc.cup(*t[1], *t[2]));
      return make_defect("g3_cup_associative", lhs, rhs,
                         {ops.degree(*t[0]), ops.degree(*t[1]), ops.degree(*t[2])});
    }));
    out.push_back(detail::quantify(src, "delta_squared_zero", 1, [&](Tuple t) {
      Element dd = calc.delta(calc.delta(*t[0]));
      return make_defect("delta_squared_zero", dd, ops.zero(ops.degree(dd)),
                         {ops.degree(*t[0])});
    }));
  } else {
    for (const char* name : {"g3_cup_associative", "delta_squared_zero"}) {
      CheckRecord rec{name};
      rec.status = CheckStatus::not_applicable;
      rec.note = "not applicable (mu^2 != 0)";
      rec.seed = opts.seed;
      rec.degree_high = src.top_degree();
      out.push_back(std::move(rec));
    }
  }

  return out;
}

}  // namespace preop
