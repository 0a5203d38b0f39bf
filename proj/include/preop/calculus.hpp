#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "preop/error.hpp"

namespace preop {

/// What the calculus of cup products, braces, commutators and the
/// pre-coboundary needs from a pre-operad: graded elements, the signed
/// partial compositions, the unit and the linear structure. Everything in
/// this header is written once at this level; the endomorphism pre-operad is
/// the shipped instance.
template <class P>
concept pre_operad = requires(const P& ops, const typename P::Element& f, int i) {
  typename P::Element;
  { ops.degree(f) } -> std::convertible_to<int>;
  { ops.unit() } -> std::same_as<typename P::Element>;
  { ops.zero(i) } -> std::same_as<typename P::Element>;
  { ops.add(f, f) } -> std::same_as<typename P::Element>;
  { ops.subtract(f, f) } -> std::same_as<typename P::Element>;
  { ops.negate(f) } -> std::same_as<typename P::Element>;
  { ops.compose_at(f, i, f) } -> std::same_as<typename P::Element>;
};

/// Elements that can report their first nonzero coefficient, for witness
/// extraction when an identity fails.
template <class E>
concept inspectable_element = requires(const E& e, std::size_t i) {
  { e.is_zero() } -> std::same_as<bool>;
  { e.first_nonzero() } -> std::same_as<std::size_t>;
  { e.multi_index(i) } -> std::same_as<std::vector<std::size_t>>;
  { e.coeff(i).str() } -> std::same_as<std::string>;
};

struct DefectWitness {
  std::size_t flat_index = 0;
  std::vector<std::size_t> multi_index;
  std::string lhs_value;
  std::string rhs_value;
  std::string difference_value;
};

/// Left side minus right side of an identity, with enough context to
/// localize the first offending tensor entry.
template <class Element>
struct Defect {
  std::string identity;
  std::vector<int> degrees;
  std::uint64_t seed = 0;
  Element difference;
  std::optional<DefectWitness> witness;

  bool is_zero() const { return !witness.has_value(); }
};

template <inspectable_element Element>
Defect<Element> make_defect(std::string identity, const Element& lhs, const Element& rhs,
                            std::vector<int> degrees) {
  Defect<Element> d{std::move(identity), std::move(degrees), 0, lhs - rhs, std::nullopt};
  if (!d.difference.is_zero()) {
    const std::size_t at = d.difference.first_nonzero();
    d.witness = DefectWitness{at, d.difference.multi_index(at), lhs.coeff(at).str(),
                              rhs.coeff(at).str(), d.difference.coeff(at).str()};
  }
  return d;
}

/// A pre-operad together with the fixed multiplication mu in C^2. Hosts the
/// whole derived calculus: cup product, total composition, tri/tetrabraces,
/// commutator, pre-coboundary and the derivation-deviation defects.
template <pre_operad P>
class PreOperadHandle {
 public:
  using Element = typename P::Element;

  PreOperadHandle(const P& ops, Element mu) : ops_(&ops), mu_(std::move(mu)) {
    if (ops_->degree(mu_) != 2) throw degree_error("mu must live in degree 2");
  }

  const P& ops() const { return *ops_; }
  const Element& mu() const { return mu_; }
  Element unit() const { return ops_->unit(); }

  /// f cup g = (-1)^f (mu o_0 f) o_f g, of degree f + g.
  Element cup(const Element& f, const Element& g) const {
    const int df = ops_->degree(f), dg = ops_->degree(g);
    if (df < 0 || dg < 0) throw degree_error("cup requires degrees >= 0");
    Element r = ops_->compose_at(ops_->compose_at(mu_, 0, f), df, g);
    return odd(df) ? ops_->negate(r) : r;
  }

  /// f . g = sum over slots of f o_i g, of degree f + |g|. The empty slot
  /// range at deg f = 0 yields the zero element (empty-sum convention).
  Element total_compose(const Element& f, const Element& g) const {
    const int df = ops_->degree(f), dg = ops_->degree(g);
    if (df < 0 || dg < 0) throw degree_error("total composition requires degrees >= 0");
    if (df == 0) return ops_->zero(dg - 1);
    Element acc = ops_->compose_at(f, 0, g);
    for (int i = 1; i <= df - 1; ++i) acc = ops_->add(acc, ops_->compose_at(f, i, g));
    return acc;
  }

  /// Gerstenhaber tribraces {h,f,g}: substitute f, then g strictly to the
  /// right of f, into slots of h. Empty index ranges give zero.
  Element tribrace(const Element& h, const Element& f, const Element& g) const {
    const int dh = ops_->degree(h), df = ops_->degree(f), dg = ops_->degree(g);
    if (dh < 0 || df < 0 || dg < 0) throw degree_error("tribrace requires degrees >= 0");
    const int out_degree = dh + df + dg - 2;
    if (out_degree < -1) throw degree_error("tribrace collapses below formal degree -1");
    std::optional<Element> acc;
    for (int i = 0; i <= dh - 2; ++i) {
      Element hf = ops_->compose_at(h, i, f);
      for (int j = i + df; j <= df + dh - 2; ++j) {
        Element term = ops_->compose_at(hf, j, g);
        acc = acc ? ops_->add(*acc, term) : std::move(term);
      }
    }
    return acc ? *acc : ops_->zero(out_degree);
  }

  /// Tetrabraces {h,f,g,b}: three ordered non-overlapping substitutions
  /// into h.
  Element tetrabrace(const Element& h, const Element& f, const Element& g,
                     const Element& b) const {
    const int dh = ops_->degree(h), df = ops_->degree(f), dg = ops_->degree(g),
              db = ops_->degree(b);
    if (dh < 0 || df < 0 || dg < 0 || db < 0) throw degree_error("tetrabrace requires degrees >= 0");
    const int out_degree = dh + df + dg + db - 3;
    if (out_degree < -1) throw degree_error("tetrabrace collapses below formal degree -1");
    std::optional<Element> acc;
    for (int i = 0; i <= dh - 3; ++i) {
      Element hf = ops_->compose_at(h, i, f);
      for (int j = i + df; j <= dh + df - 3; ++j) {
        Element hfg = ops_->compose_at(hf, j, g);
        for (int k = j + dg; k <= dh + df + dg - 3; ++k) {
          Element term = ops_->compose_at(hfg, k, b);
          acc = acc ? ops_->add(*acc, term) : std::move(term);
        }
      }
    }
    return acc ? *acc : ops_->zero(out_degree);
  }

  /// mu^2 = mu . mu, the formal associator; zero iff mu is associative.
  Element formal_associator() const { return total_compose(mu_, mu_); }

  /// [f,g] = f.g - (-1)^(|f||g|) g.f.
  Element commutator(const Element& f, const Element& g) const {
    const int rf = ops_->degree(f) - 1, rg = ops_->degree(g) - 1;
    Element gf = total_compose(g, f);
    return ops_->subtract(total_compose(f, g), odd(rf * rg) ? ops_->negate(gf) : gf);
  }

  /// delta_nu f = (-1)^(|f||nu|) nu.f - f.nu, the right adjoint action of nu
  /// up to sign; delta = delta_mu is the pre-coboundary operator. A formal
  /// degree -1 input is the zero element, so its image is zero by linearity.
  Element delta_by(const Element& nu, const Element& f) const {
    const int rf = ops_->degree(f) - 1, rn = ops_->degree(nu) - 1;
    if (ops_->degree(f) < 0) return ops_->zero(ops_->degree(f) + ops_->degree(nu) - 1);
    Element nf = total_compose(nu, f);
    return ops_->subtract(odd(rf * rn) ? ops_->negate(nf) : nf, total_compose(f, nu));
  }

  Element delta(const Element& f) const { return delta_by(mu_, f); }

  // -- identity defects ----------------------------------------------------

  /// Composition relation, first case (0 <= j <= i-1):
  /// (h o_i f) o_j g = (-1)^(|f||g|) (h o_j g) o_(i+|g|) f.
  Defect<Element> composition_relation_case1(const Element& h, const Element& f, const Element& g,
                                             int i, int j) const {
    Element lhs = ops_->compose_at(ops_->compose_at(h, i, f), j, g);
    Element rhs = ops_->compose_at(ops_->compose_at(h, j, g), i + ops_->degree(g) - 1, f);
    if (odd((ops_->degree(f) - 1) * (ops_->degree(g) - 1))) rhs = ops_->negate(rhs);
    return make_defect("composition_relation_case1", lhs, rhs, degrees({h, f, g}));
  }

  /// Second case (i <= j <= i+|f|): (h o_i f) o_j g = h o_i (f o_(j-i) g).
  Defect<Element> composition_relation_case2(const Element& h, const Element& f, const Element& g,
                                             int i, int j) const {
    Element lhs = ops_->compose_at(ops_->compose_at(h, i, f), j, g);
    Element rhs = ops_->compose_at(h, i, ops_->compose_at(f, j - i, g));
    return make_defect("composition_relation_case2", lhs, rhs, degrees({h, f, g}));
  }

  /// Third case (i+f <= j <= |h|+|f|):
  /// (h o_i f) o_j g = (-1)^(|f||g|) (h o_(j-|f|) g) o_i f.
  Defect<Element> composition_relation_case3(const Element& h, const Element& f, const Element& g,
                                             int i, int j) const {
    Element lhs = ops_->compose_at(ops_->compose_at(h, i, f), j, g);
    Element rhs = ops_->compose_at(ops_->compose_at(h, j - ops_->degree(f) + 1, g), i, f);
    if (odd((ops_->degree(f) - 1) * (ops_->degree(g) - 1))) rhs = ops_->negate(rhs);
    return make_defect("composition_relation_case3", lhs, rhs, degrees({h, f, g}));
  }

  /// Getzler identity: (h.f).g - h.(f.g) = {h,f,g} + (-1)^(|f||g|) {h,g,f}.
  Defect<Element> getzler_defect(const Element& h, const Element& f, const Element& g) const {
    Element lhs = bullet_associator(h, f, g);
    Element hgf = tribrace(h, g, f);
    Element rhs = ops_->add(tribrace(h, f, g),
                            odd((ops_->degree(f) - 1) * (ops_->degree(g) - 1)) ? ops_->negate(hgf) : hgf);
    return make_defect("getzler", lhs, rhs, degrees({h, f, g}));
  }

  /// Gerstenhaber identity: (h,f,g) = (-1)^(|f||g|) (h,g,f) for the
  /// .-associator.
  Defect<Element> gerstenhaber_defect(const Element& h, const Element& f, const Element& g) const {
    Element lhs = bullet_associator(h, f, g);
    Element rhs = bullet_associator(h, g, f);
    if (odd((ops_->degree(f) - 1) * (ops_->degree(g) - 1))) rhs = ops_->negate(rhs);
    return make_defect("gerstenhaber_associator_symmetry", lhs, rhs, degrees({h, f, g}));
  }

  /// G1: [f,g] = -(-1)^(|f||g|) [g,f].
  Defect<Element> antisymmetry_defect(const Element& f, const Element& g) const {
    Element lhs = commutator(f, g);
    Element rhs = commutator(g, f);
    if (!odd((ops_->degree(f) - 1) * (ops_->degree(g) - 1))) rhs = ops_->negate(rhs);
    return make_defect("g1_antisymmetry", lhs, rhs, degrees({f, g}));
  }

  /// G2: graded Jacobi identity in Com^- C.
  Defect<Element> jacobi_defect(const Element& f, const Element& g, const Element& h) const {
    const int rf = ops_->degree(f) - 1, rg = ops_->degree(g) - 1, rh = ops_->degree(h) - 1;
    Element t1 = signed_by(commutator(commutator(f, g), h), rf * rh);
    Element t2 = signed_by(commutator(commutator(g, h), f), rg * rf);
    Element t3 = signed_by(commutator(commutator(h, f), g), rh * rg);
    Element lhs = ops_->add(ops_->add(t1, t2), t3);
    return make_defect("g2_jacobi", lhs, ops_->zero(ops_->degree(lhs)), degrees({f, g, h}));
  }

  /// delta is a right derivation of the commutator:
  /// delta[f,g] = (-1)^(|g|) [delta f, g] + [f, delta g].
  Defect<Element> delta_commutator_derivation_defect(const Element& f, const Element& g) const {
    Element lhs = delta(commutator(f, g));
    Element rhs = ops_->add(signed_by(commutator(delta(f), g), ops_->degree(g) - 1),
                            commutator(f, delta(g)));
    return make_defect("delta_commutator_derivation", lhs, rhs, degrees({f, g}));
  }

  /// delta^2 = -delta_(mu^2), for arbitrary (also non-associative) mu.
  Defect<Element> delta_squared_defect(const Element& f) const {
    Element lhs = delta(delta(f));
    Element rhs = ops_->negate(delta_by(formal_associator(), f));
    return make_defect("delta_squared_vs_mu_squared", lhs, rhs, degrees({f}));
  }

  /// Theorem 1: (-1)^(|g|) dev_. delta (f (x) g) = f cup g - (-1)^(fg) g cup f,
  /// where dev_. delta (f (x) g) = delta(f.g) - f.delta(g) - (-1)^(|g|) delta(f).g.
  Defect<Element> dev_total(const Element& f, const Element& g) const {
    const int dg = ops_->degree(g);
    Element dev = ops_->subtract(
        ops_->subtract(delta(total_compose(f, g)), total_compose(f, delta(g))),
        signed_by(total_compose(delta(f), g), dg - 1));
    Element gf = cup(g, f);
    Element anti = ops_->subtract(cup(f, g),
                                  signed_by(gf, ops_->degree(f) * dg));
    return make_defect("theorem1_dev_total", dev, signed_by(anti, dg - 1), degrees({f, g}));
  }

  /// Theorem 2: (-1)^(|g|) dev_{,,} delta (h,f,g)
  ///            = (h.f) cup g + (-1)^(|h|f) f cup (h.g) - h.(f cup g).
  Defect<Element> dev_tribrace_theorem2(const Element& h, const Element& f,
                                        const Element& g) const {
    Element dev = tribrace_deviation(h, f, g);
    Element rhs = ops_->add(cup(total_compose(h, f), g),
                            signed_by(cup(f, total_compose(h, g)),
                                      (ops_->degree(h) - 1) * ops_->degree(f)));
    rhs = ops_->subtract(rhs, total_compose(h, cup(f, g)));
    return make_defect("theorem2_dev_tribrace", dev, signed_by(rhs, ops_->degree(g) - 1),
                       degrees({h, f, g}));
  }

  /// Theorem 2*: (-1)^(|g|) dev_{,,} delta (h,f,g)
  ///             = [h,f] cup g + (-1)^(|h|f) f cup [h,g] - [h, f cup g].
  Defect<Element> dev_tribrace_theorem2star(const Element& h, const Element& f,
                                            const Element& g) const {
    Element dev = tribrace_deviation(h, f, g);
    Element rhs = ops_->add(cup(commutator(h, f), g),
                            signed_by(cup(f, commutator(h, g)),
                                      (ops_->degree(h) - 1) * ops_->degree(f)));
    rhs = ops_->subtract(rhs, commutator(h, cup(f, g)));
    return make_defect("theorem2star_dev_tribrace", dev, signed_by(rhs, ops_->degree(g) - 1),
                       degrees({h, f, g}));
  }

  /// Right translations of Com C are derivations of the cup algebra:
  /// (f cup g).h = f cup (g.h) + (-1)^(|h|g) (f.h) cup g.
  Defect<Element> right_translation_defect(const Element& f, const Element& g,
                                           const Element& h) const {
    Element lhs = total_compose(cup(f, g), h);
    Element rhs = ops_->add(cup(f, total_compose(g, h)),
                            signed_by(cup(total_compose(f, h), g),
                                      (ops_->degree(h) - 1) * ops_->degree(g)));
    return make_defect("right_translation_derivation", lhs, rhs, degrees({f, g, h}));
  }

  /// Cup-derivation obstruction:
  /// delta(f cup g) - f cup delta(g) - (-1)^g delta(f) cup g = (-1)^(|g|) {mu^2,f,g}.
  Defect<Element> cup_derivation_defect(const Element& f, const Element& g) const {
    Element lhs = ops_->subtract(
        ops_->subtract(delta(cup(f, g)), cup(f, delta(g))),
        signed_by(cup(delta(f), g), ops_->degree(g)));
    Element rhs = signed_by(tribrace(formal_associator(), f, g), ops_->degree(g) - 1);
    return make_defect("cup_derivation_obstruction", lhs, rhs, degrees({f, g}));
  }

  /// Cup associator: (f cup g) cup h - f cup (g cup h) = (-1)^g {mu^2, f, g, h}.
  /// The (-1)^g factor is forced by the composition relations (expand both
  /// cup sides through the second and third relation cases); without it the
  /// equality fails already for degree-(1,1,1) inputs over a non-associative
  /// product. Both sides vanish when mu^2 = 0 either way.
  Defect<Element> cup_associator_defect(const Element& f, const Element& g,
                                        const Element& h) const {
    Element lhs = ops_->subtract(cup(cup(f, g), h), cup(f, cup(g, h)));
    Element rhs = signed_by(tetrabrace(formal_associator(), f, g, h), ops_->degree(g));
    return make_defect("cup_associator_tetrabrace", lhs, rhs, degrees({f, g, h}));
  }

  /// f cup 1 + (-1)^(|f|) 1 cup f = (-1)^f mu.f  (the cup/unit split that
  /// appears inside the second form of delta).
  Defect<Element> cup_unit_decomposition_defect(const Element& f) const {
    Element one = ops_->unit();
    Element lhs = ops_->add(cup(f, one), signed_by(cup(one, f), ops_->degree(f) - 1));
    Element rhs = signed_by(total_compose(mu_, f), ops_->degree(f));
    return make_defect("cup_unit_decomposition", lhs, rhs, degrees({f}));
  }

  /// f cup g = (-1)^f {mu, f, g}.
  Defect<Element> cup_tribrace_defect(const Element& f, const Element& g) const {
    Element lhs = cup(f, g);
    Element rhs = signed_by(tribrace(mu_, f, g), ops_->degree(f));
    return make_defect("cup_tribrace_form", lhs, rhs, degrees({f, g}));
  }

 private:
  static bool odd(long long k) { return ((k % 2) + 2) % 2 == 1; }

  Element signed_by(Element e, long long parity) const {
    return odd(parity) ? ops_->negate(e) : std::move(e);
  }

  Element bullet_associator(const Element& h, const Element& f, const Element& g) const {
    return ops_->subtract(total_compose(total_compose(h, f), g),
                          total_compose(h, total_compose(f, g)));
  }

  /// dev_{,,} delta (h,f,g) = delta{h,f,g} - {h,f,delta g}
  ///                          - (-1)^(|g|) {h,delta f,g} - (-1)^(|g|+|f|) {delta h,f,g}.
  Element tribrace_deviation(const Element& h, const Element& f, const Element& g) const {
    const int rf = ops_->degree(f) - 1, rg = ops_->degree(g) - 1;
    Element dev = ops_->subtract(delta(tribrace(h, f, g)), tribrace(h, f, delta(g)));
    dev = ops_->subtract(dev, signed_by(tribrace(h, delta(f), g), rg));
    return ops_->subtract(dev, signed_by(tribrace(delta(h), f, g), rg + rf));
  }

  std::vector<int> degrees(std::initializer_list<std::reference_wrapper<const Element>> es) const {
    std::vector<int> out;
    out.reserve(es.size());
    for (const auto& e : es) out.push_back(ops_->degree(e.get()));
    return out;
  }

  const P* ops_;
  Element mu_;
};

}  // namespace preop
