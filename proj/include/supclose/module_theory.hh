/**
 * @file module_theory.hh
 * @brief Finite direct sums of cyclic modules E = ⊕ R/I_i and the ideals the
 *        kernel computes for them: annihilators, the radical membership ideal
 *        O(E) = ∩ √(0 : x) (the Oda ideal), support closures, associated
 *        primes, and the crucial and critical ideals.
 *
 * A scalar a lies in O(E) exactly when the localization E_a vanishes, so O(E)
 * is the vanishing ideal of the Zariski closure of the support of E. All
 * membership tests reduce to radical membership in the component ideals; the
 * generator-level descriptions (radical, minimal primes, associated primes)
 * are available when every component is a monomial ideal.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "supclose/ideal_ops.hh"

namespace supclose {

template <class K>
struct CyclicSumModule {
  RingPtr<K> ring;
  std::vector<Ideal<K>> components;  // E = ⊕_i R/I_i

  CyclicSumModule(RingPtr<K> r, std::vector<Ideal<K>> comps)
      : ring(std::move(r)), components(std::move(comps)) {
    for (const auto& I : components) require_same_ring(I.ring(), ring);
  }

  std::size_t size() const { return components.size(); }

  bool all_monomial() const {
    for (const auto& I : components)
      if (!I.is_monomial()) return false;
    return true;
  }

  // E = 0 exactly when every component ideal is the whole ring.
  bool is_zero_module() const {
    for (const auto& I : components)
      if (!I.is_unit()) return false;
    return true;
  }
};

// An element of E as one representative polynomial per component.
template <class K>
struct ModuleElement {
  std::vector<Polynomial<K>> reps;
};

template <class K>
void require_element_of(const CyclicSumModule<K>& E, const ModuleElement<K>& x) {
  if (x.reps.size() != E.size()) throw internal_error("element length does not match module");
  for (const auto& f : x.reps) require_same_ring(f.ring(), E.ring);
}

template <class K>
bool element_is_zero(const CyclicSumModule<K>& E, const ModuleElement<K>& x) {
  require_element_of(E, x);
  for (std::size_t i = 0; i < E.size(); ++i)
    if (!E.components[i].contains(x.reps[i])) return false;
  return true;
}

template <class K>
ModuleElement<K> element_scale(const CyclicSumModule<K>& E, const Polynomial<K>& r,
                               const ModuleElement<K>& x) {
  require_element_of(E, x);
  ModuleElement<K> y;
  y.reps.reserve(E.size());
  for (const auto& f : x.reps) y.reps.push_back(r * f);
  return y;
}

template <class K>
ModuleElement<K> element_add(const CyclicSumModule<K>& E, const ModuleElement<K>& x,
                             const ModuleElement<K>& y) {
  require_element_of(E, x);
  require_element_of(E, y);
  ModuleElement<K> z;
  z.reps.reserve(E.size());
  for (std::size_t i = 0; i < E.size(); ++i) z.reps.push_back(x.reps[i] + y.reps[i]);
  return z;
}

template <class K>
ModuleElement<K> unit_element(const CyclicSumModule<K>& E, std::size_t i) {
  ModuleElement<K> x;
  x.reps.reserve(E.size());
  for (std::size_t j = 0; j < E.size(); ++j)
    x.reps.push_back(j == i ? Polynomial<K>::one(E.ring) : Polynomial<K>(E.ring));
  return x;
}

// (0 : x) = ∩_i (I_i : f_i) for x = (f_1, ..., f_k).
template <class K>
Ideal<K> ann_element(const CyclicSumModule<K>& E, const ModuleElement<K>& x) {
  require_element_of(E, x);
  Ideal<K> acc = Ideal<K>::unit(E.ring);
  for (std::size_t i = 0; i < E.size(); ++i) {
    Ideal<K> q = ideal_quotient_single(E.components[i], x.reps[i]);
    acc = (i == 0) ? q : ideal_intersect(acc, q);
  }
  return acc;
}

// (0 : E) = ∩_i I_i.
template <class K>
Ideal<K> ann_module(const CyclicSumModule<K>& E) {
  if (E.size() == 0) return Ideal<K>::unit(E.ring);
  Ideal<K> acc = E.components[0];
  for (std::size_t i = 1; i < E.size(); ++i) acc = ideal_intersect(acc, E.components[i]);
  return acc;
}

// a ∈ O(E): some power of a kills each generator, i.e. a ∈ √I_i for every i.
template <class K>
bool oda_member(const CyclicSumModule<K>& E, const Polynomial<K>& a) {
  require_same_ring(a.ring(), E.ring);
  for (const auto& I : E.components)
    if (!radical_member(a, I)) return false;
  return true;
}

// O(E) as data: always a membership oracle; exact generators (the radical of
// the module annihilator) when every component is monomial.
template <class K>
struct OdaIdealView {
  CyclicSumModule<K> module;
  std::optional<Ideal<K>> generators;  // present in the monomial case

  bool member(const Polynomial<K>& a) const { return oda_member(module, a); }
};

template <class K>
OdaIdealView<K> oda_view(const CyclicSumModule<K>& E) {
  OdaIdealView<K> v{E, std::nullopt};
  if (E.all_monomial()) v.generators = monomial_radical(ann_module(E));
  return v;
}

// Exact generators of O(E); monomial components only.
template <class K>
Ideal<K> oda_generators(const CyclicSumModule<K>& E) {
  if (!E.all_monomial())
    throw unsupported_domain("exact generators of the radical membership ideal need monomial components");
  return monomial_radical(ann_module(E));
}

// The closure of the support of E, presented as the vanishing locus of O(E).
template <class K>
struct SupportClosure {
  bool empty;                            // E = 0, closure of the support is empty
  Ideal<K> vanishing;                    // radical monomial ideal cutting out the closure
  std::vector<MonomialPrime> min_primes; // its minimal primes (none when empty)
};

template <class K>
SupportClosure<K> support_closure(const CyclicSumModule<K>& E) {
  Ideal<K> O = oda_generators(E);  // errors on non-monomial components
  if (O.is_unit()) return {true, std::move(O), {}};
  std::vector<MonomialPrime> primes = monomial_min_primes(O);
  return {false, std::move(O), std::move(primes)};
}

// Associated primes of E: the union over the proper components of the
// associated primes of R/I_i.
template <class K>
std::vector<MonomialPrime> ass_module(const CyclicSumModule<K>& E) {
  if (!E.all_monomial())
    throw unsupported_domain("associated primes need monomial components");
  std::vector<MonomialPrime> out;
  for (const auto& I : E.components) {
    if (I.is_unit()) continue;
    for (auto& P : monomial_ass(I)) out.push_back(std::move(P));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// The crucial ideal: present when the support closure is a single closed point,
// necessarily cut out by the maximal ideal of all the variables.
struct CrucialResult {
  bool exists;
  std::optional<MonomialPrime> prime;
};

template <class K>
CrucialResult crucial_ideal(const CyclicSumModule<K>& E) {
  if (!E.all_monomial())
    throw unsupported_domain("crucial ideal needs monomial components");
  if (E.is_zero_module()) throw unsupported_domain("crucial ideal of the zero module");
  std::vector<MonomialPrime> primes = monomial_min_primes(ann_module(E));
  std::vector<std::uint32_t> all(E.ring->nvars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);
  MonomialPrime full{std::move(all)};
  if (primes.size() == 1 && primes[0] == full) return {true, std::move(full)};
  return {false, std::nullopt};
}

// The critical ideal: the common radical annihilator √(0 : x) of every nonzero
// element, when one exists. For E = ⊕ R/I_i this happens exactly when every
// proper component is primary to one common monomial prime.
struct CriticalResult {
  bool exists;
  std::optional<MonomialPrime> prime;
};

template <class K>
CriticalResult critical_ideal(const CyclicSumModule<K>& E) {
  if (!E.all_monomial())
    throw unsupported_domain("critical ideal needs monomial components");
  if (E.is_zero_module()) throw unsupported_domain("critical ideal of the zero module");
  std::optional<MonomialPrime> common;
  for (const auto& I : E.components) {
    if (I.is_unit()) continue;
    std::vector<MonomialPrime> ass = monomial_ass(I);
    if (ass.size() != 1) return {false, std::nullopt};
    if (!common) {
      common = ass[0];
    } else if (!(*common == ass[0])) {
      return {false, std::nullopt};
    }
  }
  if (!common) return {false, std::nullopt};
  return {true, std::move(common)};
}

// ===== the idealization R(+)E =====

// Pairs (r, x) with (r, x)(s, y) = (rs, ry + sx); E sits inside as 0(+)E with
// square zero, and R as R(+)0.
template <class K>
struct Idealization {
  CyclicSumModule<K> module;

  struct Element {
    Polynomial<K> scalar;
    ModuleElement<K> vec;
  };

  Element make(Polynomial<K> r, ModuleElement<K> x) const {
    require_element_of(module, x);
    require_same_ring(r.ring(), module.ring);
    return {std::move(r), std::move(x)};
  }

  Element one() const {
    ModuleElement<K> z;
    for (std::size_t i = 0; i < module.size(); ++i) z.reps.push_back(Polynomial<K>(module.ring));
    return {Polynomial<K>::one(module.ring), std::move(z)};
  }

  Element mul(const Element& a, const Element& b) const {
    ModuleElement<K> v = element_add(module, element_scale(module, a.scalar, b.vec),
                                     element_scale(module, b.scalar, a.vec));
    return {a.scalar * b.scalar, std::move(v)};
  }

  Element add(const Element& a, const Element& b) const {
    return {a.scalar + b.scalar, element_add(module, a.vec, b.vec)};
  }

  // Lies in the base ring R(+)0, i.e. the module part vanishes in E.
  bool in_base(const Element& a) const { return element_is_zero(module, a.vec); }
};

// Membership in O(R, R(+)E), decided from the idealization itself: the module
// generators (0, e_i) of R(+)E over R have denominator ideals (R : (0, e_i)) =
// (0 :_E e_i), and a is a member when it is in every √(0 :_E e_i). The
// annihilators are recomputed through the element-annihilator machinery, which
// makes this an independent route to oda_member.
template <class K>
bool idealization_oda_member(const CyclicSumModule<K>& E, const Polynomial<K>& a) {
  require_same_ring(a.ring(), E.ring);
  for (std::size_t i = 0; i < E.size(); ++i) {
    Ideal<K> d = ann_element(E, unit_element(E, i));
    if (!radical_member(a, d)) return false;
  }
  return true;
}

// Membership of a/1 in O(E_f) over the localized ring R_f: component ideals
// localize to saturations, so the test is radical membership in (I_i : f^∞).
template <class K>
bool localized_oda_member(const CyclicSumModule<K>& E, const Polynomial<K>& f,
                          const Polynomial<K>& a) {
  require_same_ring(a.ring(), E.ring);
  require_same_ring(f.ring(), E.ring);
  if (f.is_zero()) throw unsupported_domain("localization at zero");
  for (const auto& I : E.components) {
    if (!radical_member(a, saturate(I, f))) return false;
  }
  return true;
}

}  // namespace supclose
