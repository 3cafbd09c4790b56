/**
 * @file ideal_ops.hh
 * @brief Ideal-level operations: intersection, quotient, saturation, radical
 *        membership, and the combinatorics of monomial ideals (radical, minimal
 *        primes, associated primes).
 */
#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "supclose/groebner.hh"

namespace supclose {

namespace detail {

// Minimal generating set of a monomial ideal given by exponent vectors:
// deduplicate and drop every monomial some other one divides.
inline std::vector<Exps> minimalize_monomials(std::vector<Exps> in) {
  std::sort(in.begin(), in.end(), [](const Exps& a, const Exps& b) {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  in.erase(std::unique(in.begin(), in.end()), in.end());
  std::vector<Exps> out;
  for (const auto& e : in) {
    bool redundant = false;
    for (const auto& kept : out) {
      if (exps_divides(kept, e)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(e);
  }
  return out;
}

template <class K>
std::vector<Exps> monomial_exponents(const Ideal<K>& I) {
  std::vector<Exps> es;
  es.reserve(I.gens().size());
  for (const auto& g : I.gens()) es.push_back(g.leading().mono);
  return minimalize_monomials(std::move(es));
}

template <class K>
Ideal<K> ideal_from_exponents(const RingPtr<K>& R, std::vector<Exps> es) {
  es = minimalize_monomials(std::move(es));
  std::vector<Polynomial<K>> gens;
  gens.reserve(es.size());
  for (auto& e : es) gens.push_back(Polynomial<K>::monomial(R, std::move(e), coeff_one(*R)));
  return Ideal<K>(R, std::move(gens));
}

template <class K>
void require_monomial(const Ideal<K>& I, const char* op) {
  if (!I.is_monomial())
    throw unsupported_domain(std::string(op) + " requires a monomial ideal");
}

}  // namespace detail

// I ∩ J. Monomial ideals meet by pairwise lcm; in general a fresh variable t
// scales the two ideals, t*I + (1-t)*J, and eliminating t leaves the meet.
template <class K>
Ideal<K> ideal_intersect(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  const RingPtr<K>& R = I.ring();
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal<K>::zero(R);
  if (I.is_monomial() && J.is_monomial()) {
    std::vector<Exps> es;
    for (const auto& a : detail::monomial_exponents(I))
      for (const auto& b : detail::monomial_exponents(J)) es.push_back(exps_lcm(a, b));
    return detail::ideal_from_exponents(R, std::move(es));
  }
  RingPtr<K> Rt = ring_with_prefix_vars(R, {fresh_var_name(R)});
  std::vector<int> to(R->nvars());
  for (std::size_t i = 0; i < R->nvars(); ++i) to[i] = static_cast<int>(i + 1);
  Polynomial<K> t = Polynomial<K>::variable(Rt, 0);
  Polynomial<K> one_minus_t = Polynomial<K>::one(Rt) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.gens()) gens.push_back(t * map_vars(g, Rt, to));
  for (const auto& g : J.gens()) gens.push_back(one_minus_t * map_vars(g, Rt, to));
  GroebnerBasis<K> gb = buchberger(Rt, gens);

  std::vector<int> back(Rt->nvars(), -1);
  for (std::size_t i = 0; i < R->nvars(); ++i) back[i + 1] = static_cast<int>(i);
  std::vector<Polynomial<K>> kept;
  for (const auto& e : gb.elems) {
    bool no_t = true;
    for (const auto& term : e.terms())
      if (term.mono[0] != 0) {
        no_t = false;
        break;
      }
    if (no_t) kept.push_back(map_vars(e, R, back));
  }
  return Ideal<K>(R, std::move(kept));
}

// (I : g) for a single polynomial, through I ∩ (g) = g * (I : g).
template <class K>
Ideal<K> ideal_quotient_single(const Ideal<K>& I, const Polynomial<K>& g) {
  require_same_ring(I.ring(), g.ring());
  const RingPtr<K>& R = I.ring();
  if (g.is_zero()) return Ideal<K>::unit(R);
  if (g.is_constant()) return I;
  Ideal<K> meet = ideal_intersect(I, Ideal<K>(R, {g}));
  std::vector<Polynomial<K>> gens;
  gens.reserve(meet.gens().size());
  for (const auto& f : meet.gens()) gens.push_back(divide_exact(f, g));
  return Ideal<K>(R, std::move(gens));
}

// (I : J) = ∩_g (I : g) over the generators of J; (I : (0)) is the whole ring.
template <class K>
Ideal<K> ideal_quotient(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero_ideal()) return Ideal<K>::unit(I.ring());
  bool first = true;
  Ideal<K> acc = Ideal<K>::unit(I.ring());
  for (const auto& g : J.gens()) {
    Ideal<K> q = ideal_quotient_single(I, g);
    acc = first ? q : ideal_intersect(acc, q);
    first = false;
  }
  return acc;
}

// (I : f^∞) by eliminating t from I + (1 - t*f).
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& f) {
  require_same_ring(I.ring(), f.ring());
  if (f.is_zero()) throw unsupported_domain("saturation by zero");
  const RingPtr<K>& R = I.ring();
  if (f.is_constant()) return I;
  RingPtr<K> Rt = ring_with_prefix_vars(R, {fresh_var_name(R)});
  std::vector<int> to(R->nvars());
  for (std::size_t i = 0; i < R->nvars(); ++i) to[i] = static_cast<int>(i + 1);
  Polynomial<K> t = Polynomial<K>::variable(Rt, 0);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.gens()) gens.push_back(map_vars(g, Rt, to));
  gens.push_back(Polynomial<K>::one(Rt) - t * map_vars(f, Rt, to));
  GroebnerBasis<K> gb = buchberger(Rt, gens);

  std::vector<int> back(Rt->nvars(), -1);
  for (std::size_t i = 0; i < R->nvars(); ++i) back[i + 1] = static_cast<int>(i);
  std::vector<Polynomial<K>> kept;
  for (const auto& e : gb.elems) {
    bool no_t = true;
    for (const auto& term : e.terms())
      if (term.mono[0] != 0) {
        no_t = false;
        break;
      }
    if (no_t) kept.push_back(map_vars(e, R, back));
  }
  return Ideal<K>(R, std::move(kept));
}

// f ∈ √I, decided by whether 1 ∈ I + (1 - t*f) in the extended ring.
template <class K>
bool radical_member(const Polynomial<K>& f, const Ideal<K>& I) {
  require_same_ring(f.ring(), I.ring());
  const RingPtr<K>& R = I.ring();
  RingPtr<K> Rt = ring_with_prefix_vars(R, {fresh_var_name(R)});
  std::vector<int> to(R->nvars());
  for (std::size_t i = 0; i < R->nvars(); ++i) to[i] = static_cast<int>(i + 1);
  Polynomial<K> t = Polynomial<K>::variable(Rt, 0);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.gens()) gens.push_back(map_vars(g, Rt, to));
  gens.push_back(Polynomial<K>::one(Rt) - t * map_vars(f, Rt, to));
  return buchberger(Rt, gens).is_unit();
}

// Radical of a monomial ideal: squarefree parts of the generators, minimalized.
template <class K>
Ideal<K> monomial_radical(const Ideal<K>& I) {
  detail::require_monomial(I, "monomial_radical");
  std::vector<Exps> es;
  for (const auto& e : detail::monomial_exponents(I)) es.push_back(squarefree_part(e));
  return detail::ideal_from_exponents(I.ring(), std::move(es));
}

// A prime generated by a subset of the variables, kept as sorted indices. The
// empty set is the zero ideal (prime, since the ring is a domain).
struct MonomialPrime {
  std::vector<std::uint32_t> vars;
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  // Canonical order: fewer variables first, then lexicographic.
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
  }
  bool contains_var(std::uint32_t v) const {
    return std::find(vars.begin(), vars.end(), v) != vars.end();
  }
};

template <class K>
Ideal<K> ideal_from_prime(const RingPtr<K>& R, const MonomialPrime& P) {
  std::vector<Polynomial<K>> gens;
  gens.reserve(P.vars.size());
  for (auto v : P.vars) gens.push_back(Polynomial<K>::variable(R, v));
  return Ideal<K>(R, std::move(gens));
}

// Does the monomial prime contain the monomial ideal (some variable of P in
// every generator)?
template <class K>
bool prime_contains_ideal(const MonomialPrime& P, const Ideal<K>& I) {
  for (const auto& g : I.gens()) {
    bool hit = false;
    for (auto v : exps_support(g.leading().mono))
      if (P.contains_var(v)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

// Minimal primes over a proper monomial ideal: the minimal sets of variables
// hitting the support of every generator. Computed by expanding the product of
// the generator supports with absorption. The zero ideal yields the zero prime.
template <class K>
std::vector<MonomialPrime> monomial_min_primes(const Ideal<K>& I) {
  detail::require_monomial(I, "monomial_min_primes");
  if (I.is_unit()) throw unsupported_domain("minimal primes of the unit ideal");
  std::vector<std::vector<std::uint32_t>> covers = {{}};
  for (const auto& e : detail::monomial_exponents(I)) {
    std::vector<std::uint32_t> supp = exps_support(e);
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& c : covers) {
      bool hit = false;
      for (auto v : supp)
        if (std::find(c.begin(), c.end(), v) != c.end()) {
          hit = true;
          break;
        }
      if (hit) {
        next.push_back(c);
      } else {
        for (auto v : supp) {
          std::vector<std::uint32_t> cc = c;
          cc.insert(std::upper_bound(cc.begin(), cc.end(), v), v);
          next.push_back(std::move(cc));
        }
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    covers.clear();
    for (const auto& c : next) {
      bool absorbed = false;
      for (const auto& kept : covers) {
        if (std::includes(c.begin(), c.end(), kept.begin(), kept.end())) {
          absorbed = true;
          break;
        }
      }
      if (!absorbed) covers.push_back(c);
    }
  }
  std::vector<MonomialPrime> primes;
  primes.reserve(covers.size());
  for (auto& c : covers) primes.push_back({std::move(c)});
  std::sort(primes.begin(), primes.end());
  return primes;
}

// Associated primes of R/I for a proper monomial ideal I: the monomial primes
// of the form √(I : m) over monomials m dividing the lcm of the generators.
template <class K>
std::vector<MonomialPrime> monomial_ass(const Ideal<K>& I) {
  detail::require_monomial(I, "monomial_ass");
  if (I.is_unit()) throw unsupported_domain("associated primes of the unit ideal");
  std::vector<Exps> gens = detail::monomial_exponents(I);
  std::size_t n = I.ring()->nvars();
  Exps L(n, 0);
  for (const auto& e : gens) L = exps_lcm(L, e);

  std::uint64_t count = 1;
  for (auto e : L) {
    count *= (e + 1);
    if (count > 200000) throw unsupported_domain("too many divisors in associated-prime search");
  }

  std::vector<MonomialPrime> out;
  Exps m(n, 0);
  for (std::uint64_t step = 0; step < count; ++step) {
    // (I : m) monomially, then its radical; prime iff every minimal generator
    // is a pure variable power.
    std::vector<Exps> q;
    bool unit = false;
    for (const auto& g : gens) {
      Exps d(n, 0);
      for (std::size_t i = 0; i < n; ++i) d[i] = g[i] > m[i] ? g[i] - m[i] : 0;
      if (exps_is_one(d)) {
        unit = true;
        break;
      }
      q.push_back(squarefree_part(d));
    }
    if (!unit) {
      std::vector<Exps> rad = detail::minimalize_monomials(std::move(q));
      bool prime = true;
      std::vector<std::uint32_t> vars;
      for (const auto& e : rad) {
        auto s = exps_support(e);
        if (s.size() != 1) {
          prime = false;
          break;
        }
        vars.push_back(s[0]);
      }
      if (prime) {
        std::sort(vars.begin(), vars.end());
        out.push_back({std::move(vars)});
      }
    }
    // next divisor of L
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] < L[i]) {
        ++m[i];
        break;
      }
      m[i] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace supclose
