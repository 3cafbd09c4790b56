/**
 * @file groebner.hh
 * @brief Buchberger's algorithm, normal forms, ideals with a cached basis, and
 *        variable elimination.
 *
 * Bases are always reduced, monic, and sorted by increasing leading monomial,
 * which makes them canonical for the ring and order: repeated runs produce
 * byte-identical output. Pair selection follows the normal strategy (smallest
 * lcm degree, ties by lex on the lcm, then by pair index), with the coprime-lcm
 * and chain criteria pruning useless S-polynomials.
 */
#pragma once

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "supclose/parse.hh"
#include "supclose/polynomial.hh"

namespace supclose {

// Full normal form of f modulo G: no term of the result is divisible by any
// leading monomial of G. Reducers are tried in the order they appear in G.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G) {
  Polynomial<K> h = f;
  std::vector<Term<K>> remainder;
  while (!h.is_zero()) {
    const Term<K>& lt = h.leading();
    const Polynomial<K>* red = nullptr;
    for (const auto& g : G) {
      if (!g.is_zero() && exps_divides(g.leading().mono, lt.mono)) {
        red = &g;
        break;
      }
    }
    if (red == nullptr) {
      remainder.push_back(lt);
      h = Polynomial<K>::from_sorted(
          h.ring(), std::vector<Term<K>>(h.terms().begin() + 1, h.terms().end()));
    } else {
      Exps m = exps_div(lt.mono, red->leading().mono);
      K c = lt.coeff / red->leading().coeff;
      h = h - mul_term(*red, m, c);
    }
  }
  return Polynomial<K>::from_sorted(f.ring(), std::move(remainder));
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const Exps l = exps_lcm(f.leading().mono, g.leading().mono);
  Polynomial<K> a = mul_term(f, exps_div(l, f.leading().mono), K(coeff_one(*f.ring()) / f.leading().coeff));
  Polynomial<K> b = mul_term(g, exps_div(l, g.leading().mono), K(coeff_one(*g.ring()) / g.leading().coeff));
  return a - b;
}

template <class K>
struct GroebnerBasis {
  RingPtr<K> ring;
  std::vector<Polynomial<K>> elems;  // reduced, monic, increasing leading monomial

  bool is_unit() const { return elems.size() == 1 && elems[0].is_constant() && !elems[0].is_zero(); }
  bool contains(const Polynomial<K>& f) const { return normal_form(f, elems).is_zero(); }
};

namespace detail {

// Sort key of a critical pair under the normal selection strategy.
struct PairKey {
  std::uint64_t deg;
  Exps lcm;
  std::size_t i, j;
  friend bool operator<(const PairKey& a, const PairKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.lcm != b.lcm) return std::lexicographical_compare(a.lcm.begin(), a.lcm.end(), b.lcm.begin(), b.lcm.end());
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Minimalize, tail-reduce, normalize and sort a basis whose S-pairs all reduce to zero.
template <class K>
std::vector<Polynomial<K>> reduce_basis(const RingPtr<K>& ring, std::vector<Polynomial<K>> B) {
  std::sort(B.begin(), B.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return cmp_exps(a.leading().mono, b.leading().mono, ring->order) < 0;
  });
  std::vector<Polynomial<K>> minimal;
  for (auto& f : B) {
    bool redundant = false;
    for (const auto& g : minimal) {
      if (exps_divides(g.leading().mono, f.leading().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(std::move(f));
  }
  std::vector<Polynomial<K>> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial<K>> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    reduced.push_back(make_monic(normal_form(minimal[k], others)));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    return cmp_exps(a.leading().mono, b.leading().mono, ring->order) < 0;
  });
  return reduced;
}

}  // namespace detail

template <class K>
GroebnerBasis<K> buchberger(const RingPtr<K>& ring, const std::vector<Polynomial<K>>& gens) {
  std::vector<Polynomial<K>> B;
  std::set<detail::PairKey> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_poly = [&](const Polynomial<K>& f) {
    Polynomial<K> h = make_monic(normal_form(f, B));
    if (h.is_zero()) return;
    std::size_t j = B.size();
    B.push_back(std::move(h));
    for (std::size_t i = 0; i < j; ++i) {
      if (exps_coprime(B[i].leading().mono, B[j].leading().mono)) continue;  // S-pair reduces to zero
      Exps l = exps_lcm(B[i].leading().mono, B[j].leading().mono);
      pairs.insert({total_degree(l), std::move(l), i, j});
      pending.insert({i, j});
    }
  };

  for (const auto& g : gens) {
    if (!g.is_zero()) add_poly(g);
  }

  while (!pairs.empty()) {
    detail::PairKey k = *pairs.begin();
    pairs.erase(pairs.begin());
    pending.erase({k.i, k.j});

    // Chain criterion: skip when some other leading monomial divides the lcm
    // and both pairs with it have already been handled.
    bool skip = false;
    for (std::size_t m = 0; m < B.size() && !skip; ++m) {
      if (m == k.i || m == k.j) continue;
      if (!exps_divides(B[m].leading().mono, k.lcm)) continue;
      auto p1 = std::minmax(m, k.i);
      auto p2 = std::minmax(m, k.j);
      if (pending.count({p1.first, p1.second}) == 0 && pending.count({p2.first, p2.second}) == 0)
        skip = true;
    }
    if (skip) continue;

    add_poly(s_polynomial(B[k.i], B[k.j]));
  }

  GroebnerBasis<K> gb;
  gb.ring = ring;
  gb.elems = detail::reduce_basis(ring, std::move(B));
  return gb;
}

// ===== ideals =====

// A finitely generated ideal. Generators are normalized to a canonical list;
// the reduced basis is computed on first use and shared by copies. The cache
// fill is guarded, so concurrent readers see a consistent value.
template <class K>
class Ideal {
 public:
  Ideal(RingPtr<K> ring, std::vector<Polynomial<K>> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens) {
      if (!same_ring(g.ring(), ring_)) throw ring_mismatch("generator from a different ring");
      if (!g.is_zero()) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
      return poly_less(a, b);
    });
    gens_.erase(std::unique(gens_.begin(), gens_.end(),
                            [](const Polynomial<K>& a, const Polynomial<K>& b) { return a == b; }),
                gens_.end());
    monomial_ = true;
    for (const auto& g : gens_)
      if (!g.is_term()) monomial_ = false;
  }

  static Ideal zero(RingPtr<K> ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr<K> ring) {
    Polynomial<K> one = Polynomial<K>::one(ring);
    return Ideal(std::move(ring), {one});
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }
  bool is_monomial() const { return monomial_; }

  const GroebnerBasis<K>& groebner() const {
    std::call_once(cache_->once, [this] { cache_->gb.emplace(buchberger(ring_, gens_)); });
    return *cache_->gb;
  }

  bool contains(const Polynomial<K>& f) const {
    require_same_ring(f.ring(), ring_);
    if (f.is_zero()) return true;
    if (gens_.empty()) return false;
    return groebner().contains(f);
  }

  bool is_unit() const {
    if (gens_.empty()) return false;
    for (const auto& g : gens_)
      if (g.is_constant()) return true;
    return groebner().is_unit();
  }

 private:
  static bool poly_less(const Polynomial<K>& a, const Polynomial<K>& b) {
    const auto& ord = a.ring()->order;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
      int c = cmp_exps(ta[i].mono, tb[i].mono, ord);
      if (c != 0) return c < 0;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size();
    for (std::size_t i = 0; i < ta.size(); ++i) {
      if (!(ta[i].coeff == tb[i].coeff)) return coeff_str(ta[i].coeff) < coeff_str(tb[i].coeff);
    }
    return false;
  }

  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis<K>> gb;
  };

  RingPtr<K> ring_;
  std::vector<Polynomial<K>> gens_;
  bool monomial_ = true;
  std::shared_ptr<Cache> cache_;
};

template <class K>
bool ideal_member(const Polynomial<K>& f, const Ideal<K>& I) {
  return I.contains(f);
}

// Two ideals are equal when each contains the other's generators.
template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J) {
  require_same_ring(I.ring(), J.ring());
  for (const auto& g : J.gens())
    if (!I.contains(g)) return false;
  for (const auto& g : I.gens())
    if (!J.contains(g)) return false;
  return true;
}

// Generators of I intersected with the subring spanned by the kept variables:
// compute a basis under an order that eliminates the dropped block, keep the
// elements free of dropped variables, and map them back.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::size_t>& drop_vars) {
  const RingPtr<K>& R = I.ring();
  std::size_t n = R->nvars();
  std::vector<bool> dropped(n, false);
  for (auto v : drop_vars) {
    if (v >= n) throw internal_error("eliminated variable out of range");
    dropped[v] = true;
  }

  // Permuted ring: dropped variables first (the elimination block), kept after.
  std::vector<std::string> pvars;
  std::vector<int> to(n, -1);
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) {
      to[i] = static_cast<int>(pvars.size());
      pvars.push_back(R->vars[i]);
    }
  std::uint32_t block = static_cast<std::uint32_t>(pvars.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) {
      to[i] = static_cast<int>(pvars.size());
      pvars.push_back(R->vars[i]);
    }
  RingPtr<K> P = make_ring<K>(std::move(pvars), MonomialOrder{OrderKind::elim, block}, R->modulus);

  std::vector<Polynomial<K>> lifted;
  lifted.reserve(I.gens().size());
  for (const auto& g : I.gens()) lifted.push_back(map_vars(g, P, to));
  GroebnerBasis<K> gb = buchberger(P, lifted);

  std::vector<int> back(P->nvars(), -1);
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) back[static_cast<std::size_t>(to[i])] = static_cast<int>(i);

  std::vector<Polynomial<K>> kept;
  for (const auto& e : gb.elems) {
    bool free_of_block = true;
    for (const auto& t : e.terms()) {
      for (std::uint32_t i = 0; i < block && free_of_block; ++i)
        if (t.mono[i] != 0) free_of_block = false;
      if (!free_of_block) break;
    }
    if (free_of_block) kept.push_back(map_vars(e, R, back));
  }
  return Ideal<K>(R, std::move(kept));
}

}  // namespace supclose
