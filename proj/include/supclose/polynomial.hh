/**
 * @file polynomial.hh
 * @brief Sparse multivariate polynomials with exact coefficients, terms kept in
 *        strictly decreasing monomial order.
 */
#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "supclose/ring.hh"

namespace supclose {

template <class K>
struct Term {
  Exps mono;
  K coeff;
};

template <class K>
class Polynomial {
 public:
  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {
    if (!ring_) throw internal_error("polynomial without a ring");
  }

  Polynomial(RingPtr<K> ring, std::vector<Term<K>> terms) : Polynomial(std::move(ring)) {
    for (auto& t : terms) {
      if (t.mono.size() != ring_->nvars()) throw internal_error("exponent vector has wrong length");
    }
    std::sort(terms.begin(), terms.end(), [&](const Term<K>& a, const Term<K>& b) {
      return cmp_exps(a.mono, b.mono, ring_->order) > 0;
    });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().mono == t.mono) {
        terms_.back().coeff = terms_.back().coeff + t.coeff;
        if (supclose::is_zero(terms_.back().coeff)) terms_.pop_back();
      } else if (!supclose::is_zero(t.coeff)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  static Polynomial constant(RingPtr<K> ring, K c) {
    Polynomial p(std::move(ring));
    if (!supclose::is_zero(c)) p.terms_.push_back({Exps(p.ring_->nvars(), 0), std::move(c)});
    return p;
  }

  static Polynomial one(RingPtr<K> ring) {
    K c = coeff_one(*ring);
    return constant(std::move(ring), std::move(c));
  }

  static Polynomial monomial(RingPtr<K> ring, Exps e, K c) {
    Polynomial p(std::move(ring));
    if (e.size() != p.ring_->nvars()) throw internal_error("exponent vector has wrong length");
    if (!supclose::is_zero(c)) p.terms_.push_back({std::move(e), std::move(c)});
    return p;
  }

  static Polynomial variable(RingPtr<K> ring, std::size_t i) {
    Exps e(ring->nvars(), 0);
    e.at(i) = 1;
    K c = coeff_one(*ring);
    return monomial(std::move(ring), std::move(e), std::move(c));
  }

  // Terms already strictly decreasing with nonzero coefficients.
  static Polynomial from_sorted(RingPtr<K> ring, std::vector<Term<K>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_term() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && exps_is_one(terms_[0].mono)); }

  const Term<K>& leading() const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    return terms_.front();
  }

  std::uint64_t degree() const {  // total degree; zero polynomial reports 0
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
    return d;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

// ===== arithmetic =====

template <class K, class Combine>
Polynomial<K> merge_terms(const Polynomial<K>& a, const Polynomial<K>& b, Combine comb) {
  require_same_ring(a.ring(), b.ring());
  const auto& ord = a.ring()->order;
  std::vector<Term<K>> out;
  out.reserve(a.terms().size() + b.terms().size());
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() && j != b.terms().end()) {
    int c = cmp_exps(i->mono, j->mono, ord);
    if (c > 0) {
      out.push_back(*i++);
    } else if (c < 0) {
      out.push_back({j->mono, comb(j->coeff)});
      ++j;
    } else {
      K s = i->coeff + comb(j->coeff);
      if (!supclose::is_zero(s)) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i != a.terms().end(); ++i) out.push_back(*i);
  for (; j != b.terms().end(); ++j) out.push_back({j->mono, comb(j->coeff)});
  return Polynomial<K>::from_sorted(a.ring(), std::move(out));
}

template <class K>
Polynomial<K> operator+(const Polynomial<K>& a, const Polynomial<K>& b) {
  return merge_terms(a, b, [](const K& c) { return c; });
}

template <class K>
Polynomial<K> operator-(const Polynomial<K>& a, const Polynomial<K>& b) {
  return merge_terms(a, b, [](const K& c) { return -c; });
}

template <class K>
Polynomial<K> operator-(const Polynomial<K>& a) {
  std::vector<Term<K>> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back({t.mono, -t.coeff});
  return Polynomial<K>::from_sorted(a.ring(), std::move(out));
}

// Multiplication by a single term keeps the term order.
template <class K>
Polynomial<K> mul_term(const Polynomial<K>& a, const Exps& mono, const K& coeff) {
  if (is_zero(coeff)) return Polynomial<K>(a.ring());
  std::vector<Term<K>> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) {
    K c = t.coeff * coeff;
    if (!is_zero(c)) out.push_back({exps_mul(t.mono, mono), std::move(c)});
  }
  return Polynomial<K>::from_sorted(a.ring(), std::move(out));
}

template <class K>
Polynomial<K> operator*(const Polynomial<K>& a, const Polynomial<K>& b) {
  require_same_ring(a.ring(), b.ring());
  const PolyRingData<K>* R = a.ring().get();
  auto cmp = [R](const Exps& x, const Exps& y) { return cmp_exps(x, y, R->order) > 0; };
  std::map<Exps, K, decltype(cmp)> acc(cmp);
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Exps m = exps_mul(s.mono, t.mono);
      K c = s.coeff * t.coeff;
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), std::move(c));
      } else {
        it->second = it->second + c;
      }
    }
  }
  std::vector<Term<K>> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!is_zero(c)) out.push_back({m, c});
  }
  return Polynomial<K>::from_sorted(a.ring(), std::move(out));
}

template <class K>
Polynomial<K> pow(const Polynomial<K>& a, std::uint64_t e) {
  Polynomial<K> r = Polynomial<K>::one(a.ring());
  Polynomial<K> base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& a) {
  if (a.is_zero()) return a;
  const K& lc = a.leading().coeff;
  if (is_one(lc)) return a;
  std::vector<Term<K>> out;
  out.reserve(a.terms().size());
  for (const auto& t : a.terms()) out.push_back({t.mono, t.coeff / lc});
  return Polynomial<K>::from_sorted(a.ring(), std::move(out));
}

// Exact division by g; throws internal_error when g does not divide f.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& f, const Polynomial<K>& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw internal_error("division by zero polynomial");
  Polynomial<K> q(f.ring());
  Polynomial<K> h = f;
  while (!h.is_zero()) {
    const auto& lt = h.leading();
    const auto& gl = g.leading();
    if (!exps_divides(gl.mono, lt.mono)) throw internal_error("inexact polynomial division");
    Exps m = exps_div(lt.mono, gl.mono);
    K c = lt.coeff / gl.coeff;
    Polynomial<K> piece = Polynomial<K>::monomial(f.ring(), m, c);
    q = q + piece;
    h = h - mul_term(g, m, c);
  }
  return q;
}

// Map f into a (possibly) different ring; to[i] is the target index of source
// variable i, or -1 when the variable is dropped (its exponent must be 0).
template <class K>
Polynomial<K> map_vars(const Polynomial<K>& f, const RingPtr<K>& target, const std::vector<int>& to) {
  std::vector<Term<K>> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Exps m(target->nvars(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (to[i] < 0) throw internal_error("dropped variable has a nonzero exponent");
      m[static_cast<std::size_t>(to[i])] = t.mono[i];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial<K>(target, std::move(out));
}

}  // namespace supclose
