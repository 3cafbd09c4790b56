/**
 * @file monomial.hh
 * @brief Exponent vectors and monomial orders (grevlex, lex, block elimination).
 */
#pragma once

#include <cstdint>
#include <vector>

#include "supclose/errors.hh"

namespace supclose {

// A monomial is its exponent vector; the ring fixes the variable names.
using Exps = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exps& a) {
  std::uint64_t d = 0;
  for (auto e : a) d += e;
  return d;
}

inline bool exps_divides(const Exps& a, const Exps& b) {  // a | b
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exps exps_mul(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// b / a, requiring a | b.
inline Exps exps_div(const Exps& b, const Exps& a) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) throw internal_error("inexact monomial division");
    r[i] = b[i] - a[i];
  }
  return r;
}

inline Exps exps_lcm(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline Exps exps_gcd(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

inline bool exps_coprime(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

inline Exps squarefree_part(const Exps& a) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > 0 ? 1 : 0;
  return r;
}

inline bool exps_is_one(const Exps& a) {
  for (auto e : a)
    if (e != 0) return false;
  return true;
}

inline std::vector<std::uint32_t> exps_support(const Exps& a) {
  std::vector<std::uint32_t> s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s.push_back(static_cast<std::uint32_t>(i));
  return s;
}

enum class OrderKind : std::uint8_t {
  grevlex,  // degree, ties broken by smallest exponent on the last differing variable
  lex,      // first differing variable decides
  elim,     // lex on a leading block of variables, grevlex on the rest
};

struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;
  std::uint32_t block = 0;  // block size for OrderKind::elim
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

inline int cmp_lex_range(const Exps& a, const Exps& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

inline int cmp_grevlex_range(const Exps& a, const Exps& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// Three-way compare in the given order; positive when a is the larger monomial.
inline int cmp_exps(const Exps& a, const Exps& b, const MonomialOrder& o) {
  switch (o.kind) {
    case OrderKind::grevlex:
      return cmp_grevlex_range(a, b, 0, a.size());
    case OrderKind::lex:
      return cmp_lex_range(a, b, 0, a.size());
    case OrderKind::elim: {
      int c = cmp_lex_range(a, b, 0, o.block);
      if (c != 0) return c;
      return cmp_grevlex_range(a, b, o.block, a.size());
    }
  }
  throw internal_error("unknown monomial order");
}

inline bool exps_less(const Exps& a, const Exps& b, const MonomialOrder& o) {
  return cmp_exps(a, b, o) < 0;
}

}  // namespace supclose
