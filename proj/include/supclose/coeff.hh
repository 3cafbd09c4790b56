/**
 * @file coeff.hh
 * @brief Coefficient fields: exact rationals (GMP) and prime fields Z/p.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "supclose/errors.hh"
#include "supclose/intutil.hh"

namespace supclose {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Rat& a) { return mpq_sgn(a.get_mpq_t()) == 0; }
inline bool is_one(const Rat& a) { return a == 1; }
inline bool is_negative(const Rat& a) { return mpq_sgn(a.get_mpq_t()) < 0; }
inline Rat coeff_abs(const Rat& a) { return abs(a); }
inline std::string coeff_str(const Rat& a) { return a.get_str(); }

// Prime field element. Each value carries its modulus; mixing moduli is a bug.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  static Fp from_int(const Int& n, std::uint64_t p) {
    Int r = n % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return Fp(r.get_ui(), p);
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  Fp inverse() const {
    if (v_ == 0) throw internal_error("inverse of zero in Z/p");
    return Fp(powmod_u64(v_, p_ - 2, p_), p_);
  }

  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    check(a, b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    return Fp(mulmod_u64(a.v_, b.v_, a.p_), a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  friend bool operator==(const Fp& a, const Fp& b) {
    check(a, b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

 private:
  static void check(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) throw internal_error("mixed moduli in Z/p arithmetic");
  }
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(const Fp& a) { return a.value() == 0; }
inline bool is_one(const Fp& a) { return a.value() == 1; }
inline bool is_negative(const Fp&) { return false; }
inline Fp coeff_abs(const Fp& a) { return a; }
inline std::string coeff_str(const Fp& a) { return std::to_string(a.value()); }

}  // namespace supclose
