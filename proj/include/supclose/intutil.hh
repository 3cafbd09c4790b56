/**
 * @file intutil.hh
 * @brief Small exact integer helpers: modular arithmetic, primality, factoring.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "supclose/errors.hh"

namespace supclose {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod_u64(r, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this witness set.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Distinct prime factors in increasing order. Trial division up to 10^6, then a
// primality check on the remainder; inputs with two prime factors above 10^6 are
// rejected rather than guessed at.
inline std::vector<std::uint64_t> prime_factors_u64(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2) return out;
  for (std::uint64_t p = 2; p <= 1000000 && p * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) {
    if (!is_prime_u64(n)) {
      throw unsupported_domain("integer has a composite cofactor beyond the factoring bound");
    }
    out.push_back(n);
  }
  return out;
}

// Product of the distinct prime factors (the squarefree kernel); 1 for n = 1.
inline std::uint64_t squarefree_kernel_u64(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t p : prime_factors_u64(n)) r *= p;
  return r;
}

inline bool is_prime_power_u64(std::uint64_t n, std::uint64_t* base = nullptr) {
  if (n < 2) return false;
  auto f = prime_factors_u64(n);
  if (f.size() != 1) return false;
  if (base) *base = f[0];
  return true;
}

}  // namespace supclose
