#ifndef SUPCLOSE_ZLOC_HH
#define SUPCLOSE_ZLOC_HH

#include "supclose/coeff.hh"
#include "supclose/zspec.hh"

#include <cstdint>

// The flat-epimorphism family ℤ ⊆ ℤ[1/n]: denominator ideals, and the
// support/Oda/conductor/crucial/critical data of the ℤ-module
// E = ℤ[1/n]/ℤ.  Everything is exact integer arithmetic.

namespace supclose {

struct ZLocAnalysis {
    uint64_t n = 1;
    bool trivial = false;          // n = 1, extension is ℤ = ℤ
    ZIdeal oda;                    // rad(n)ℤ; the unit ideal when n = 1
    ZPrimeSet supp;                // {pℤ : p | n}
    ZIdeal conductor;              // 0 for n > 1, (1) for n = 1
    ZCrucialCritical crucial;      // exists iff n a prime power (then pℤ)
    ZCrucialCritical critical;
    bool ass_chain = false;        // Ass(E) a nonempty chain ⟺ n a prime power
};

// Requires n ≥ 1 (n = 0 would invert zero).
ZLocAnalysis zloc_analyze(uint64_t n);

// Generator of the denominator ideal (ℤ : a/n^k) = {m : m·a/n^k ∈ ℤ},
// namely n^k / gcd(a, n^k); exact via big integers.
Int zloc_denominator(uint64_t n, const Int& a, unsigned k);

// Ass_ℤ(T/pT) for T = ℤ[1/n] and p prime: {pℤ} when p ∤ n, empty when
// p | n (then pT = T).
ZPrimeSet zloc_ass_transfer(uint64_t n, uint64_t p);

} // namespace supclose

#endif
