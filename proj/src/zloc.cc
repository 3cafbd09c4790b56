#include "supclose/zloc.hh"
#include "supclose/errors.hh"
#include "supclose/intutil.hh"

namespace supclose {

ZLocAnalysis zloc_analyze(uint64_t n)
{
    if (n == 0)
        throw unsupported_domain("cannot localize the integers at zero");

    ZLocAnalysis a;
    a.n = n;
    if (n == 1) {
        a.trivial = true;
        a.oda = ZIdeal{1};
        a.supp = ZPrimeSet::empty_set();
        a.conductor = ZIdeal{1};
        // Ass(E) = Ass(0) is empty; an empty family is not counted as a
        // chain, matching "chain ⟺ prime power" (1 is not a prime power).
        a.ass_chain = false;
        return a;
    }

    const std::vector<uint64_t> primes = prime_factors_u64(n);
    a.oda = ZIdeal{squarefree_kernel_u64(n)};
    a.supp = ZPrimeSet::finite(primes);
    a.conductor = ZIdeal{0};   // no nonzero integer clears every power of n

    // Supp(E) = {pℤ : p | n}; it is the singleton {pℤ} exactly for prime
    // powers, and then every √(ℤ : x) = pℤ as well.
    if (primes.size() == 1) {
        a.crucial.exists = true;
        a.crucial.prime = primes.front();
        a.critical.exists = true;
        a.critical.prime = primes.front();
        a.ass_chain = true;
    }
    return a;
}

Int zloc_denominator(uint64_t n, const Int& a, unsigned k)
{
    if (n == 0)
        throw unsupported_domain("cannot localize the integers at zero");
    Int power;
    mpz_ui_pow_ui(power.get_mpz_t(), n, k);
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), power.get_mpz_t());
    return power / g;
}

ZPrimeSet zloc_ass_transfer(uint64_t n, uint64_t p)
{
    if (n == 0)
        throw unsupported_domain("cannot localize the integers at zero");
    if (!is_prime_u64(p))
        throw unsupported_domain(std::to_string(p) + " is not prime");
    if (n % p == 0)
        return ZPrimeSet::empty_set();   // p invertible, T/pT = 0
    return ZPrimeSet::finite({p});
}

} // namespace supclose
