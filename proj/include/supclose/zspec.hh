#ifndef SUPCLOSE_ZSPEC_HH
#define SUPCLOSE_ZSPEC_HH

#include <cstdint>
#include <string>
#include <vector>

// The prime spectrum of the integers, restricted to the subsets the
// supported module families can produce: finite sets of nonzero primes
// and complements of such sets, each with or without the generic point
// (0).  This family is closed under the unions and closures required
// here while staying exactly representable.

namespace supclose {

struct ZPrimeSet {
    enum class Kind { finite, cofinite };

    Kind kind = Kind::finite;
    // Ascending nonzero primes: the members for a finite set, the
    // excluded primes for a cofinite one.
    std::vector<uint64_t> primes;
    bool include_zero = false;   // is the generic point (0) in the set?

    static ZPrimeSet empty_set();
    static ZPrimeSet finite(std::vector<uint64_t> primes, bool include_zero = false);
    static ZPrimeSet cofinite(std::vector<uint64_t> excluded, bool include_zero = false);
    static ZPrimeSet whole_spectrum();    // Spec(ℤ)

    bool is_empty() const;
    bool is_whole_spectrum() const;
    bool contains_prime(uint64_t p) const;

    bool operator==(const ZPrimeSet& o) const;
    bool operator!=(const ZPrimeSet& o) const { return !(*this == o); }

    // e.g. "{}", "{(0), 2Z, 3Z}", "Spec(Z) \ {5Z}", "Spec(Z)"
    std::string to_string() const;
};

ZPrimeSet zset_union(const ZPrimeSet& a, const ZPrimeSet& b);

// Zariski closure: a finite set of nonzero primes is closed; any set
// containing (0), and any cofinite set (whose members' intersection is
// the zero ideal), closes up to all of Spec(ℤ).
ZPrimeSet zset_closure(const ZPrimeSet& s);

// The ideal nℤ, n ≥ 0.
struct ZIdeal {
    uint64_t n = 0;

    bool is_zero() const { return n == 0; }
    bool is_unit() const { return n == 1; }
    bool operator==(const ZIdeal& o) const { return n == o.n; }
    bool operator!=(const ZIdeal& o) const { return !(*this == o); }
    std::string to_string() const;    // "0", "Z", "6Z"
};

// V(nℤ) ⊆ Spec(ℤ).
ZPrimeSet z_variety(const ZIdeal& ideal);

// Finitely generated part ⊕ ℤ/n_i ⊕ ℤ^rank, optionally extended by the
// infinite family ⊕ ℤ/p over all primes p outside `cofinite_excluded`.
class ZModule {
public:
    // torsion orders must be ≥ 2 (ℤ/1 = 0 is dropped by the session
    // layer before it gets here), excluded entries must be prime.
    static ZModule make(std::vector<uint64_t> torsion, uint64_t free_rank,
                        bool has_cofinite_family = false,
                        std::vector<uint64_t> cofinite_excluded = {});

    const std::vector<uint64_t>& torsion() const { return torsion_; }
    uint64_t free_rank() const { return free_rank_; }
    bool has_cofinite_family() const { return has_cofinite_family_; }
    const std::vector<uint64_t>& cofinite_excluded() const { return cofinite_excluded_; }

    bool is_zero() const;
    bool is_finitely_generated() const { return !has_cofinite_family_; }

private:
    ZModule() = default;

    std::vector<uint64_t> torsion_;      // ascending, each ≥ 2
    uint64_t free_rank_ = 0;
    bool has_cofinite_family_ = false;
    std::vector<uint64_t> cofinite_excluded_;   // ascending primes
};

// Supp(E): torsion contributes the prime divisors of the orders, a free
// part contributes everything, the cofinite family contributes exactly
// its (non-closed) cofinite prime set.
ZPrimeSet z_supp(const ZModule& e);

// O(E) = ∩ √(0 : x): rad(lcm of the torsion orders)ℤ for the finitely
// generated part, 0 as soon as the free rank is positive or the
// cofinite family is present.
ZIdeal z_oda(const ZModule& e);

// Ass(E).  Mixing the cofinite family with a free part is refused to
// keep the semantics clean.
ZPrimeSet z_ass(const ZModule& e);

struct ZCrucialCritical {
    bool exists = false;
    uint64_t prime = 0;   // crucial = critical = pℤ when exists
};

// Crucial/critical ideal of a nonzero finitely generated ZModule: both
// exist iff the free rank is zero and every torsion order is a power of
// one common prime p, and then both equal pℤ.
ZCrucialCritical z_crucial_critical(const ZModule& e);

} // namespace supclose

#endif
