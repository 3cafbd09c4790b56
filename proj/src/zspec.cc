#include "supclose/zspec.hh"
#include "supclose/errors.hh"
#include "supclose/intutil.hh"

#include <algorithm>
#include <numeric>

namespace supclose {

namespace {

std::vector<uint64_t> sorted_primes(std::vector<uint64_t> primes, const char* what)
{
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (uint64_t p : primes)
        if (!is_prime_u64(p))
            throw unsupported_domain(std::string(what) + " entry " + std::to_string(p) +
                                     " is not prime");
    return primes;
}

// Members of a \ b, both sorted.
std::vector<uint64_t> set_difference(const std::vector<uint64_t>& a,
                                     const std::vector<uint64_t>& b)
{
    std::vector<uint64_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<uint64_t> set_intersection(const std::vector<uint64_t>& a,
                                       const std::vector<uint64_t>& b)
{
    std::vector<uint64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

std::vector<uint64_t> set_union(const std::vector<uint64_t>& a,
                                const std::vector<uint64_t>& b)
{
    std::vector<uint64_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

ZPrimeSet ZPrimeSet::empty_set()
{
    return finite({});
}

ZPrimeSet ZPrimeSet::finite(std::vector<uint64_t> primes, bool include_zero)
{
    ZPrimeSet s;
    s.kind = Kind::finite;
    s.primes = sorted_primes(std::move(primes), "prime set");
    s.include_zero = include_zero;
    return s;
}

ZPrimeSet ZPrimeSet::cofinite(std::vector<uint64_t> excluded, bool include_zero)
{
    ZPrimeSet s;
    s.kind = Kind::cofinite;
    s.primes = sorted_primes(std::move(excluded), "excluded prime set");
    s.include_zero = include_zero;
    return s;
}

ZPrimeSet ZPrimeSet::whole_spectrum()
{
    return cofinite({}, true);
}

bool ZPrimeSet::is_empty() const
{
    return kind == Kind::finite && primes.empty() && !include_zero;
}

bool ZPrimeSet::is_whole_spectrum() const
{
    return kind == Kind::cofinite && primes.empty() && include_zero;
}

bool ZPrimeSet::contains_prime(uint64_t p) const
{
    const bool listed = std::binary_search(primes.begin(), primes.end(), p);
    return kind == Kind::finite ? listed : !listed;
}

bool ZPrimeSet::operator==(const ZPrimeSet& o) const
{
    // Representations are canonical: a cofinite set of primes is never
    // expressible as a finite one.
    return kind == o.kind && include_zero == o.include_zero && primes == o.primes;
}

std::string ZPrimeSet::to_string() const
{
    if (is_whole_spectrum())
        return "Spec(Z)";
    std::string body;
    if (kind == Kind::finite) {
        std::string out = "{";
        bool first = true;
        if (include_zero) {
            out += "(0)";
            first = false;
        }
        for (uint64_t p : primes) {
            if (!first)
                out += ", ";
            out += std::to_string(p) + "Z";
            first = false;
        }
        return out + "}";
    }
    // excluded points: (0) unless present, then each excluded prime
    std::string out = "Spec(Z) \\ {";
    bool first = true;
    if (!include_zero) {
        out += "(0)";
        first = false;
    }
    for (uint64_t p : primes) {
        if (!first)
            out += ", ";
        out += std::to_string(p) + "Z";
        first = false;
    }
    return out + "}";
}

ZPrimeSet zset_union(const ZPrimeSet& a, const ZPrimeSet& b)
{
    ZPrimeSet s;
    s.include_zero = a.include_zero || b.include_zero;
    const bool a_fin = a.kind == ZPrimeSet::Kind::finite;
    const bool b_fin = b.kind == ZPrimeSet::Kind::finite;
    if (a_fin && b_fin) {
        s.kind = ZPrimeSet::Kind::finite;
        s.primes = set_union(a.primes, b.primes);
    } else if (!a_fin && !b_fin) {
        s.kind = ZPrimeSet::Kind::cofinite;
        s.primes = set_intersection(a.primes, b.primes);
    } else {
        const ZPrimeSet& fin = a_fin ? a : b;
        const ZPrimeSet& cof = a_fin ? b : a;
        s.kind = ZPrimeSet::Kind::cofinite;
        s.primes = set_difference(cof.primes, fin.primes);
    }
    return s;
}

ZPrimeSet zset_closure(const ZPrimeSet& s)
{
    if (s.kind == ZPrimeSet::Kind::finite && !s.include_zero)
        return s;
    // (0) is dense, and a cofinite set of primes has zero intersection
    // (a nonzero integer has finitely many prime divisors), so its
    // closure also picks up everything.
    return ZPrimeSet::whole_spectrum();
}

std::string ZIdeal::to_string() const
{
    if (n == 0)
        return "0";
    if (n == 1)
        return "Z";
    return std::to_string(n) + "Z";
}

ZPrimeSet z_variety(const ZIdeal& ideal)
{
    if (ideal.n == 0)
        return ZPrimeSet::whole_spectrum();
    if (ideal.n == 1)
        return ZPrimeSet::empty_set();
    return ZPrimeSet::finite(prime_factors_u64(ideal.n));
}

ZModule ZModule::make(std::vector<uint64_t> torsion, uint64_t free_rank,
                      bool has_cofinite_family, std::vector<uint64_t> cofinite_excluded)
{
    ZModule m;
    for (uint64_t n : torsion)
        if (n < 2)
            throw unsupported_domain("torsion order " + std::to_string(n) +
                                     " is not a nontrivial cyclic order");
    std::sort(torsion.begin(), torsion.end());
    m.torsion_ = std::move(torsion);
    m.free_rank_ = free_rank;
    m.has_cofinite_family_ = has_cofinite_family;
    if (has_cofinite_family)
        m.cofinite_excluded_ = sorted_primes(std::move(cofinite_excluded), "excluded");
    else if (!cofinite_excluded.empty())
        throw internal_error("excluded primes given without the cofinite family");
    return m;
}

bool ZModule::is_zero() const
{
    return torsion_.empty() && free_rank_ == 0 && !has_cofinite_family_;
}

namespace {

std::vector<uint64_t> torsion_primes(const ZModule& e)
{
    std::vector<uint64_t> primes;
    for (uint64_t n : e.torsion())
        for (uint64_t p : prime_factors_u64(n))
            primes.push_back(p);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

} // namespace

ZPrimeSet z_supp(const ZModule& e)
{
    ZPrimeSet s = ZPrimeSet::finite(torsion_primes(e));
    if (e.free_rank() > 0)
        s = zset_union(s, ZPrimeSet::whole_spectrum());
    if (e.has_cofinite_family())
        s = zset_union(s, ZPrimeSet::cofinite(e.cofinite_excluded()));
    return s;
}

ZIdeal z_oda(const ZModule& e)
{
    if (e.free_rank() > 0 || e.has_cofinite_family())
        return ZIdeal{0};
    uint64_t radical = 1;
    for (uint64_t n : e.torsion()) {
        // lcm of squarefree kernels = squarefree kernel of the lcm.
        const uint64_t k = squarefree_kernel_u64(n);
        radical = radical / std::gcd(radical, k) * k;
    }
    return ZIdeal{radical};
}

ZPrimeSet z_ass(const ZModule& e)
{
    if (e.has_cofinite_family() && e.free_rank() > 0)
        throw unsupported_domain("cofinite family mixed with a free part: the "
                                 "assassinator of this combination is not supported");
    ZPrimeSet s = ZPrimeSet::finite(torsion_primes(e), e.free_rank() > 0);
    if (e.has_cofinite_family())
        s = zset_union(s, ZPrimeSet::cofinite(e.cofinite_excluded()));
    return s;
}

ZCrucialCritical z_crucial_critical(const ZModule& e)
{
    if (!e.is_finitely_generated())
        throw unsupported_domain("crucial/critical ideal requires a finitely "
                                 "generated module");
    if (e.is_zero())
        throw unsupported_domain("crucial/critical ideal requires a nonzero module");
    ZCrucialCritical result;
    if (e.free_rank() > 0)
        return result;    // O(E) = 0 is not maximal; E has infinite length
    const std::vector<uint64_t> primes = torsion_primes(e);
    if (primes.size() == 1) {
        result.exists = true;
        result.prime = primes.front();
    }
    return result;
}

} // namespace supclose
