#include "supclose/verify.hh"

#include "supclose/errors.hh"
#include "supclose/ideal_ops.hh"
#include "supclose/intutil.hh"
#include "supclose/linalg.hh"
#include "supclose/module_theory.hh"
#include "supclose/nagata.hh"
#include "supclose/parse.hh"
#include "supclose/semigroup.hh"
#include "supclose/zloc.hh"
#include "supclose/zspec.hh"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace supclose {

namespace {

// mt19937_64 has a portable, standard-pinned output sequence, so every
// corpus below is reproducible across platforms.
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}

    uint64_t next(uint64_t bound) { return bound == 0 ? 0 : gen() % bound; }
    long range(long lo, long hi)
    {
        return lo + static_cast<long>(next(static_cast<uint64_t>(hi - lo + 1)));
    }
};

struct Suite {
    SuiteResult result;

    explicit Suite(std::string name) { result.name = std::move(name); }

    void fail(long case_id, const std::string& what)
    {
        if (result.failures.size() < 25)
            result.failures.push_back("case " + std::to_string(case_id) + ": " + what);
        else if (result.failures.size() == 25)
            result.failures.push_back("(further failures suppressed)");
    }

    SuiteResult finish(long cases)
    {
        result.cases = cases;
        result.vacuous = cases == 0;
        return std::move(result);
    }
};

long corpus_size(long count, long fallback)
{
    return count < 0 ? fallback : count;
}

// ===== polynomial-side corpus =====

const RingPtr<Rat>& qring3()
{
    static const RingPtr<Rat> r = make_ring<Rat>({"x", "y", "z"});
    return r;
}

Exps random_monomial(Rng& rng, size_t nvars, uint32_t maxexp)
{
    Exps e(qring3()->nvars(), 0);
    for (size_t i = 0; i < nvars; ++i)
        e[i] = static_cast<uint32_t>(rng.next(maxexp + 1));
    e[rng.next(nvars)] = static_cast<uint32_t>(1 + rng.next(maxexp));
    return e;
}

Rat random_coeff(Rng& rng)
{
    const long n = rng.range(1, 3);
    return rng.next(2) ? Rat(n) : Rat(-n);
}

Polynomial<Rat> random_small_poly(Rng& rng, size_t nvars, int maxterms)
{
    Polynomial<Rat> f(qring3());
    const int terms = 1 + static_cast<int>(rng.next(static_cast<uint64_t>(maxterms)));
    for (int t = 0; t < terms; ++t)
        f = f + Polynomial<Rat>::monomial(qring3(), random_monomial(rng, nvars, 3),
                                          random_coeff(rng));
    return f;
}

// One component ideal R/I; mostly monomial, occasionally with a short
// inhomogeneous generator to exercise the Groebner paths, occasionally
// zero or unit.
Ideal<Rat> random_component(Rng& rng, bool monomial_only)
{
    if (rng.next(10) == 0)
        return Ideal<Rat>::zero(qring3());
    const size_t nvars = 1 + rng.next(3);
    std::vector<Polynomial<Rat>> gens;
    const size_t ngens = 1 + rng.next(3);
    for (size_t i = 0; i < ngens; ++i)
        gens.push_back(Polynomial<Rat>::monomial(
            qring3(), random_monomial(rng, nvars, 4), Rat(1)));
    if (!monomial_only && rng.next(4) == 0)
        gens.push_back(random_small_poly(rng, nvars, 2));
    return Ideal<Rat>(qring3(), std::move(gens));
}

CyclicSumModule<Rat> random_module(Rng& rng, bool monomial_only, size_t max_comps = 4)
{
    std::vector<Ideal<Rat>> comps;
    const size_t n = 1 + rng.next(max_comps);
    for (size_t i = 0; i < n; ++i)
        comps.push_back(random_component(rng, monomial_only));
    return CyclicSumModule<Rat>(qring3(), std::move(comps));
}

// Membership probes need both members and non-members to be common, so
// bias half the draws toward products of component generators.
Polynomial<Rat> random_probe(Rng& rng, const CyclicSumModule<Rat>& e)
{
    switch (rng.next(4)) {
    case 0: {
        // product of one generator from every component: lies in ann(E)
        Polynomial<Rat> f = Polynomial<Rat>::one(qring3());
        for (const auto& comp : e.components) {
            if (comp.gens().empty())
                return Polynomial<Rat>(qring3());   // zero component: ann probe 0
            f = f * comp.gens()[rng.next(comp.gens().size())];
        }
        return f;
    }
    case 1: {
        const auto& comp = e.components[rng.next(e.size())];
        if (comp.gens().empty())
            return random_small_poly(rng, 3, 1);
        return mul_term(comp.gens()[rng.next(comp.gens().size())],
                        random_monomial(rng, 3, 2), Rat(1));
    }
    case 2:
        return Polynomial<Rat>::monomial(qring3(), random_monomial(rng, 3, 3), Rat(1));
    default:
        return random_small_poly(rng, 3, 2);
    }
}

bool prime_subset(const MonomialPrime& a, const MonomialPrime& b)
{
    return std::includes(b.vars.begin(), b.vars.end(), a.vars.begin(), a.vars.end());
}

std::vector<MonomialPrime> minimalize_primes(std::vector<MonomialPrime> ps)
{
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<MonomialPrime> out;
    for (const auto& p : ps) {
        bool dominated = false;
        for (const auto& q : ps)
            if (!(q == p) && prime_subset(q, p)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.push_back(p);
    }
    return out;
}

std::string primes_str(const std::vector<MonomialPrime>& ps)
{
    std::string out = "{";
    for (const auto& p : ps) {
        out += "(";
        for (size_t i = 0; i < p.vars.size(); ++i)
            out += (i ? "," : "") + qring3()->vars[p.vars[i]];
        out += ")";
    }
    return out + "}";
}

std::string module_str(const CyclicSumModule<Rat>& e)
{
    std::string out;
    for (const auto& comp : e.components) {
        out += out.empty() ? "R/(" : " + R/(";
        const auto& gens = comp.gens();
        for (size_t i = 0; i < gens.size(); ++i)
            out += (i ? ", " : "") + to_string(gens[i]);
        out += ")";
    }
    return out;
}

// ===== suites =====

// closure(Supp E) = V(O(E)): the minimal primes of the Oda ideal must
// match both the componentwise support and the radical-annihilator route.
SuiteResult suite_cars(uint64_t seed, long count)
{
    Suite s("cars");
    const long n = corpus_size(count, 200);
    Rng rng(seed ^ 0x63617273u);
    for (long i = 0; i < n; ++i) {
        CyclicSumModule<Rat> e = random_module(rng, /*monomial_only=*/true);

        std::vector<MonomialPrime> via_oda = support_closure(e).min_primes;

        std::vector<MonomialPrime> via_components;
        for (const auto& comp : e.components) {
            if (comp.is_unit())
                continue;
            for (auto& p : monomial_min_primes(comp))
                via_components.push_back(std::move(p));
        }
        via_components = minimalize_primes(std::move(via_components));

        Ideal<Rat> rad = monomial_radical(ann_module(e));
        std::vector<MonomialPrime> via_ann =
            rad.is_unit() ? std::vector<MonomialPrime>{} : monomial_min_primes(rad);

        if (via_oda != via_components || via_oda != via_ann)
            s.fail(i, module_str(e) + ": oda route " + primes_str(via_oda) +
                          ", support route " + primes_str(via_components) +
                          ", annihilator route " + primes_str(via_ann));
    }
    return s.finish(n);
}

// O(E) = sqrt(0 : E) membership, Oda route vs radical-annihilator route.
SuiteResult suite_proco4(uint64_t seed, long count)
{
    Suite s("proco4");
    const long n = corpus_size(count, 100);
    Rng rng(seed ^ 0x70726f63u);
    for (long i = 0; i < n; ++i) {
        CyclicSumModule<Rat> e = random_module(rng, /*monomial_only=*/false);
        Ideal<Rat> ann = ann_module(e);
        for (int probe = 0; probe < 20; ++probe) {
            Polynomial<Rat> f = random_probe(rng, e);
            const bool via_oda = oda_member(e, f);
            const bool via_ann = radical_member(f, ann);
            if (via_oda != via_ann) {
                s.fail(i, module_str(e) + ", probe " + to_string(f) + ": oda " +
                              (via_oda ? "yes" : "no") + ", radical-ann " +
                              (via_ann ? "yes" : "no"));
                break;
            }
        }
    }
    return s.finish(n);
}

// O(E) = O(R/(0:E)).
SuiteResult suite_pro(uint64_t seed, long count)
{
    Suite s("pro");
    const long n = corpus_size(count, 100);
    Rng rng(seed ^ 0x2070726fu);
    for (long i = 0; i < n; ++i) {
        CyclicSumModule<Rat> e = random_module(rng, /*monomial_only=*/false);
        CyclicSumModule<Rat> cyclic(qring3(), {ann_module(e)});
        for (int probe = 0; probe < 20; ++probe) {
            Polynomial<Rat> f = random_probe(rng, e);
            const bool left = oda_member(e, f);
            const bool right = oda_member(cyclic, f);
            if (left != right) {
                s.fail(i, module_str(e) + ", probe " + to_string(f) + ": O(E) " +
                              (left ? "yes" : "no") + ", O(R/ann E) " +
                              (right ? "yes" : "no"));
                break;
            }
        }
    }
    return s.finish(n);
}

// O(E ⊕ F) = O(E) ∩ O(F).
SuiteResult suite_con1(uint64_t seed, long count)
{
    Suite s("con1");
    const long n = corpus_size(count, 100);
    Rng rng(seed ^ 0x636f6e31u);
    for (long i = 0; i < n; ++i) {
        CyclicSumModule<Rat> e = random_module(rng, false, 2);
        CyclicSumModule<Rat> f = random_module(rng, false, 2);
        std::vector<Ideal<Rat>> comps = e.components;
        for (const auto& c : f.components)
            comps.push_back(c);
        CyclicSumModule<Rat> sum(qring3(), std::move(comps));
        for (int probe = 0; probe < 20; ++probe) {
            Polynomial<Rat> a =
                probe % 2 ? random_probe(rng, e) : random_probe(rng, f);
            const bool left = oda_member(sum, a);
            const bool right = oda_member(e, a) && oda_member(f, a);
            if (left != right) {
                s.fail(i, "E = " + module_str(e) + ", F = " + module_str(f) +
                              ", probe " + to_string(a) + ": O(E+F) " +
                              (left ? "yes" : "no") + ", O(E) cap O(F) " +
                              (right ? "yes" : "no"));
                break;
            }
        }
    }
    return s.finish(n);
}

// O(E) = O(R, R(+)E), the idealization route through element annihilators.
SuiteResult suite_idealization(uint64_t seed, long count)
{
    Suite s("idealization");
    const long n = corpus_size(count, 100);
    Rng rng(seed ^ 0x6964656cu);
    for (long i = 0; i < n; ++i) {
        CyclicSumModule<Rat> e = random_module(rng, false);
        for (int probe = 0; probe < 20; ++probe) {
            Polynomial<Rat> a = random_probe(rng, e);
            const bool left = oda_member(e, a);
            const bool right = idealization_oda_member(e, a);
            if (left != right) {
                s.fail(i, module_str(e) + ", probe " + to_string(a) + ": O(E) " +
                              (left ? "yes" : "no") + ", idealization " +
                              (right ? "yes" : "no"));
                break;
            }
        }
    }
    return s.finish(n);
}

// ===== semigroup corpus =====

NumericalSemigroup random_semigroup(Rng& rng)
{
    for (;;) {
        std::vector<long> gens;
        const int k = 2 + static_cast<int>(rng.next(2));
        for (int i = 0; i < k; ++i)
            gens.push_back(rng.range(2, 9));
        long d = 0;
        for (long g : gens)
            d = std::gcd(d, g);
        if (d == 1)
            return NumericalSemigroup::make(std::move(gens));
    }
}

// A random strict-or-equal enlargement of g: adjoin a gap (or return ℕ).
NumericalSemigroup random_enlargement(Rng& rng, const NumericalSemigroup& g)
{
    if (g.gaps().empty() || rng.next(4) == 0)
        return NumericalSemigroup::naturals();
    std::vector<long> gens = g.generators();
    gens.push_back(g.gaps()[rng.next(g.gaps().size())]);
    return NumericalSemigroup::make(std::move(gens));
}

std::string sg_str(const NumericalSemigroup& g)
{
    std::string out = "<";
    const auto& gens = g.minimal_generators();
    for (size_t i = 0; i < gens.size(); ++i)
        out += (i ? "," : "") + std::to_string(gens[i]);
    return out + ">";
}

// O_R(R,T) = O_R(R,S) ∩ (O_S(S,T) ∩ R) on random towers.
SuiteResult suite_con2(uint64_t seed, long count)
{
    Suite s("con2");
    const long n = corpus_size(count, 100);
    Rng rng(seed ^ 0x636f6e32u);
    for (long i = 0; i < n; ++i) {
        NumericalSemigroup g0 = random_semigroup(rng);
        NumericalSemigroup g1 = random_enlargement(rng, g0);
        NumericalSemigroup g2 = random_enlargement(rng, g1);
        if (!sg_tower_check(g0, g1, g2))
            s.fail(i, "tower " + sg_str(g0) + " in " + sg_str(g1) + " in " +
                          sg_str(g2) + ": membership mismatch");
    }
    return s.finish(n);
}

std::vector<std::pair<long, long>> coprime_pairs()
{
    std::vector<std::pair<long, long>> pairs;
    for (long a = 2; a <= 9; ++a)
        for (long b = a + 1; b <= 9; ++b)
            if (std::gcd(a, b) == 1)
                pairs.emplace_back(a, b);
    return pairs;
}

// The exhaustive two-generator family: every analysis certificate, plus
// towers through one intermediate semigroup.
SuiteResult suite_sg(uint64_t /*seed*/, long count)
{
    Suite s("sg");
    std::vector<std::pair<long, long>> pairs = coprime_pairs();
    const long n =
        count < 0 ? static_cast<long>(pairs.size())
                  : std::min<long>(count, static_cast<long>(pairs.size()));
    for (long i = 0; i < n; ++i) {
        const auto [a, b] = pairs[static_cast<size_t>(i)];
        NumericalSemigroup g = NumericalSemigroup::make({a, b});
        SemigroupExtension ext =
            SemigroupExtension::make(g, NumericalSemigroup::naturals());
        SgAnalysis an = sg_analyze(ext);
        const std::string name = sg_str(g) + " in N";
        if (!an.oda_is_maximal)
            s.fail(i, name + ": Oda ideal is not the maximal ideal");
        if (!an.conductor_radical_is_maximal)
            s.fail(i, name + ": sqrt(conductor) is not the maximal ideal");
        if (!an.certificates_complete)
            s.fail(i, name + ": some sqrt(d(n)) certificate failed");
        if (!an.crucial_exists || !(an.crucial == an.maximal_ideal))
            s.fail(i, name + ": crucial ideal missing or not maximal");
        if (!an.critical_exists || !(an.critical == an.maximal_ideal))
            s.fail(i, name + ": critical ideal missing or not maximal");

        // towers: adjoin the first gap, and the degenerate tower
        if (!g.gaps().empty()) {
            std::vector<long> mid_gens = g.generators();
            mid_gens.push_back(g.gaps().front());
            NumericalSemigroup mid = NumericalSemigroup::make(std::move(mid_gens));
            if (!sg_tower_check(g, mid, NumericalSemigroup::naturals()))
                s.fail(i, name + ": tower through " + sg_str(mid) + " fails");
        }
        if (!sg_tower_check(g, g, g))
            s.fail(i, name + ": degenerate tower fails");
    }
    return s.finish(n);
}

// ===== Z-side suites =====

SuiteResult suite_zloc(uint64_t seed, long count)
{
    Suite s("zloc");
    const long top = corpus_size(count, 10000);
    Rng rng(seed ^ 0x7a6c6f63u);
    for (long i = 1; i <= top; ++i) {
        const uint64_t n = static_cast<uint64_t>(i);
        ZLocAnalysis a = zloc_analyze(n);
        const std::string name = "Z[1/" + std::to_string(n) + "]";
        if (n == 1) {
            if (!a.trivial || !a.oda.is_unit() || !a.supp.is_empty() ||
                !a.conductor.is_unit() || a.crucial.exists || a.critical.exists ||
                a.ass_chain)
                s.fail(i, name + ": trivial extension misreported");
            continue;
        }
        if (a.trivial || !a.conductor.is_zero())
            s.fail(i, name + ": conductor of a proper localization must be 0");

        // independent radical check: oda | n, n | oda^14, oda squarefree
        const uint64_t r = a.oda.n;
        bool ok = r != 0 && n % r == 0;
        if (ok) {
            Int power;
            mpz_ui_pow_ui(power.get_mpz_t(), r, 14);
            ok = mpz_divisible_ui_p(power.get_mpz_t(), n) != 0;
        }
        for (uint64_t d = 2; ok && d * d <= r; ++d)
            if (r % (d * d) == 0)
                ok = false;
        if (!ok)
            s.fail(i, name + ": oda = " + std::to_string(r) +
                          " is not the radical of n");

        // prime power ⟺ rad(n) prime, via an independent primality test
        const bool expect = is_prime_u64(r);
        if (a.crucial.exists != expect || a.critical.exists != expect ||
            a.ass_chain != expect)
            s.fail(i, name + ": crucial/critical/chain flags disagree with "
                          "prime-power status");
        if (expect && (a.crucial.prime != r || a.critical.prime != r))
            s.fail(i, name + ": crucial/critical prime is not rad(n)");

        // denominator ideal identity on a small sample, against brute force
        if (n <= 12) {
            const Int an = rng.range(1, 400);
            const unsigned k = 1 + static_cast<unsigned>(rng.next(2));
            const Int d = zloc_denominator(n, an, k);
            Int power;
            mpz_ui_pow_ui(power.get_mpz_t(), n, k);
            Int smallest = 0;
            for (Int m = 1; m <= power; ++m)
                if ((m * an) % power == 0) {
                    smallest = m;
                    break;
                }
            if (d != smallest)
                s.fail(i, name + ": denominator of " + an.get_str() + "/" +
                              std::to_string(n) + "^" + std::to_string(k) +
                              " = " + d.get_str() + ", brute force " +
                              smallest.get_str());
        }

        // Ass transfer: T/pT for the first prime p coprime to n
        for (uint64_t p : {2, 3, 5, 7, 11, 13}) {
            if (n % p == 0) {
                if (!zloc_ass_transfer(n, p).is_empty())
                    s.fail(i, name + ": Ass(T/" + std::to_string(p) +
                                  "T) should be empty");
                continue;
            }
            if (zloc_ass_transfer(n, p) != ZPrimeSet::finite({p}))
                s.fail(i, name + ": Ass(T/" + std::to_string(p) + "T) wrong");
            break;
        }
    }
    // the n = 6 witness from the worked example: sqrt(Z : 1/6) = 6Z, not prime
    if (top >= 6 && zloc_denominator(6, 1, 1) != 6)
        s.fail(6, "(Z : 1/6) is not 6Z");
    return s.finish(top);
}

// ZPrimeSet specialization of a finite assassinator.
ZPrimeSet specialize(const ZPrimeSet& s)
{
    if (s.kind == ZPrimeSet::Kind::finite && s.include_zero)
        return ZPrimeSet::whole_spectrum();
    ZPrimeSet out = s;
    out.include_zero = false;
    return out.kind == ZPrimeSet::Kind::finite ? ZPrimeSet::finite(out.primes)
                                               : ZPrimeSet::cofinite(out.primes);
}

SuiteResult suite_zspec(uint64_t seed, long count)
{
    Suite s("zspec");
    const long n = corpus_size(count, 500);
    Rng rng(seed ^ 0x7a737063u);
    for (long i = 0; i < n; ++i) {
        std::vector<uint64_t> torsion;
        const int k = static_cast<int>(rng.next(5));
        for (int t = 0; t < k; ++t)
            torsion.push_back(2 + rng.next(9999));
        const uint64_t rank = rng.next(4) == 0 ? 1 + rng.next(2) : 0;
        ZModule e = ZModule::make(torsion, rank);

        std::string name = "Z-module (torsion ";
        for (uint64_t t : torsion)
            name += std::to_string(t) + " ";
        name += ", rank " + std::to_string(rank) + ")";

        const ZPrimeSet supp = z_supp(e);
        const ZPrimeSet closure = zset_closure(supp);
        const ZIdeal oda = z_oda(e);
        if (closure != z_variety(oda))
            s.fail(i, name + ": closure(Supp) = " + closure.to_string() +
                          " but V(O) = " + z_variety(oda).to_string());

        const ZPrimeSet ass = z_ass(e);
        if (closure != zset_closure(ass))
            s.fail(i, name + ": closure(Supp) differs from closure(Ass)");
        if (supp != specialize(ass))
            s.fail(i, name + ": Supp = " + supp.to_string() +
                          " is not the specialization of Ass = " + ass.to_string());

        if (oda.is_zero() != (rank > 0))
            s.fail(i, name + ": rad(ann) = 0 must mean positive free rank");
        if (supp.include_zero != (rank > 0))
            s.fail(i, name + ": generic point in Supp must mean positive rank");
        if (rank == 0 &&
            (supp.kind != ZPrimeSet::Kind::finite || supp.include_zero))
            s.fail(i, name + ": finite-length module must have a finite closed "
                          "support of maximal ideals");
    }

    // the cofinite family: a non-closed support with V(O) = Spec(Z)
    if (n > 0) {
        ZModule fam = ZModule::make({}, 0, true, {2, 3});
        const ZPrimeSet supp = z_supp(fam);
        const ZPrimeSet closure = zset_closure(supp);
        if (supp == closure)
            s.fail(n, "cofinite family: support should not be closed");
        if (!closure.is_whole_spectrum())
            s.fail(n, "cofinite family: closure should be Spec(Z)");
        if (!z_oda(fam).is_zero())
            s.fail(n, "cofinite family: Oda ideal should be 0");
        if (z_variety(z_oda(fam)) != closure)
            s.fail(n, "cofinite family: V(O) should equal closure(Supp)");
        if (zset_closure(z_ass(fam)) != closure)
            s.fail(n, "cofinite family: closure(Ass) should equal closure(Supp)");
    }
    return s.finish(n);
}

// closure(Supp E) = specialization-closure of Ass E on monomial modules.
SuiteResult suite_ass(uint64_t seed, long count)
{
    Suite s("ass");
    const long n = corpus_size(count, 200);
    Rng rng(seed ^ 0x61737320u);
    for (long i = 0; i < n; ++i) {
        CyclicSumModule<Rat> e = random_module(rng, /*monomial_only=*/true);
        std::vector<MonomialPrime> via_supp = support_closure(e).min_primes;
        std::vector<MonomialPrime> via_ass = minimalize_primes(ass_module(e));
        if (via_supp != via_ass)
            s.fail(i, module_str(e) + ": min primes of Supp " +
                          primes_str(via_supp) + ", minimal Ass " +
                          primes_str(via_ass));
    }
    return s.finish(n);
}

// ===== Nagata suite =====

const RingPtr<Rat>& qring2()
{
    static const RingPtr<Rat> r = make_ring<Rat>({"x", "y"});
    return r;
}

Polynomial<Rat> random_content_coeff(Rng& rng)
{
    Exps e(2, 0);
    e[0] = static_cast<uint32_t>(rng.next(3));
    e[1] = static_cast<uint32_t>(rng.next(3 - std::min<uint32_t>(e[0], 2)));
    Polynomial<Rat> f = Polynomial<Rat>::monomial(qring2(), e, random_coeff(rng));
    if (rng.next(10) < 3) {
        Exps e2(2, 0);
        e2[rng.next(2)] = static_cast<uint32_t>(1 + rng.next(2));
        f = f + Polynomial<Rat>::monomial(qring2(), e2, random_coeff(rng));
    }
    return f;
}

AuxPoly<Rat> random_content_poly(Rng& rng, int maxdeg)
{
    std::vector<Polynomial<Rat>> coeffs;
    const int d = static_cast<int>(rng.next(static_cast<uint64_t>(maxdeg + 1)));
    for (int ii = 0; ii <= d; ++ii)
        coeffs.push_back(rng.next(5) == 0 ? Polynomial<Rat>(qring2())
                                          : random_content_coeff(rng));
    return AuxPoly<Rat>::make(qring2(), std::move(coeffs));
}

const RingPtr<Rat>& xring()
{
    static const RingPtr<Rat> r = make_ring<Rat>({"x"});
    return r;
}

AuxPoly<Rat> aux_from_exponents(const std::vector<std::vector<long>>& slots,
                                bool positive_coeffs, Rng& rng)
{
    std::vector<Polynomial<Rat>> coeffs;
    for (const auto& slot : slots) {
        Polynomial<Rat> c(xring());
        for (long e : slot) {
            const Rat coeff = positive_coeffs ? Rat(rng.range(1, 3))
                                              : random_coeff(rng);
            c = c + Polynomial<Rat>::monomial(
                        xring(), Exps{static_cast<uint32_t>(e)}, coeff);
        }
        coeffs.push_back(std::move(c));
    }
    return AuxPoly<Rat>::make(xring(), std::move(coeffs));
}

AuxPoly<Rat> aux_one()
{
    return AuxPoly<Rat>::make(xring(), {Polynomial<Rat>::one(xring())});
}

// Random exponent of Γ below the extension bound, optionally biased into
// the conductor (everything past the Frobenius number is in C for
// extensions into ℕ-like tops; we just draw from the given ideal).
long random_member(Rng& rng, const NumericalSemigroup& g, long bound)
{
    for (;;) {
        const long e = rng.range(0, bound);
        if (g.contains(e))
            return e;
    }
}

SuiteResult suite_nagata(uint64_t seed, long count)
{
    Suite s("nagata");
    const long n = corpus_size(count, 100);
    Rng rng(seed ^ 0x6e616761u);

    // Dedekind–Mertens on random content pairs
    for (long i = 0; i < n; ++i) {
        AuxPoly<Rat> f = random_content_poly(rng, 3);
        AuxPoly<Rat> g = random_content_poly(rng, 3);
        if (!dedekind_mertens_check(f, g))
            s.fail(i, "Dedekind-Mertens fails (seed-determined pair " +
                          std::to_string(i) + ")");
    }

    std::vector<std::pair<long, long>> pairs = coprime_pairs();
    for (long i = 0; i < n; ++i) {
        const auto [a, b] = pairs[rng.next(pairs.size())];
        NumericalSemigroup g = NumericalSemigroup::make({a, b});
        SemigroupExtension ext =
            SemigroupExtension::make(g, NumericalSemigroup::naturals());
        const ExponentIdeal cond = sg_conductor(ext);

        // conductor membership implies Oda membership
        std::vector<std::vector<long>> slots(1 + rng.next(3));
        for (auto& slot : slots) {
            const int terms = static_cast<int>(rng.next(3));
            for (int t = 0; t < terms; ++t) {
                // half the exponents land in the conductor
                if (rng.next(2)) {
                    const long base =
                        cond.generators()[rng.next(cond.generators().size())];
                    slot.push_back(base + random_member(rng, g, g.frobenius() + 2));
                } else {
                    slot.push_back(rng.range(0, ext.bound()));
                }
            }
        }
        NagataElement elem = nagata_element(
            ext, aux_from_exponents(slots, false, rng), aux_one());
        if (nagata_conductor_member(ext, elem) && !nagata_oda_member(ext, elem))
            s.fail(i, sg_str(g) + " in N: conductor member escapes the Oda ideal");

        // radical stability of the Oda rule on elements of R[T] with
        // positive coefficients (no cancellation in powers)
        std::vector<std::vector<long>> rslots(1 + rng.next(2));
        for (auto& slot : rslots) {
            const int terms = 1 + static_cast<int>(rng.next(2));
            for (int t = 0; t < terms; ++t)
                slot.push_back(random_member(rng, g, ext.bound()));
        }
        AuxPoly<Rat> base = aux_from_exponents(rslots, true, rng);
        AuxPoly<Rat> power = aux_mul(base, base);
        if (rng.next(2))
            power = aux_mul(power, base);
        NagataElement be = nagata_element(ext, base, aux_one());
        NagataElement pe = nagata_element(ext, power, aux_one());
        if (nagata_oda_member(ext, be) != nagata_oda_member(ext, pe))
            s.fail(i, sg_str(g) + " in N: Oda membership is not radical-stable");
    }

    // bounded falsification of the converse, on elements with a
    // coefficient outside the conductor
    const long falsify_cases = std::max<long>(n / 10, n > 0 ? 1 : 0);
    for (long i = 0; i < falsify_cases; ++i) {
        const auto [a, b] = pairs[rng.next(pairs.size())];
        NumericalSemigroup g = NumericalSemigroup::make({a, b});
        SemigroupExtension ext =
            SemigroupExtension::make(g, NumericalSemigroup::naturals());
        const ExponentIdeal cond = sg_conductor(ext);
        long bad = -1;
        for (long e = 0; e <= ext.bound(); ++e)
            if (g.contains(e) && !cond.contains(g, e)) {
                bad = e;
                break;
            }
        if (bad < 0)
            continue;   // conductor equals the whole semigroup ideal lattice
        std::vector<std::vector<long>> slots(1 + rng.next(2));
        slots[rng.next(slots.size())].push_back(bad);
        AuxPoly<Rat> p = aux_from_exponents(slots, true, rng);
        if (nagata_conductor_member(ext, nagata_element(ext, p, aux_one())))
            continue;   // random extras landed everything in C after all
        if (!nagata_conductor_falsify(ext, p))
            s.fail(i, sg_str(g) + " in N: no witness falsifies a non-member "
                          "of the conductor");
    }

    // the <2,5> discriminator: x^2 T is an Oda member but not a
    // conductor member, and the failure is witnessed
    if (n > 0) {
        NumericalSemigroup g25 = NumericalSemigroup::make({2, 5});
        SemigroupExtension ext =
            SemigroupExtension::make(g25, NumericalSemigroup::naturals());
        AuxPoly<Rat> x2t = AuxPoly<Rat>::make(
            xring(), {Polynomial<Rat>(xring()),
                      Polynomial<Rat>::monomial(xring(), Exps{2}, Rat(1))});
        NagataElement elem = nagata_element(ext, x2t, aux_one());
        if (!nagata_oda_member(ext, elem))
            s.fail(n, "<2,5>: x^2 T should be an Oda member");
        if (nagata_conductor_member(ext, elem))
            s.fail(n, "<2,5>: x^2 T should not be a conductor member");
        if (!nagata_conductor_falsify(ext, x2t))
            s.fail(n, "<2,5>: falsification search found no witness for x^2 T");
    }
    return s.finish(n);
}

// ===== Groebner oracle suite =====

// All monomials of total degree ≤ cap in nvars variables (embedded in
// the ambient 3-variable ring), ascending by (degree, exponents).
std::vector<Exps> monomials_to_degree(size_t nvars, uint32_t cap)
{
    std::vector<Exps> out;
    Exps e(qring3()->nvars(), 0);
    for (;;) {
        if (total_degree(e) <= cap)
            out.push_back(e);
        size_t i = 0;
        for (; i < nvars; ++i) {
            if (++e[i] <= cap)
                break;
            e[i] = 0;
        }
        if (i == nvars)
            break;
    }
    std::sort(out.begin(), out.end(), [](const Exps& a, const Exps& b) {
        if (total_degree(a) != total_degree(b))
            return total_degree(a) < total_degree(b);
        return a < b;
    });
    return out;
}

Polynomial<Rat> random_homogeneous(Rng& rng, size_t nvars, uint32_t deg)
{
    Polynomial<Rat> f(qring3());
    const int terms = 1 + static_cast<int>(rng.next(3));
    for (int t = 0; t < terms; ++t) {
        Exps e(qring3()->nvars(), 0);
        uint32_t left = deg;
        for (size_t i = 0; i + 1 < nvars; ++i) {
            e[i] = static_cast<uint32_t>(rng.next(left + 1));
            left -= e[i];
        }
        e[nvars - 1] = left;
        f = f + Polynomial<Rat>::monomial(qring3(), e, random_coeff(rng));
    }
    return f;
}

// Membership in a homogeneous ideal is graded, so the degree-bounded
// linear span of generator multiples decides membership of every query
// up to the cap exactly; this gives a Groebner-free oracle.
SuiteResult suite_groebner_oracle(uint64_t seed, long count)
{
    Suite s("groebner-oracle");
    const long n = corpus_size(count, 50);
    Rng rng(seed ^ 0x6f72636cu);
    const uint32_t cap = 6;
    for (long i = 0; i < n; ++i) {
        const size_t nvars = 2 + rng.next(2);
        std::vector<Polynomial<Rat>> gens;
        const size_t ngens = 1 + rng.next(3);
        for (size_t k = 0; k < ngens; ++k)
            gens.push_back(random_homogeneous(
                rng, nvars, static_cast<uint32_t>(1 + rng.next(3))));
        Ideal<Rat> ideal(qring3(), gens);

        const std::vector<Exps> monos = monomials_to_degree(nvars, cap);
        std::map<Exps, size_t> index;
        for (size_t k = 0; k < monos.size(); ++k)
            index[monos[k]] = k;

        auto to_vector = [&](const Polynomial<Rat>& f) {
            std::vector<Rat> v(monos.size(), Rat(0));
            for (const auto& t : f.terms())
                v[index.at(t.mono)] = t.coeff;
            return v;
        };

        RatMatrix span;
        for (const auto& g : gens)
            for (const auto& m : monos)
                if (total_degree(m) + g.degree() <= cap)
                    span.push_back(to_vector(mul_term(g, m, Rat(1))));
        const std::vector<size_t> pivots = rat_rref(span);

        auto in_span = [&](std::vector<Rat> v) {
            for (size_t r = 0; r < pivots.size(); ++r) {
                const Rat c = v[pivots[r]];
                if (c == 0)
                    continue;
                for (size_t j = 0; j < v.size(); ++j)
                    v[j] -= c * span[r][j];
            }
            for (const Rat& c : v)
                if (c != 0)
                    return false;
            return true;
        };

        for (const auto& q : monos) {
            const Polynomial<Rat> query =
                Polynomial<Rat>::monomial(qring3(), q, Rat(1));
            const bool via_groebner = ideal.contains(query);
            const bool via_linear = in_span(to_vector(query));
            if (via_groebner != via_linear) {
                std::string gens_str;
                for (const auto& g : gens)
                    gens_str += (gens_str.empty() ? "" : ", ") + to_string(g);
                s.fail(i, "ideal (" + gens_str + "), query " + to_string(query) +
                              ": groebner " + (via_groebner ? "yes" : "no") +
                              ", linear oracle " + (via_linear ? "yes" : "no"));
                break;
            }
        }
    }
    return s.finish(n);
}

using SuiteFn = SuiteResult (*)(uint64_t, long);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table()
{
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"ass", suite_ass},
        {"cars", suite_cars},
        {"con1", suite_con1},
        {"con2", suite_con2},
        {"groebner-oracle", suite_groebner_oracle},
        {"idealization", suite_idealization},
        {"nagata", suite_nagata},
        {"pro", suite_pro},
        {"proco4", suite_proco4},
        {"sg", suite_sg},
        {"zloc", suite_zloc},
        {"zspec", suite_zspec},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suite_table())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& filter,
                                    uint64_t seed, long count)
{
    std::vector<std::string> wanted = filter;
    if (wanted.empty() ||
        std::find(wanted.begin(), wanted.end(), "all") != wanted.end())
        wanted = suite_names();

    std::vector<SuiteResult> results;
    for (const std::string& name : wanted) {
        SuiteFn fn = nullptr;
        for (const auto& [sname, sfn] : suite_table())
            if (sname == name)
                fn = sfn;
        if (!fn)
            throw lookup_error("unknown suite '" + name + "'");
        results.push_back(fn(seed, count));
    }
    return results;
}

} // namespace supclose
