#include "supclose/semigroup.hh"
#include "supclose/errors.hh"

#include <algorithm>
#include <numeric>
#include <string>

namespace supclose {

NumericalSemigroup NumericalSemigroup::make(std::vector<long> gens)
{
    if (gens.empty())
        throw unsupported_domain("numerical semigroup needs at least one generator");
    for (long g : gens)
        if (g <= 0)
            throw unsupported_domain("semigroup generators must be positive, got " +
                                     std::to_string(g));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    long d = 0;
    for (long g : gens)
        d = std::gcd(d, g);
    if (d != 1)
        throw unsupported_domain("semigroup generators have gcd " + std::to_string(d) +
                                 "; the semigroup is not cofinite in the naturals");

    // Grow a membership table until it ends in a run of min-generator
    // many consecutive members; everything past such a run is a member,
    // so the largest gap is already inside the table.
    const long m = gens.front();
    std::vector<bool> member;
    long cap = 4 * gens.back() + 4;
    for (;;) {
        member.assign(static_cast<size_t>(cap) + 1, false);
        member[0] = true;
        for (long i = 1; i <= cap; ++i)
            for (long g : gens)
                if (i >= g && member[static_cast<size_t>(i - g)]) {
                    member[static_cast<size_t>(i)] = true;
                    break;
                }
        long run = 0;
        bool done = false;
        for (long i = 0; i <= cap; ++i) {
            run = member[static_cast<size_t>(i)] ? run + 1 : 0;
            if (run == m) {
                done = true;
                break;
            }
        }
        if (done)
            break;
        cap *= 2;
    }

    NumericalSemigroup s;
    s.gens_ = std::move(gens);
    s.frobenius_ = -1;
    for (long i = cap; i >= 1; --i)
        if (!member[static_cast<size_t>(i)]) {
            s.frobenius_ = i;
            break;
        }
    const long table_top = std::max(s.frobenius_ + s.gens_.back(), s.gens_.back());
    member.resize(static_cast<size_t>(table_top) + 1, true);
    s.member_ = std::move(member);
    for (long i = 1; i <= s.frobenius_; ++i)
        if (!s.member_[static_cast<size_t>(i)])
            s.gaps_.push_back(i);

    // g > 0 is a minimal generator iff it is not a sum of two nonzero
    // members; minimal generators never exceed frobenius + multiplicity.
    for (long g = 1; g <= table_top; ++g) {
        if (!s.member_[static_cast<size_t>(g)])
            continue;
        bool decomposable = false;
        for (long i = 1; i < g && !decomposable; ++i)
            decomposable = s.member_[static_cast<size_t>(i)] &&
                           s.member_[static_cast<size_t>(g - i)];
        if (!decomposable)
            s.min_gens_.push_back(g);
    }
    return s;
}

NumericalSemigroup NumericalSemigroup::naturals()
{
    return make({1});
}

bool NumericalSemigroup::contains(long n) const
{
    if (n < 0)
        return false;
    if (n < static_cast<long>(member_.size()))
        return member_[static_cast<size_t>(n)];
    return n > frobenius_;
}

ExponentIdeal ExponentIdeal::from_members(const NumericalSemigroup& g,
                                          std::vector<long> members)
{
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    ExponentIdeal ideal;
    for (long s : members) {
        if (!g.contains(s))
            throw internal_error("exponent ideal member outside the semigroup");
        bool reducible = false;
        for (long t : ideal.gens_)
            if (g.contains(s - t) && s != t) {
                reducible = true;
                break;
            }
        if (!reducible)
            ideal.gens_.push_back(s);
    }
    return ideal;
}

ExponentIdeal ExponentIdeal::unit_ideal(const NumericalSemigroup& g)
{
    return from_members(g, {0});
}

ExponentIdeal ExponentIdeal::maximal_ideal(const NumericalSemigroup& g)
{
    return from_members(g, g.minimal_generators());
}

bool ExponentIdeal::contains(const NumericalSemigroup& g, long e) const
{
    for (long s : gens_)
        if (e >= s && g.contains(e - s))
            return true;
    return false;
}

SemigroupExtension SemigroupExtension::make(NumericalSemigroup small,
                                            NumericalSemigroup large)
{
    const long check_top = std::max(small.frobenius(), large.frobenius()) + 2;
    for (long n = 0; n <= check_top; ++n)
        if (small.contains(n) && !large.contains(n))
            throw unsupported_domain("first semigroup is not contained in the second "
                                     "(element " + std::to_string(n) + ")");

    SemigroupExtension ext(std::move(small), std::move(large));
    for (long n = 0; n <= ext.small_.frobenius(); ++n)
        if (ext.large_.contains(n) && !ext.small_.contains(n))
            ext.new_elements_.push_back(n);
    ext.bound_ = ext.small_.frobenius() +
                 std::max(ext.small_.max_generator(), ext.large_.max_generator()) + 2;
    return ext;
}

namespace {

// Collect {e ∈ [0, bound] : keep(e)} and minimalize.  Every ideal built
// this way contains all members of Γ past F(Γ) + multiplicity, so the
// truncated table determines it.
template <typename Pred>
ExponentIdeal ideal_from_table(const NumericalSemigroup& g, long bound, Pred keep)
{
    std::vector<long> members;
    for (long e = 0; e <= bound; ++e)
        if (g.contains(e) && keep(e))
            members.push_back(e);
    ExponentIdeal ideal = ExponentIdeal::from_members(g, members);
    for (long e = 0; e <= bound; ++e) {
        const bool direct = g.contains(e) && keep(e);
        if (direct != ideal.contains(g, e))
            throw internal_error("exponent ideal truncation bound too small");
    }
    return ideal;
}

} // namespace

ExponentIdeal sg_conductor(const SemigroupExtension& ext)
{
    const NumericalSemigroup& small = ext.small();
    const NumericalSemigroup& large = ext.large();
    // g + Γ' ⊆ Γ only needs testing for γ' ≤ F(Γ): beyond that g + γ'
    // always lands past F(Γ).
    std::vector<long> small_side;
    for (long t = 0; t <= small.frobenius(); ++t)
        if (large.contains(t))
            small_side.push_back(t);
    return ideal_from_table(small, ext.bound(), [&](long e) {
        for (long t : small_side)
            if (!small.contains(e + t))
                return false;
        return true;
    });
}

ExponentIdeal sg_denominator_ideal(const SemigroupExtension& ext, long n)
{
    if (!ext.large().contains(n))
        throw unsupported_domain("exponent " + std::to_string(n) +
                                 " is not in the larger semigroup");
    const NumericalSemigroup& small = ext.small();
    return ideal_from_table(small, ext.bound(),
                            [&](long e) { return small.contains(e + n); });
}

bool exp_radical_member(const NumericalSemigroup& g, const ExponentIdeal& ideal, long e)
{
    if (!g.contains(e))
        return false;
    if (ideal.is_zero())
        return false;
    if (e == 0)
        return ideal.contains(g, 0);
    // k·e grows past min-gen + F(Γ), where membership is forced, so the
    // search below is exhaustive.
    const long exact_bound = ideal.generators().front() + g.frobenius() + 2;
    for (long k = 1; k <= exact_bound; ++k)
        if (ideal.contains(g, k * e))
            return true;
    return false;
}

ExponentIdeal exp_radical(const NumericalSemigroup& g, const ExponentIdeal& ideal,
                          long bound)
{
    if (ideal.is_zero())
        return ExponentIdeal();
    return ideal_from_table(g, bound,
                            [&](long e) { return exp_radical_member(g, ideal, e); });
}

ExponentIdeal exp_intersect(const NumericalSemigroup& g, const ExponentIdeal& a,
                            const ExponentIdeal& b, long bound)
{
    if (a.is_zero() || b.is_zero())
        return ExponentIdeal();
    return ideal_from_table(g, bound, [&](long e) {
        return a.contains(g, e) && b.contains(g, e);
    });
}

ExponentIdeal sg_oda(const SemigroupExtension& ext)
{
    const NumericalSemigroup& small = ext.small();
    ExponentIdeal result = ExponentIdeal::unit_ideal(small);
    for (long n : ext.new_elements()) {
        ExponentIdeal rad = exp_radical(small, sg_denominator_ideal(ext, n), ext.bound());
        result = exp_intersect(small, result, rad, ext.bound());
    }
    return result;
}

SgAnalysis sg_analyze(const SemigroupExtension& ext)
{
    if (!ext.is_proper())
        throw unsupported_domain("trivial extension: S/R = 0 has no crucial or "
                                 "critical ideal and the Oda ideal is the whole ring");

    const NumericalSemigroup& small = ext.small();
    SgAnalysis a;
    a.maximal_ideal = ExponentIdeal::maximal_ideal(small);
    a.conductor = sg_conductor(ext);
    a.oda = sg_oda(ext);
    a.oda_is_maximal = a.oda == a.maximal_ideal;
    a.conductor_radical_is_maximal =
        exp_radical(small, a.conductor, ext.bound()) == a.maximal_ideal;

    for (long n : ext.new_elements())
        if (exp_radical(small, sg_denominator_ideal(ext, n), ext.bound()) ==
            a.maximal_ideal)
            a.certified.push_back(n);
    a.certificates_complete = a.certified.size() == ext.new_elements().size();

    // Supp(S/R) = V(ann S/R) = V(C); √C = m_Γ makes that the singleton
    // {m_Γ} with a maximal member, which is the crucial ideal.
    a.crucial_exists = a.conductor_radical_is_maximal;
    if (a.crucial_exists)
        a.crucial = a.maximal_ideal;
    // (0 : x) ⊇ ∩ d(n) over the monomials of x, so once every √d(n) is
    // the maximal ideal, √(0 : x) = m_Γ for all x ≠ 0.
    a.critical_exists = a.certificates_complete;
    if (a.critical_exists)
        a.critical = a.maximal_ideal;
    return a;
}

bool sg_tower_check(const NumericalSemigroup& g0, const NumericalSemigroup& g1,
                    const NumericalSemigroup& g2)
{
    SemigroupExtension e01 = SemigroupExtension::make(g0, g1);
    SemigroupExtension e12 = SemigroupExtension::make(g1, g2);
    SemigroupExtension e02 = SemigroupExtension::make(g0, g2);

    ExponentIdeal direct = sg_oda(e02);
    ExponentIdeal lower = sg_oda(e01);
    ExponentIdeal upper = sg_oda(e12);

    const long bound = std::max({e01.bound(), e12.bound(), e02.bound()});
    for (long e = 0; e <= bound; ++e) {
        const bool left = direct.contains(g0, e);
        const bool right = g0.contains(e) && lower.contains(g0, e) &&
                           upper.contains(g1, e);
        if (left != right)
            return false;
    }
    return true;
}

} // namespace supclose
