#ifndef SUPCLOSE_SEMIGROUP_HH
#define SUPCLOSE_SEMIGROUP_HH

#include <vector>
#include <cstdint>

// Numerical semigroups Γ ⊆ ℕ (cofinite additive submonoids, gcd of
// generators 1), extensions k[Γ] ⊆ k[Γ'] of the associated semigroup
// rings, and the ideal bookkeeping needed for conductors, denominator
// ideals and Oda ideals of such extensions.
//
// Every ideal of k[Γ] that arises here (conductors, denominators and
// their radicals/intersections) is generated by monomials x^e, so it is
// faithfully represented by its exponent set E ⊆ Γ, a Γ-ideal
// (E + Γ ⊆ E).  Such a set contains every member of Γ greater than
// min(E) + F(Γ), hence has a finite canonical minimal generating set
// contained in [min(E), min(E) + F(Γ)].

namespace supclose {

class NumericalSemigroup {
public:
    // Builds ⟨gens⟩.  Requires every generator positive and
    // gcd(gens) = 1 (otherwise the monoid is not cofinite in ℕ);
    // violations raise unsupported_domain.
    static NumericalSemigroup make(std::vector<long> gens);

    // ℕ = ⟨1⟩.
    static NumericalSemigroup naturals();

    bool contains(long n) const;

    // Largest integer not in Γ; -1 when Γ = ℕ.
    long frobenius() const { return frobenius_; }

    // Non-members of Γ, ascending.  Empty iff Γ = ℕ.
    const std::vector<long>& gaps() const { return gaps_; }

    // Generators as supplied (sorted, deduplicated).
    const std::vector<long>& generators() const { return gens_; }

    // Elements of Γ \ {0} that are not sums of two smaller nonzero
    // elements; the unique minimal generating set.
    const std::vector<long>& minimal_generators() const { return min_gens_; }

    // Smallest nonzero element.
    long multiplicity() const { return min_gens_.front(); }

    long max_generator() const { return gens_.back(); }

    // Two semigroups are equal iff they have the same elements, i.e.
    // the same gap sets.
    bool operator==(const NumericalSemigroup& o) const { return gaps_ == o.gaps_; }
    bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }

private:
    NumericalSemigroup() = default;

    std::vector<long> gens_;
    std::vector<long> min_gens_;
    std::vector<bool> member_;   // membership table on [0, frobenius + max generator]
    long frobenius_ = -1;
    std::vector<long> gaps_;
};

// Monomial ideal of k[Γ] recorded by the minimal generators of its
// exponent set.  An empty generator list is the zero ideal; {0} is the
// unit ideal.
class ExponentIdeal {
public:
    ExponentIdeal() = default;   // zero ideal

    // Minimalizes `members` (every element must lie in Γ).  The list
    // must contain all ideal members below any omitted ones, i.e. be
    // downward complete; the sg_* constructors below guarantee that.
    static ExponentIdeal from_members(const NumericalSemigroup& g,
                                      std::vector<long> members);

    static ExponentIdeal unit_ideal(const NumericalSemigroup& g);

    // m_Γ = (x^a : a a minimal generator of Γ), the maximal monomial ideal.
    static ExponentIdeal maximal_ideal(const NumericalSemigroup& g);

    const std::vector<long>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return !gens_.empty() && gens_.front() == 0; }

    // e ∈ ∪ (s + Γ)?
    bool contains(const NumericalSemigroup& g, long e) const;

    // Generator lists are canonical, so equality is list equality.
    bool operator==(const ExponentIdeal& o) const { return gens_ == o.gens_; }
    bool operator!=(const ExponentIdeal& o) const { return !(*this == o); }

private:
    std::vector<long> gens_;     // minimal generators, ascending
};

// A verified pair Γ ⊆ Γ', giving the ring extension k[Γ] ⊆ k[Γ'].
class SemigroupExtension {
public:
    // Checks Γ ⊆ Γ' elementwise; raises unsupported_domain otherwise.
    static SemigroupExtension make(NumericalSemigroup small, NumericalSemigroup large);

    const NumericalSemigroup& small() const { return small_; }
    const NumericalSemigroup& large() const { return large_; }

    bool is_proper() const { return small_ != large_; }

    // Γ' \ Γ, ascending.  Every element is ≤ F(Γ), so the set is finite
    // and empty iff the extension is trivial.
    const std::vector<long>& new_elements() const { return new_elements_; }

    // Truncation bound for membership tables: every ideal handled here
    // contains all members of Γ exceeding F(Γ) + multiplicity, so its
    // minimal generators lie below this bound.
    long bound() const { return bound_; }

private:
    SemigroupExtension(NumericalSemigroup small, NumericalSemigroup large)
        : small_(std::move(small)), large_(std::move(large)) {}

    NumericalSemigroup small_;
    NumericalSemigroup large_;
    std::vector<long> new_elements_;
    long bound_ = 0;
};

// Conductor C(Γ,Γ') = (k[Γ] : k[Γ']), with exponent set
// {g ∈ Γ : g + Γ' ⊆ Γ}.  Unit iff the extension is trivial.
ExponentIdeal sg_conductor(const SemigroupExtension& ext);

// Denominator ideal d(n) = (k[Γ] : x^n) for x^n ∈ k[Γ'], with exponent
// set {g ∈ Γ : g + n ∈ Γ}.  Requires n ∈ Γ'; unit iff n ∈ Γ.
ExponentIdeal sg_denominator_ideal(const SemigroupExtension& ext, long n);

// Radical membership by the multiple test: x^e ∈ √I iff k·e lies in the
// exponent set of I for some k ≥ 1 (k is searched up to an exactness
// bound, past which membership is forced or impossible).
bool exp_radical_member(const NumericalSemigroup& g, const ExponentIdeal& ideal, long e);

ExponentIdeal exp_radical(const NumericalSemigroup& g, const ExponentIdeal& ideal, long bound);

ExponentIdeal exp_intersect(const NumericalSemigroup& g, const ExponentIdeal& a,
                            const ExponentIdeal& b, long bound);

// Oda ideal O(R, S) of k[Γ] ⊆ k[Γ'] from its defining formula
// ∩ √(R : x) over the module generators x^n, n ∈ Γ' \ Γ, of S/R.
// Unit ideal for a trivial extension (S/R = 0).
ExponentIdeal sg_oda(const SemigroupExtension& ext);

struct SgAnalysis {
    ExponentIdeal maximal_ideal;               // m_Γ
    ExponentIdeal conductor;                   // C(Γ,Γ')
    ExponentIdeal oda;                         // ∩ √d(n), n ∈ Γ'\Γ
    bool oda_is_maximal = false;               // oda == m_Γ
    bool conductor_radical_is_maximal = false; // √C == m_Γ
    bool crucial_exists = false;               // Supp(S/R) = {m_Γ}
    ExponentIdeal crucial;
    bool critical_exists = false;              // √(0 : x) constant over x ≠ 0
    ExponentIdeal critical;
    std::vector<long> certified;               // n ∈ Γ'\Γ with √d(n) = m_Γ
    bool certificates_complete = false;
};

// Full analysis of a proper extension (trivial extensions raise
// unsupported_domain: S/R = 0 carries no crucial or critical ideal and
// O = R).  The crucial ideal comes from Supp(S/R) = V(C) being the
// singleton {m_Γ}, certified by √C = m_Γ; the critical ideal from the
// per-generator certificates √d(n) = m_Γ, which pin √(0 : x) = m_Γ for
// every x ≠ 0 because (0 : x) contains ∩ d(n) over the support of x and
// m_Γ is maximal.
SgAnalysis sg_analyze(const SemigroupExtension& ext);

// Membership agreement, on [0, bound], between O_R(R,T) computed
// directly and O_R(R,S) ∩ (O_S(S,T) ∩ R) computed through the
// intermediate ring, for a tower Γ0 ⊆ Γ1 ⊆ Γ2.  The two sides use
// disjoint generator data (Γ2\Γ0 versus Γ1\Γ0 and Γ2\Γ1), so agreement
// is evidence for the tower identity rather than a tautology.
bool sg_tower_check(const NumericalSemigroup& g0, const NumericalSemigroup& g1,
                    const NumericalSemigroup& g2);

} // namespace supclose

#endif
