/**
 * @file test_semigroup.cc
 * @brief Numerical semigroups and their ring extensions k[Γ] ⊆ k[Γ′]:
 *        membership tables, conductors, denominator ideals, the full
 *        extension analysis, and tower compatibility. Expected exponent
 *        sets are hand-derived and frozen.
 */
#include <vector>

#include "doctest.h"
#include "supclose/parse.hh"
#include "supclose/semigroup.hh"
#include "test_support.hh"

using namespace supclose;

namespace {

SemigroupExtension into_naturals(std::vector<long> gens) {
  return SemigroupExtension::make(NumericalSemigroup::make(std::move(gens)),
                                  NumericalSemigroup::naturals());
}

}  // namespace

TEST_CASE("semigroup construction and membership") {
  auto g23 = NumericalSemigroup::make({2, 3});
  CHECK(g23.gaps() == std::vector<long>{1});
  CHECK(g23.frobenius() == 1);
  CHECK(g23.contains(0));
  CHECK_FALSE(g23.contains(1));
  CHECK(g23.contains(2));
  CHECK(g23.contains(97));
  CHECK_FALSE(g23.contains(-1));

  auto n = NumericalSemigroup::make({1});
  CHECK(n.gaps().empty());
  CHECK(n.frobenius() == -1);
  CHECK(n == NumericalSemigroup::naturals());
  CHECK(n.multiplicity() == 1);

  auto g345 = NumericalSemigroup::make({3, 4, 5});
  CHECK(g345.gaps() == std::vector<long>{1, 2});
  CHECK(g345.frobenius() == 2);

  // ⟨2,5⟩: gaps are 1 and 3
  auto g25 = NumericalSemigroup::make({2, 5});
  CHECK(g25.gaps() == std::vector<long>{1, 3});
  CHECK(g25.frobenius() == 3);
  CHECK(g25.multiplicity() == 2);

  CHECK_THROWS_AS(NumericalSemigroup::make({4, 6}), unsupported_domain);
  CHECK_THROWS_AS(NumericalSemigroup::make({2, 4}), unsupported_domain);
  CHECK_THROWS_AS(NumericalSemigroup::make({}), unsupported_domain);
  CHECK_THROWS_AS(NumericalSemigroup::make({0, 3}), unsupported_domain);
}

TEST_CASE("minimal generators") {
  CHECK(NumericalSemigroup::make({2, 3}).minimal_generators() ==
        std::vector<long>{2, 3});
  // 4 = 2 + 2 is redundant
  CHECK(NumericalSemigroup::make({2, 3, 4}).minimal_generators() ==
        std::vector<long>{2, 3});
  // no element of {4,5,6,7} is a sum of two members
  CHECK(NumericalSemigroup::make({4, 5, 6, 7}).minimal_generators() ==
        std::vector<long>{4, 5, 6, 7});
  CHECK(NumericalSemigroup::naturals().minimal_generators() ==
        std::vector<long>{1});
}

TEST_CASE("exponent ideals") {
  auto g = NumericalSemigroup::make({2, 3});
  auto unit = ExponentIdeal::unit_ideal(g);
  CHECK(unit.is_unit());
  CHECK(unit.contains(g, 0));
  CHECK(unit.contains(g, 2));
  CHECK_FALSE(unit.contains(g, 1));  // 1 is not even in Γ

  auto m = ExponentIdeal::maximal_ideal(g);
  CHECK(m.generators() == std::vector<long>{2, 3});
  CHECK_FALSE(m.contains(g, 0));
  CHECK(m.contains(g, 5));

  // minimalization drops 5 = 2 + 3 and 4 = 2 + 2
  auto ideal = ExponentIdeal::from_members(g, {2, 3, 4, 5, 6, 7});
  CHECK(ideal.generators() == std::vector<long>{2, 3});

  auto zero = ExponentIdeal();
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.contains(g, 2));
}

TEST_CASE("extension construction") {
  auto ext = into_naturals({2, 3});
  CHECK(ext.is_proper());
  CHECK(ext.new_elements() == std::vector<long>{1});

  auto ext25 = into_naturals({2, 5});
  CHECK(ext25.new_elements() == std::vector<long>{1, 3});

  auto g23 = NumericalSemigroup::make({2, 3});
  auto trivial = SemigroupExtension::make(g23, g23);
  CHECK_FALSE(trivial.is_proper());
  CHECK(trivial.new_elements().empty());

  // ⟨2,3⟩ does not contain ⟨3,4,5⟩... but the reverse inclusion fails:
  CHECK_THROWS_AS(SemigroupExtension::make(g23, NumericalSemigroup::make({3, 4, 5})),
                  unsupported_domain);
}

TEST_CASE("conductors") {
  // ⟨2,3⟩ ⊆ ℕ: C = {g ∈ Γ : g > F = 1}, generated by 2 and 3
  CHECK(sg_conductor(into_naturals({2, 3})).generators() ==
        std::vector<long>{2, 3});
  // ⟨2,5⟩ ⊆ ℕ: F = 3, so C = {4, 5, 6, ...}
  auto c25 = sg_conductor(into_naturals({2, 5}));
  CHECK(c25.generators() == std::vector<long>{4, 5});
  auto g25 = NumericalSemigroup::make({2, 5});
  CHECK(c25.contains(g25, 4));
  CHECK(c25.contains(g25, 7));
  CHECK_FALSE(c25.contains(g25, 2));
  CHECK_FALSE(c25.contains(g25, 0));
  // trivial extension: the conductor is the unit ideal
  auto g23 = NumericalSemigroup::make({2, 3});
  CHECK(sg_conductor(SemigroupExtension::make(g23, g23)).is_unit());
}

TEST_CASE("conductor generators can exceed the large max-generator bound") {
  // ⟨5,7⟩ ⊆ ℕ: F = 23 and C = {24,...}, whose minimal generators run up to
  // 28 = 23 + 5. A truncation bound built only from the generators of the
  // big semigroup (here max 1) would cut them off; the bound must add the
  // small semigroup's generators as well. This pins that choice.
  auto ext = into_naturals({5, 7});
  CHECK(NumericalSemigroup::make({5, 7}).frobenius() == 23);
  CHECK(ext.bound() >= 28);
  CHECK(sg_conductor(ext).generators() ==
        std::vector<long>{24, 25, 26, 27, 28});
}

TEST_CASE("denominator ideals") {
  auto ext23 = into_naturals({2, 3});
  auto g23 = NumericalSemigroup::make({2, 3});
  // d(1) = {g ∈ Γ : g + 1 ∈ Γ} = {2, 3, 4, ...}
  auto d1 = sg_denominator_ideal(ext23, 1);
  CHECK(d1.generators() == std::vector<long>{2, 3});
  CHECK(d1.contains(g23, 6));
  CHECK_FALSE(d1.contains(g23, 0));
  // n ∈ Γ: the whole ring
  CHECK(sg_denominator_ideal(ext23, 2).is_unit());
  CHECK(sg_denominator_ideal(ext23, 0).is_unit());
  // n outside Γ′ is rejected
  CHECK_THROWS_AS(sg_denominator_ideal(ext23, -1), unsupported_domain);

  // ⟨2,5⟩ ⊆ ℕ, n = 1: 2+1 = 3 ∉ Γ, so d(1) = {4, 5, 6, ...}
  auto ext25 = into_naturals({2, 5});
  auto g25 = NumericalSemigroup::make({2, 5});
  auto d125 = sg_denominator_ideal(ext25, 1);
  CHECK(d125.generators() == std::vector<long>{4, 5});
  CHECK_FALSE(d125.contains(g25, 2));
  // and d(3): 2+3 = 5 ∈ Γ, so 2 is already inside
  auto d325 = sg_denominator_ideal(ext25, 3);
  CHECK(d325.contains(g25, 2));
  CHECK_FALSE(d325.contains(g25, 0));
}

TEST_CASE("radical and intersection of exponent ideals") {
  auto ext25 = into_naturals({2, 5});
  auto g25 = NumericalSemigroup::make({2, 5});
  auto c = sg_conductor(ext25);  // {4, 5, ...}
  // 2·2 = 4 ∈ C, and every positive member has a multiple past F
  CHECK(exp_radical_member(g25, c, 2));
  CHECK(exp_radical_member(g25, c, 5));
  CHECK_FALSE(exp_radical_member(g25, c, 0));
  CHECK(exp_radical(g25, c, ext25.bound()) == ExponentIdeal::maximal_ideal(g25));

  // the maximal ideal intersected with the conductor is the conductor
  auto m = ExponentIdeal::maximal_ideal(g25);
  const long b = ext25.bound();
  CHECK(exp_intersect(g25, m, c, b) == c);
  CHECK(exp_intersect(g25, ExponentIdeal::unit_ideal(g25), c, b) == c);
  CHECK(exp_intersect(g25, ExponentIdeal(), c, b).is_zero());
}

TEST_CASE("extension analysis certificates") {
  // ⟨2,3⟩ ⊆ ℕ: every answer is the maximal ideal {2,3,...}
  auto a23 = sg_analyze(into_naturals({2, 3}));
  CHECK(a23.maximal_ideal.generators() == std::vector<long>{2, 3});
  CHECK(a23.oda == a23.maximal_ideal);
  CHECK(a23.oda_is_maximal);
  CHECK(a23.conductor_radical_is_maximal);
  CHECK(a23.crucial_exists);
  CHECK(a23.crucial == a23.maximal_ideal);
  CHECK(a23.critical_exists);
  CHECK(a23.critical == a23.maximal_ideal);
  CHECK(a23.certified == std::vector<long>{1});
  CHECK(a23.certificates_complete);

  // ⟨2,5⟩ ⊆ ℕ: the conductor {4,5,...} is strictly below m = {2,4,5,...}
  auto a25 = sg_analyze(into_naturals({2, 5}));
  CHECK(a25.oda == a25.maximal_ideal);
  CHECK(a25.conductor.generators() == std::vector<long>{4, 5});
  CHECK_FALSE(a25.conductor == a25.maximal_ideal);
  CHECK(a25.conductor_radical_is_maximal);
  CHECK(a25.certified == std::vector<long>{1, 3});
  CHECK(a25.certificates_complete);

  // trivial extension: no crucial or critical ideal, O = R
  auto g = NumericalSemigroup::make({2, 3});
  CHECK_THROWS_AS(sg_analyze(SemigroupExtension::make(g, g)), unsupported_domain);
  CHECK(sg_oda(SemigroupExtension::make(g, g)).is_unit());
}

TEST_CASE("towers") {
  auto g4567 = NumericalSemigroup::make({4, 5, 6, 7});
  auto g345 = NumericalSemigroup::make({3, 4, 5});
  auto g23 = NumericalSemigroup::make({2, 3});
  auto n = NumericalSemigroup::naturals();
  CHECK(sg_tower_check(g4567, g23, n));
  CHECK(sg_tower_check(g345, g23, n));
  CHECK(sg_tower_check(g23, g23, g23));
  CHECK(sg_tower_check(g23, n, n));
  CHECK(sg_tower_check(g23, g23, n));
}

TEST_CASE("monomial data decides membership in denominator ideals") {
  // Documented lemma behind the exponent-set representation: multiplying a
  // univariate polynomial by a monomial x^n shifts exponents injectively, so
  // f·x^n lies in k[Γ] exactly when every exponent e of f has e + n ∈ Γ,
  // i.e. when every exponent lies in the exponent set d(n). Randomized
  // sanity check with real polynomial arithmetic.
  auto R = testsup::qring({"x"});
  auto ext = into_naturals({2, 5});
  auto g = ext.small();
  testsup::Rng rng(131);
  for (int i = 0; i < 50; ++i) {
    const long n = ext.new_elements()[rng.next(ext.new_elements().size())];
    auto d = sg_denominator_ideal(ext, n);
    // random f supported on Γ up to the bound
    Polynomial<Rat> f(R);
    std::vector<long> exps;
    for (int t = 0; t < 3; ++t) {
      long e = static_cast<long>(rng.next(static_cast<std::uint64_t>(ext.bound())));
      if (!g.contains(e)) continue;
      exps.push_back(e);
      f = f + Polynomial<Rat>::monomial(R, Exps{static_cast<std::uint32_t>(e)},
                                        Rat(1 + static_cast<long>(rng.next(3))));
    }
    Polynomial<Rat> shifted =
        mul_term(f, Exps{static_cast<std::uint32_t>(n)}, Rat(1));
    bool product_in_ring = true;
    for (const auto& t : shifted.terms())
      product_in_ring = product_in_ring && g.contains(static_cast<long>(t.mono[0]));
    bool exponents_in_ideal = true;
    for (long e : exps) exponents_in_ideal = exponents_in_ideal && d.contains(g, e);
    CHECK(product_in_ring == exponents_in_ideal);
  }
}
