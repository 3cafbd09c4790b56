/**
 * @file test_poly.cc
 * @brief Polynomial core: parsing, canonical printing, exact arithmetic, and
 *        monomial orders. Expected values are hand-expanded and frozen.
 */
#include <string>
#include <vector>

#include "doctest.h"
#include "supclose/parse.hh"
#include "supclose/polynomial.hh"
#include "test_support.hh"

using namespace supclose;
using testsup::qp;
using testsup::qring;

TEST_CASE("parse and print round trip") {
  auto R = qring({"x", "y"});
  // Canonical form sorts terms by decreasing grevlex order.
  CHECK(to_string(qp(R, "3/2*x^2*y - 1")) == "3/2*x^2*y - 1");
  CHECK(to_string(qp(R, "-1 + 3/2*x^2*y")) == "3/2*x^2*y - 1");
  CHECK(to_string(qp(R, "x*y - 1")) == "x*y - 1");
  CHECK(to_string(qp(R, "0")) == "0");
  CHECK(to_string(qp(R, "2/4*x")) == "1/2*x");
  CHECK(to_string(qp(R, "x + x")) == "2*x");
  CHECK(to_string(qp(R, "x - x")) == "0");
  CHECK(to_string(qp(R, "x^0")) == "1");
  CHECK(to_string(qp(R, "x*x")) == "x^2");
  CHECK(to_string(qp(R, "+x")) == "x");

  for (const std::string s : {"x^3 - 3*x*y + 2", "1/7*x^2 - y^2", "x", "-x + y"}) {
    CHECK(to_string(parse_polynomial(R, to_string(qp(R, s)))) == to_string(qp(R, s)));
  }
}

TEST_CASE("parse errors carry positions") {
  auto R = qring({"x", "y"});
  CHECK_THROWS_AS(qp(R, ""), parse_error);
  CHECK_THROWS_AS(qp(R, "x + "), parse_error);
  CHECK_THROWS_AS(qp(R, "3x"), parse_error);       // missing '*'
  CHECK_THROWS_AS(qp(R, "x*3"), parse_error);      // number in factor position
  CHECK_THROWS_AS(qp(R, "1/0"), parse_error);      // zero denominator
  CHECK_THROWS_AS(qp(R, "x y"), parse_error);      // missing operator
  CHECK_THROWS_AS(qp(R, "x ^"), parse_error);
  CHECK_THROWS_AS(qp(R, "x + - y"), parse_error);

  try {
    qp(R, "x*y + z^2");
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position() == 6);
    CHECK(std::string(e.what()).find("unknown variable 'z'") != std::string::npos);
  }
}

TEST_CASE("exact rational arithmetic") {
  auto R = qring({"x", "y"});
  // (x + y)^3 expanded by hand: x^3 + 3x^2y + 3xy^2 + y^3.
  CHECK(pow(qp(R, "x + y"), 3) == qp(R, "x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  // (x - y)(x + y) = x^2 - y^2.
  CHECK(qp(R, "x - y") * qp(R, "x + y") == qp(R, "x^2 - y^2"));
  // (1/2 x + 1/3)(1/2 x - 1/3) = 1/4 x^2 - 1/9.
  CHECK(qp(R, "1/2*x + 1/3") * qp(R, "1/2*x - 1/3") == qp(R, "1/4*x^2 - 1/9"));
  CHECK(qp(R, "x^2 - y^2") - qp(R, "x^2") == qp(R, "-y^2"));
  CHECK((qp(R, "x") - qp(R, "x")).is_zero());
  CHECK(pow(qp(R, "x + 1"), 0) == qp(R, "1"));

  // Exact division: (x^2 - y^2) / (x - y) = x + y.
  CHECK(divide_exact(qp(R, "x^2 - y^2"), qp(R, "x - y")) == qp(R, "x + y"));
  CHECK_THROWS_AS(divide_exact(qp(R, "x^2 + 1"), qp(R, "x - y")), internal_error);
}

TEST_CASE("prime field arithmetic") {
  auto R = make_ring<Fp>({"x"}, MonomialOrder{}, 7);
  auto p = parse_polynomial(R, "3*x + 5");
  auto q = parse_polynomial(R, "5*x + 4");
  // (3x+5)(5x+4) = 15x^2 + 37x + 20 = x^2 + 2x + 6 mod 7.
  CHECK(to_string(p * q) == "x^2 + 2*x + 6");
  // 1/2 = 4 mod 7, so parsing "1/2" gives coefficient 4.
  CHECK(to_string(parse_polynomial(R, "1/2")) == "4");
  CHECK(to_string(parse_polynomial(R, "7*x")) == "0");
  CHECK_THROWS_AS(parse_polynomial(R, "1/7"), parse_error);
  CHECK_THROWS_AS(make_ring<Fp>({"x"}, MonomialOrder{}, 6), unsupported_domain);
}

TEST_CASE("monomial orders") {
  // grevlex: degree first, then smaller exponent on the last differing variable.
  MonomialOrder grevlex{OrderKind::grevlex, 0};
  MonomialOrder lex{OrderKind::lex, 0};
  // x^2 vs xy in two variables: same degree; last differing index decides.
  CHECK(cmp_exps({2, 0}, {1, 1}, grevlex) > 0);
  CHECK(cmp_exps({1, 1}, {0, 2}, grevlex) > 0);
  CHECK(cmp_exps({0, 3}, {2, 0}, grevlex) > 0);  // degree wins
  CHECK(cmp_exps({1, 0}, {0, 3}, lex) > 0);      // lex ignores degree
  // Standard grevlex fact in three variables: x*z < y^2.
  CHECK(cmp_exps({1, 0, 1}, {0, 2, 0}, grevlex) < 0);

  // Elimination block order: anything touching the block beats anything not.
  MonomialOrder elim{OrderKind::elim, 1};
  CHECK(cmp_exps({1, 0, 0}, {0, 5, 5}, elim) > 0);
  CHECK(cmp_exps({0, 2, 1}, {0, 1, 1}, elim) > 0);

  auto R = qring({"x", "y", "z"});
  CHECK(to_string(qp(R, "x*z + y^2")) == "y^2 + x*z");
}

TEST_CASE("ring mismatch is rejected") {
  auto R1 = qring({"x", "y"});
  auto R2 = qring({"x", "z"});
  CHECK_THROWS_AS(qp(R1, "x") + qp(R2, "x"), ring_mismatch);
  auto R1b = qring({"x", "y"});
  CHECK(qp(R1, "x + y") == qp(R1b, "x + y"));  // structural ring equality
}
