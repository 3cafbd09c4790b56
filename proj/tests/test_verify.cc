/**
 * @file test_verify.cc
 * @brief The theorem-verification harness itself: suite registry, corpus
 *        scaling, vacuous-run flagging, determinism, and a small smoke run
 *        of every suite.
 */
#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "supclose/errors.hh"
#include "supclose/verify.hh"

using namespace supclose;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  // every identity family advertised by the harness
  const std::vector<std::string> expected = {
      "ass",  "cars",   "con1",   "con2", "groebner-oracle", "idealization",
      "nagata", "pro",  "proco4", "sg",   "zloc",            "zspec"};
  CHECK(names == expected);
  CHECK(std::is_sorted(names.begin(), names.end()));
}

TEST_CASE("small smoke run of every suite passes") {
  const auto results = run_suites({"all"}, 2026, 5);
  REQUIRE(results.size() == suite_names().size());
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.ok());
    CHECK(r.cases > 0);
    CHECK_FALSE(r.vacuous);
  }
  // results come back in registry order regardless of completion order
  for (size_t i = 0; i < results.size(); ++i)
    CHECK(results[i].name == suite_names()[i]);
}

TEST_CASE("filters") {
  const auto one = run_suites({"cars"}, 7, 10);
  REQUIRE(one.size() == 1);
  CHECK(one[0].name == "cars");
  CHECK(one[0].cases == 10);
  CHECK(one[0].ok());

  const auto two = run_suites({"zloc", "cars"}, 7, 10);
  REQUIRE(two.size() == 2);

  // an empty filter means everything, same as "all"
  CHECK(run_suites({}, 7, 2).size() == suite_names().size());

  CHECK_THROWS_AS(run_suites({"no-such-suite"}, 7, 2), lookup_error);
  CHECK_THROWS_AS(run_suites({"cars", "bogus"}, 7, 2), lookup_error);
}

TEST_CASE("vacuous runs are flagged but pass") {
  const auto results = run_suites({"all"}, 2026, 0);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CHECK(r.ok());
    CHECK(r.vacuous);
    CHECK(r.cases == 0);
  }
}

TEST_CASE("determinism under a fixed seed") {
  const auto a = run_suites({"cars", "zloc", "nagata"}, 99, 8);
  const auto b = run_suites({"cars", "zloc", "nagata"}, 99, 8);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].cases == b[i].cases);
    CHECK(a[i].failures == b[i].failures);
  }
}
