#include "doctest.h"
#include "ellgen/errors.hpp"
#include "ellgen/verify.hpp"

#include <map>
#include <string>

using namespace ellgen;

namespace {

// Small parameter grids keep the unit run quick; the acceptance binary runs
// every check at its full default grid.
const std::map<std::string, CheckParams> kQuickParams = {
    {"dmvv", {{"P", "2"}, {"Q", "1"}}},
    {"q0_reduction", {{"P", "3"}}},
    {"euler_gottsche", {{"P", "4"}}},
    {"egl_binomial", {{"n_max", "3"}}},
    {"lagrange", {{"samples", "4"}, {"max_order", "5"}}},
    {"lift_multiplicative", {{"P", "2"}, {"Q", "1"}, {"samples", "2"}}},
    {"theta_square", {{"Q", "4"}}},
    {"jacobi_support", {{"Q", "5"}}},
    {"k3_pipeline_vs_extraction", {{"P", "2"}, {"Q", "1"}}},
    {"k3_moduli_two_paths", {{"Q", "1"}}},
    {"vd_two_ways", {{"samples", "20"}}},
    {"integrality", {{"P", "2"}, {"Q", "1"}}},
};

}  // namespace

TEST_CASE("every registered check passes on a reduced grid") {
  CHECK(registered_checks().size() == 12);
  for (const auto& name : registered_checks()) {
    const auto it = kQuickParams.find(name);
    REQUIRE(it != kQuickParams.end());
    const CheckReport rep = run_check(name, it->second, 7);
    INFO(name, ": ",
         rep.first_discrepancy ? rep.first_discrepancy->context : "");
    CHECK(rep.pass);
    CHECK(rep.name == name);
    CHECK_FALSE(rep.first_discrepancy.has_value());
  }
}

TEST_CASE("unknown checks are rejected") {
  CHECK_THROWS_AS(run_check("nosuch", {}, 0), SeriesError);
  try {
    run_check("nosuch", {}, 0);
    CHECK(false);
  } catch (const SeriesError& e) {
    CHECK(e.code() == errc::unknown_check);
    CHECK(e.usage_error());
  }
  CHECK_THROWS_AS(run_suite("nosuch", {}, 0), SeriesError);
}

TEST_CASE("a check that throws becomes a failed report") {
  const CheckReport rep = run_check("theta_square", {{"Q", "not-a-number"}}, 0);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.first_discrepancy.has_value());
  CHECK(rep.first_discrepancy->context == "raised during check");
}

TEST_CASE("suite selection") {
  const auto all = run_suite("all", kQuickParams.at("theta_square"), 1);
  CHECK(all.size() == registered_checks().size());
  const auto single = run_suite("theta_square", kQuickParams.at("theta_square"), 1);
  CHECK(single.size() == 1);
  CHECK(single[0].name == "theta_square");
}

TEST_CASE("reports are deterministic given params and seed") {
  const auto params = kQuickParams.at("lagrange");
  const CheckReport a = run_check("lagrange", params, 99);
  const CheckReport b = run_check("lagrange", params, 99);
  CHECK(a.pass == b.pass);
  CHECK(a.params == b.params);
  CHECK(a.first_discrepancy.has_value() == b.first_discrepancy.has_value());
}

TEST_CASE("first_difference reports the lexicographically smallest exponent") {
  PSeries a = PSeries::one(2, 1);
  PSeries b = PSeries::one(2, 1);
  // Differences at (p,q,u) = (2,0,0), (1,1,2), (1,0,-4): the last wins.
  a.at(2).at(0).add_u(0, Rational(5));
  a.at(1).at(1).add_u(2, Rational(1));
  a.at(1).at(0).add_u(-4, Rational(3));
  const auto d = first_difference(a, b);
  REQUIRE(d.has_value());
  CHECK(d->p == 1);
  CHECK(d->q == 0);
  CHECK(d->u == -4);
  CHECK(d->lhs == "3");
  CHECK(d->rhs == "0");
  CHECK_FALSE(first_difference(b, b).has_value());

  QSeries qa(2), qb(2);
  qa.at(1).add_u(1, Rational(1, 2));
  const auto qd = first_difference(qa, qb);
  REQUIRE(qd.has_value());
  CHECK(qd->q == 1);
  CHECK(qd->u == 1);
  CHECK(qd->lhs == "1/2");
}
