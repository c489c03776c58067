#include "doctest.h"
#include "ellgen/errors.hpp"
#include "ellgen/jacobi_forms.hpp"
#include "ellgen/lifts.hpp"
#include "test_support.hpp"

using namespace ellgen;
using ellgen::testing::Rng;

namespace {

SeriesProvider phi_provider() {
  return [](int q) { return phi_m21(q); };
}

}  // namespace

TEST_CASE("lift of zero is one; constant slice is always one") {
  const auto zero = [](int q) { return QSeries(q); };
  CHECK(lift(zero, {0, 0, false, 4, 3}).is_one());
  CHECK(lift(zero, {2, 0, true, 4, 3}).is_one());
  const PSeries l = lift(phi_provider(), {2, 0, true, 3, 2});
  CHECK(l.coeff(0).is_one());
}

TEST_CASE("p^1 slice of a plain lift is minus the input") {
  Rng rng(41);
  const QSeries f = rng.qseries_integral(6);
  const PSeries l = lift(fixed_provider(f), {0, 0, false, 2, 3});
  CHECK(l.extract(1) == -f.truncated(3));

  // Reciprocal of the lift of Ell(K3) recovers Ell(K3) = 2 phi_01 at p^1.
  const auto ell_k3 = [](int q) { return ell_surface(0, 2, q); };
  const PSeries inv = lift(ell_k3, {0, 0, false, 2, 3}).reciprocal();
  CHECK(inv.extract(1) == phi_01(3).scaled(Rational(2)));
  CHECK(inv.extract(1) == ell_surface(0, 2, 3));
}

TEST_CASE("lift weight (2,0) of -phi_m21 at q=0 is the explicit product") {
  const int np = 6;
  const PSeries l = lift(phi_provider(), {2, 0, true, np, 0});
  PSeries expected = PSeries::one(np, 0);
  for (int n = 1; n <= np; ++n) {
    const Rational n2(n * n);
    expected *= binomial_factor_p(np, 0, n, 0, Rational(2) * n2);
    expected *= binomial_factor_p(np, 0, n, 2, -n2);
    expected *= binomial_factor_p(np, 0, n, -2, -n2);
  }
  CHECK(l == expected);
}

TEST_CASE("lift weight (1,1) of -phi_m21 at q=0 is the asymmetric product") {
  // prod_n ((1-p^n/y)/(1-p^n y))^n.
  const int np = 6;
  const PSeries l = lift(phi_provider(), {1, 1, true, np, 0});
  PSeries expected = PSeries::one(np, 0);
  for (int n = 1; n <= np; ++n) {
    expected *= binomial_factor_p(np, 0, n, -2, Rational(n));
    expected *= binomial_factor_p(np, 0, n, 2, Rational(-n));
  }
  CHECK(l == expected);
}

TEST_CASE("lift of the constant 1 is the eta product") {
  const auto one = [](int q) { return QSeries::one(q); };
  const PSeries l = lift(one, {0, 0, false, 8, 0});
  const PSeries eta = eta_bar_p(8);
  CHECK(l == eta);
}

TEST_CASE("lift of 2 phi_01 at q=0 is delta_tilde") {
  const auto two_phi = [](int q) { return phi_01(q).scaled(Rational(2)); };
  const PSeries l = lift(two_phi, {0, 0, false, 6, 0});
  CHECK(l == delta_tilde(6));
}

TEST_CASE("lifts are multiplicative in the input") {
  Rng rng(43);
  for (const auto& [a, b] : {std::pair{0, 0}, {1, 1}, {2, 0}}) {
    const QSeries f = rng.qseries_integral(6), g = rng.qseries_integral(6);
    const LiftSpec spec{a, b, false, 3, 2};
    CHECK(lift(fixed_provider(f + g), spec) ==
          lift(fixed_provider(f), spec) * lift(fixed_provider(g), spec));
    const LiftSpec neg{a, b, true, 3, 2};
    CHECK(lift(fixed_provider(f), neg) ==
          lift(fixed_provider(f), spec).reciprocal());
  }
}

TEST_CASE("q=0 commutes with lifting") {
  const LiftSpec spec{1, 1, true, 4, 3};
  const PSeries full = lift(phi_provider(), spec);
  const auto q0_provider = [](int) { return phi_m21(0); };
  const PSeries at_q0 = lift(q0_provider, {1, 1, true, 4, 0});
  CHECK(full.truncated_q(0) == at_q0);
}

TEST_CASE("lifts of integral integer series have integer coefficients") {
  for (const auto& spec : {LiftSpec{0, 0, true, 4, 3}, LiftSpec{2, 0, true, 4, 3},
                           LiftSpec{1, 1, true, 4, 3}}) {
    const PSeries l = lift(phi_provider(), spec);
    CHECK(l.integral_in_y());
    for (int p = 0; p <= 4; ++p)
      for (int m = 0; m <= 3; ++m)
        for (const auto& [e, c] : l.coeff(p).coeff(m).terms())
          CHECK(c.is_integer());
  }
}

TEST_CASE("log z-derivative of the lift") {
  const auto zero = [](int q) { return QSeries(q); };
  CHECK(lift_log_z_derivative(zero, {2, 0, false, 5, 2}).is_zero());

  // At q=0 the (2,0)-lift of phi_m21 has
  // z dlog = -sum_n sum_{d|n} (n/d)^3 (y^d - 2 + y^{-d}) z^n.
  const PSeries zd = lift_log_z_derivative(phi_provider(), {2, 0, false, 5, 0});
  PSeries expected(5, 0);
  for (int n = 1; n <= 5; ++n)
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const long ratio = (n / d);
      const Rational c(-ratio * ratio * ratio);
      expected.at(n).at(0).add_u(2 * d, c);
      expected.at(n).at(0).add_u(0, Rational(-2) * c);
      expected.at(n).at(0).add_u(-2 * d, c);
    }
  CHECK(zd == expected);

  // Exactly the two-step computation.
  const LiftSpec spec{2, 0, false, 4, 2};
  CHECK(lift_log_z_derivative(phi_provider(), spec) ==
        lift(phi_provider(), spec).z_log_derivative());
}

TEST_CASE("input order requirements") {
  const QSeries short_phi = phi_m21(5);
  CHECK_THROWS_AS(lift(fixed_provider(short_phi), {0, 0, false, 4, 3}), SeriesError);
  try {
    lift(fixed_provider(short_phi), {0, 0, false, 4, 3});
    CHECK(false);
  } catch (const SeriesError& e) {
    CHECK(e.code() == errc::insufficient_input_order);
  }
  // Exactly enough order succeeds.
  CHECK(lift(fixed_provider(phi_m21(12)), {0, 0, false, 4, 3}).p_order() == 4);

  // Half-integral y-exponents cannot be lifted.
  const auto theta = [](int q) { return theta_hat(q); };
  CHECK_THROWS_AS(lift(theta, {0, 0, false, 2, 1}), SeriesError);
}
