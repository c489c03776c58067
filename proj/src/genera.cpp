#include "ellgen/genera.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ellgen/errors.hpp"

namespace ellgen {

namespace {

SeriesProvider phi_m21_provider() {
  return [](int q) { return phi_m21(q); };
}

SeriesProvider two_phi_01_provider() {
  return [](int q) { return phi_01(q).scaled(Rational(2)); };
}

SeriesProvider ell_surface_provider(long k2, long chi_o) {
  return [k2, chi_o](int q) { return ell_surface(k2, chi_o, q); };
}

void require_admissible_r(const SurfaceInvariants& inv) {
  if (inv.lk != 0 || inv.k2 != 0)
    raise(errc::universal_series_unknown,
          "generating function for r != 0 requires L.K_S = K_S^2 = 0: the "
          "universal correction series attached to L.K_S and K_S^2 are known "
          "to exist but have not been determined");
}

}  // namespace

PSeries hilb_ell_r0(const SurfaceInvariants& inv, int p_order, int q_order) {
  const auto phi = phi_m21_provider();
  const PSeries l20 = lift(phi, {2, 0, true, p_order, q_order});
  const PSeries l11 = lift(phi, {1, 1, true, p_order, q_order});
  const PSeries dmvv =
      lift(ell_surface_provider(inv.k2, inv.chi_o), {0, 0, true, p_order, q_order});
  return l20.pow(Rational(inv.l2, 2)) * l11.pow(Rational(inv.lk, 2)) * dmvv;
}

PSeries hilb_chi_y_r0(const SurfaceInvariants& inv, int p_order) {
  PSeries r = PSeries::one(p_order, 0);
  for (long n = 1; n <= p_order; ++n) {
    // Combined exponents of (1-p^n), (1-p^n y), (1-p^n/y) across the three
    // product blocks and eta^{K^2} / delta_tilde^{chi/2}.
    r *= binomial_factor_p(p_order, 0, static_cast<int>(n), 0,
                           Rational(n * n * inv.l2 + inv.k2 - 10 * inv.chi_o));
    r *= binomial_factor_p(p_order, 0, static_cast<int>(n), 2,
                           Rational(-n * n * inv.l2 - n * inv.lk - 2 * inv.chi_o, 2));
    r *= binomial_factor_p(p_order, 0, static_cast<int>(n), -2,
                           Rational(-n * n * inv.l2 + n * inv.lk - 2 * inv.chi_o, 2));
  }
  return r;
}

QSeries hilb_ell_k3(int n, long l_sq, long r, int q_order) {
  if (n < 0) throw std::invalid_argument("hilb_ell_k3: n must be >= 0");
  if (n == 0) return QSeries::one(q_order);
  const Rational w = Rational(l_sq, 2) - Rational(r * r * (n - 1));
  const PSeries series =
      lift(phi_m21_provider(), {2, 0, true, n, q_order}).pow(w) *
      lift(two_phi_01_provider(), {0, 0, true, n, q_order});
  return series.extract(n);
}

PSeries hilb_ell_general_r(const SurfaceInvariants& inv, int p_order, int q_order) {
  if (inv.r == 0) return hilb_ell_r0(inv, p_order, q_order);
  require_admissible_r(inv);
  const Rational r2(inv.r * inv.r);
  const auto phi = phi_m21_provider();
  const PSeries l20_neg = lift(phi, {2, 0, true, p_order, q_order});
  const PSeries l00_2phi =
      lift(two_phi_01_provider(), {0, 0, false, p_order, q_order});
  const PSeries log_deriv = lift_log_z_derivative(phi, {2, 0, false, p_order, q_order});
  const PSeries denom =
      l00_2phi * (PSeries::one(p_order, q_order) - log_deriv.scaled(r2));
  const PSeries in_z = l20_neg.pow(Rational(inv.l2 + inv.r * inv.r * inv.chi_o, 2)) *
                       denom.pow(Rational(-inv.chi_o, 2));
  return compose(in_z, invert_change_of_variables(l20_neg, r2));
}

PSeries hilb_chi_y_general_r(const SurfaceInvariants& inv, int p_order) {
  if (inv.r == 0) return hilb_chi_y_r0(inv, p_order);
  require_admissible_r(inv);
  const Rational r2(inv.r * inv.r);
  const PSeries numer =
      chi_y_base_product(p_order, Rational(inv.l2 + inv.r * inv.r * inv.chi_o, 2));
  const PSeries denom = delta_tilde(p_order) * chi_y_denominator_sum(p_order, r2);
  const PSeries in_z = numer * denom.pow(Rational(-inv.chi_o, 2));
  const PSeries g = chi_y_base_product(p_order, Rational(1));
  return compose(in_z, invert_change_of_variables(g, r2));
}

PSeries lagrange_brute(const PSeries& g, const PSeries& f, const Rational& w,
                       const Rational& k, int n_max) {
  if (g.p_order() < n_max || f.p_order() < n_max)
    raise(errc::order_exceeded, "lagrange_brute: inputs shorter than n_max");
  const int nq = std::min(g.q_order(), f.q_order());
  const PSeries gt = g.truncated_p(n_max).truncated_q(nq);
  const PSeries ft = f.truncated_p(n_max).truncated_q(nq);
  PSeries out(n_max, nq);
  for (int n = 0; n <= n_max; ++n) {
    const PSeries term = gt.pow(w - k * Rational(n)) * ft;
    out.at(n) = term.extract(n);
  }
  return out;
}

PSeries lagrange_closed(const PSeries& g, const PSeries& f, const Rational& w,
                        const Rational& k, int n_max) {
  if (g.p_order() < n_max || f.p_order() < n_max)
    raise(errc::order_exceeded, "lagrange_closed: inputs shorter than n_max");
  const int nq = std::min(g.q_order(), f.q_order());
  const PSeries gt = g.truncated_p(n_max).truncated_q(nq);
  const PSeries ft = f.truncated_p(n_max).truncated_q(nq);
  const PSeries denom =
      PSeries::one(n_max, nq) + gt.z_log_derivative().scaled(k);
  const PSeries in_z = gt.pow(w) * ft * denom.reciprocal();
  return compose(in_z, invert_change_of_variables(gt, k));
}

K3ModuliDims k3_moduli_vd(const K3ModuliInput& input) {
  if (input.s <= 0)
    raise(errc::degenerate_moduli, "rank s must be positive");
  if (input.c1_sq % 2 != 0)
    raise(errc::non_integral_class, "c1^2 must be even on a K3 surface");

  K3ModuliDims d;
  const Rational rs(input.r, input.s);
  d.m_c1 = input.l_c1 - rs * Rational(input.c1_sq);
  if (!d.m_c1.is_integer())
    raise(errc::non_integral_class,
          "M.c1 = L.c1 - (r/s) c1^2 must be an integer, got " + d.m_c1.str());
  d.m_sq = input.l_sq - Rational(2) * rs * input.l_c1 + rs * rs * Rational(input.c1_sq);
  if (!d.m_sq.is_even_integer())
    raise(errc::non_integral_class,
          "M^2 must be an even integer, got " + d.m_sq.str());

  const Rational residue =
      d.m_c1 + Rational(input.r) * (Rational(input.c1_sq, 2) - Rational(input.c2));
  if (!(residue / Rational(input.s)).is_integer())
    raise(errc::divisibility_violation,
          "s must divide M.c1 + r(c1^2/2 - c2), got " + residue.str() +
          " mod " + std::to_string(input.s));

  d.vd_c = 2 * input.s * input.c2 - (input.s - 1) * input.c1_sq -
           2 * (input.s * input.s - 1);
  if (d.vd_c <= 1)
    raise(errc::degenerate_moduli,
          "vd(c) = " + std::to_string(d.vd_c) + " <= 1");

  d.c2_v = d.m_sq * Rational(1, 2) + Rational(2 * input.r) +
           d.m_c1 / Rational(input.s) +
           rs * (Rational(input.c1_sq, 2) - Rational(input.c2));
  d.vd_v = Rational(2 * input.r) * d.c2_v - Rational(input.r - 1) * d.m_sq -
           Rational(2 * (input.r * input.r - 1));
  const Rational closed =
      input.l_sq + Rational(2) - rs * rs * Rational(d.vd_c - 2);
  if (d.vd_v != closed)
    throw std::logic_error("k3_moduli_vd: dimension chain disagrees with closed form");
  d.exponent = d.vd_v * Rational(1, 2) - Rational(1);
  return d;
}

QSeries k3_moduli_ell(const K3ModuliInput& input, int q_order) {
  const K3ModuliDims d = k3_moduli_vd(input);
  const int np = static_cast<int>(d.vd_c / 2);
  const auto phi = phi_m21_provider();
  const PSeries l20_neg = lift(phi, {2, 0, true, np, q_order});
  const PSeries l00_neg =
      lift(two_phi_01_provider(), {0, 0, true, np, q_order});
  const QSeries direct = (l20_neg.pow(d.exponent) * l00_neg).extract(np);

  // Change-of-variables route: z-series with exponent L^2/2 + (r/s)^2,
  // inverted through p = z L20(-phi_m21, z)^{(r/s)^2}.
  const Rational rho = Rational(input.r * input.r, input.s * input.s);
  const PSeries l00_2phi = lift(two_phi_01_provider(), {0, 0, false, np, q_order});
  const PSeries log_deriv = lift_log_z_derivative(phi, {2, 0, false, np, q_order});
  const PSeries denom =
      l00_2phi * (PSeries::one(np, q_order) - log_deriv.scaled(rho));
  const PSeries in_z =
      l20_neg.pow(input.l_sq * Rational(1, 2) + rho) * denom.reciprocal();
  const QSeries via_change =
      compose(in_z, invert_change_of_variables(l20_neg, rho)).extract(np);
  if (direct != via_change)
    throw std::logic_error(
        "k3_moduli_ell: direct extraction disagrees with the "
        "change-of-variables form");
  return direct;
}

YLaurent k3_moduli_chi_y(const K3ModuliInput& input) {
  const K3ModuliDims d = k3_moduli_vd(input);
  const int np = static_cast<int>(d.vd_c / 2);
  const PSeries direct_series =
      chi_y_base_product(np, d.exponent) * delta_tilde(np).reciprocal();
  const YLaurent direct = direct_series.extract(np).coeff(0);

  const Rational rho = Rational(input.r * input.r, input.s * input.s);
  const PSeries denom = delta_tilde(np) * chi_y_denominator_sum(np, rho);
  const PSeries in_z =
      chi_y_base_product(np, input.l_sq * Rational(1, 2) + rho) * denom.reciprocal();
  const PSeries g = chi_y_base_product(np, Rational(1));
  const YLaurent via_change =
      compose(in_z, invert_change_of_variables(g, rho)).extract(np).coeff(0);
  if (direct != via_change)
    throw std::logic_error(
        "k3_moduli_chi_y: direct extraction disagrees with the "
        "change-of-variables form");
  return direct;
}

PSeries chi_y_base_product(int p_order, const Rational& w) {
  PSeries r = PSeries::one(p_order, 0);
  for (long n = 1; n <= p_order; ++n) {
    const Rational e = Rational(n * n) * w;
    r *= binomial_factor_p(p_order, 0, static_cast<int>(n), 0, Rational(2) * e);
    r *= binomial_factor_p(p_order, 0, static_cast<int>(n), 2, -e);
    r *= binomial_factor_p(p_order, 0, static_cast<int>(n), -2, -e);
  }
  return r;
}

PSeries chi_y_denominator_sum(int p_order, const Rational& rho) {
  PSeries r = PSeries::one(p_order, 0);
  for (long n = 1; n <= p_order; ++n)
    for (long dd = 1; dd <= n; ++dd) {
      if (n % dd != 0) continue;
      const long q = n / dd;
      const Rational c = rho * Rational(q * q * q);
      auto& slice = r.at(static_cast<int>(n)).at(0);
      slice.add_u(static_cast<int>(2 * dd), c);
      slice.add_u(0, Rational(-2) * c);
      slice.add_u(static_cast<int>(-2 * dd), c);
    }
  return r;
}

}  // namespace ellgen
