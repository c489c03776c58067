#include "ellgen/jacobi_forms.hpp"

namespace ellgen {

namespace {

// (y - 2 + 1/y), the square of (y^{1/2} - y^{-1/2}).
YLaurent y_m2_ym1() {
  YLaurent v;
  v.add_u(2, Rational(1));
  v.add_u(0, Rational(-2));
  v.add_u(-2, Rational(1));
  return v;
}

// prod_{n>0} (1-q^n y)^2 (1-q^n/y)^2 (1-q^n)^{-4}. Factor n contributes
// nothing below q^n, so n <= Q factors give the exact truncation.
QSeries index_one_product(int q_order) {
  QSeries r = QSeries::one(q_order);
  for (int n = 1; n <= q_order; ++n) {
    r *= binomial_factor_q(q_order, n, 2, Rational(2));
    r *= binomial_factor_q(q_order, n, -2, Rational(2));
    r *= binomial_factor_q(q_order, n, 0, Rational(-4));
  }
  return r;
}

}  // namespace

QSeries phi_m21(int q_order) {
  return QSeries::constant(y_m2_ym1(), q_order) * index_one_product(q_order);
}

QSeries h_series(int q_order) {
  QSeries r(q_order);
  r.at(0).add_u(0, Rational(-1, 12));
  for (int n = 1; n <= q_order; ++n)
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const Rational c(n / d);
      r.at(n).add_u(2 * d, c);
      r.at(n).add_u(-2 * d, c);
    }
  return r;
}

QSeries wp_phi_m21(int q_order) {
  // wp * (y - 2 + 1/y) = (1/12)(y - 2 + 1/y) + 1
  //   + (y - 2 + 1/y) * sum_{n>0} sum_{d|n} d (y^d - 2 + y^{-d}) q^n.
  const YLaurent sq = y_m2_ym1();
  QSeries head(q_order);
  head.at(0) = sq.scaled(Rational(1, 12)) + YLaurent::one();
  for (int n = 1; n <= q_order; ++n) {
    YLaurent slice;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      slice.add_u(2 * d, Rational(d));
      slice.add_u(0, Rational(-2 * d));
      slice.add_u(-2 * d, Rational(d));
    }
    head.at(n) = sq * slice;
  }
  return head * index_one_product(q_order);
}

QSeries phi_01(int q_order) {
  return wp_phi_m21(q_order).scaled(Rational(12));
}

QSeries ell_surface(long k2, long chi_o, int q_order) {
  const QSeries wp_h_phi = wp_phi_m21(q_order) + h_series(q_order) * phi_m21(q_order);
  return wp_h_phi.scaled(Rational(-k2)) + phi_01(q_order).scaled(Rational(chi_o));
}

QSeries ell_surface_with_L(const SurfaceInvariants& inv, int q_order) {
  const QSeries phi = phi_m21(q_order);
  return ell_surface(inv.k2, inv.chi_o, q_order) +
         phi.y_derivative().scaled(Rational(inv.lk, 2)) +
         phi.scaled(Rational(inv.l2, 2));
}

QSeries theta_hat(int q_order) {
  YLaurent head;
  head.add_u(1, Rational(1));
  head.add_u(-1, Rational(-1));
  QSeries r = QSeries::constant(head, q_order);
  for (int n = 1; n <= q_order; ++n) {
    r *= binomial_factor_q(q_order, n, 0, Rational(1));
    r *= binomial_factor_q(q_order, n, 2, Rational(1));
    r *= binomial_factor_q(q_order, n, -2, Rational(1));
  }
  return r;
}

QSeries eta_bar(int q_order) {
  QSeries r = QSeries::one(q_order);
  for (int n = 1; n <= q_order; ++n)
    r *= binomial_factor_q(q_order, n, 0, Rational(1));
  return r;
}

PSeries eta_bar_p(int p_order) {
  PSeries r = PSeries::one(p_order, 0);
  for (int n = 1; n <= p_order; ++n)
    r *= binomial_factor_p(p_order, 0, n, 0, Rational(1));
  return r;
}

PSeries delta_tilde(int p_order) {
  PSeries r = PSeries::one(p_order, 0);
  for (int n = 1; n <= p_order; ++n) {
    r *= binomial_factor_p(p_order, 0, n, 0, Rational(20));
    r *= binomial_factor_p(p_order, 0, n, 2, Rational(2));
    r *= binomial_factor_p(p_order, 0, n, -2, Rational(2));
  }
  return r;
}

}  // namespace ellgen
