#pragma once

#include "ellgen/pseries.hpp"
#include "ellgen/qseries.hpp"

namespace ellgen {

/// Intersection numbers of a polarized surface: K_S^2, chi(O_S), L^2,
/// L.K_S, and the power r of the exceptional determinant line bundle.
struct SurfaceInvariants {
  long k2 = 0;
  long chi_o = 0;
  long l2 = 0;
  long lk = 0;
  long r = 0;
};

/// The weight -2, index 1 weak Jacobi form
/// (y - 2 + 1/y) prod_{n>0} (1-q^n y)^2 (1-q^n/y)^2 (1-q^n)^{-4}.
QSeries phi_m21(int q_order);

/// -1/12 + sum_{n>0} sum_{d|n} (n/d)(y^d + y^{-d}) q^n.
QSeries h_series(int q_order);

/// The product of the Weierstrass wp-function with phi_m21, assembled
/// without ever materializing wp alone (its y-expansion is not a Laurent
/// polynomial; the product is, order by order).
QSeries wp_phi_m21(int q_order);

/// The weight 0, index 1 weak Jacobi form, 12 * wp * phi_m21.
QSeries phi_01(int q_order);

/// Elliptic genus of a surface: -(wp + h) phi_m21 K^2 + phi_01 chi(O).
QSeries ell_surface(long k2, long chi_o, int q_order);

/// Elliptic genus with values in L:
/// Ell(S) + (L.K/2) y d/dy phi_m21 + (L^2/2) phi_m21. Ignores inv.r.
QSeries ell_surface_with_L(const SurfaceInvariants& inv, int q_order);

/// (u - 1/u) prod_{n>0} (1-q^n)(1-q^n u^2)(1-q^n u^-2) with u = y^{1/2};
/// the Jacobi theta function with its -i q^{1/8} prefactor stripped.
QSeries theta_hat(int q_order);

/// prod_{n>0} (1 - q^n).
QSeries eta_bar(int q_order);

/// prod_{n>0} (1 - p^n) as a p-series with scalar coefficients.
PSeries eta_bar_p(int p_order);

/// prod_{n>0} (1-p^n)^20 (1-p^n y)^2 (1-p^n/y)^2.
PSeries delta_tilde(int p_order);

}  // namespace ellgen
