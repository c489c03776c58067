#pragma once

#include "ellgen/jacobi_forms.hpp"
#include "ellgen/lifts.hpp"
#include "ellgen/pseries.hpp"

namespace ellgen {

/// Generating function of elliptic genera of Hilbert schemes of points with
/// values in mu(L), for r = 0:
/// L20(-phi_m21,p)^{L^2/2} L11(-phi_m21,p)^{LK/2} / L(Ell(S),p).
/// The p^n slice is Ell(S^[n], mu(L)).
PSeries hilb_ell_r0(const SurfaceInvariants& inv, int p_order, int q_order);

/// The q = 0 specialization of hilb_ell_r0 as an explicit infinite product
/// (chi_{-y} genera with values in mu(L)); q_order 0 by construction.
PSeries hilb_chi_y_r0(const SurfaceInvariants& inv, int p_order);

/// Ell(S^[n], mu(L) \otimes E^r) for a K3 surface: the p^n coefficient of
/// L20(-phi_m21,p)^{L^2/2 - r^2(n-1)} L(-2 phi_01,p).
QSeries hilb_ell_k3(int n, long l_sq, long r, int q_order);

/// Generating function for arbitrary r on the admissible cone (r = 0, or
/// L.K = K^2 = 0 so the undetermined universal factors drop out). Built as
/// a z-series and converted through p = z L20(-phi_m21,z)^{r^2}.
/// Raises UniversalSeriesUnknown outside the cone.
PSeries hilb_ell_general_r(const SurfaceInvariants& inv, int p_order, int q_order);

/// The q = 0 specialization of hilb_ell_general_r, built from the explicit
/// products; same admissibility.
PSeries hilb_chi_y_general_r(const SurfaceInvariants& inv, int p_order);

/// sum_{n<=N} p^n Coeff_{p^n}[ g(p)^{w-kn} f(p) ], by direct coefficient
/// extraction. g must have constant term 1.
PSeries lagrange_brute(const PSeries& g, const PSeries& f, const Rational& w,
                       const Rational& k, int n_max);

/// The same series in closed form: g(z)^w f(z) / (1 + k z (log g)'(z) z)
/// evaluated at the inverse of p = z g(z)^k.
PSeries lagrange_closed(const PSeries& g, const PSeries& f, const Rational& w,
                        const Rational& k, int n_max);

/// Numerical input for moduli of sheaves on a K3 surface: a class c of rank
/// s with Chern numbers (c1^2, c2), a twist r, and a rational polarization
/// class L recorded through L.c1 and L^2.
struct K3ModuliInput {
  long s = 1;
  long r = 0;
  long c1_sq = 0;
  long c2 = 0;
  Rational l_c1;
  Rational l_sq;
};

/// Dimension bookkeeping for K3ModuliInput; all admissibility checks live in
/// k3_moduli_vd.
struct K3ModuliDims {
  long vd_c = 0;        // 2 s c2 - (s-1) c1^2 - 2(s^2-1)
  Rational m_c1;        // M.c1 with M = L - (r/s) c1
  Rational m_sq;        // M^2
  Rational c2_v;        // c2 of the determinant-line-bundle class v
  Rational vd_v;        // expected dimension attached to v
  Rational exponent;    // vd_v/2 - 1
};

/// Validates the input (integrality of M.c1 and M^2, divisibility,
/// non-degeneracy) and computes vd(v) both along the Chern-data chain and in
/// the closed form L^2 + 2 - (r/s)^2 (vd(c) - 2); the two must agree.
K3ModuliDims k3_moduli_vd(const K3ModuliInput& input);

/// Elliptic genus of the moduli space with values in mu(L) E^r: the
/// p^{vd(c)/2} coefficient of L20(-phi_m21,p)^{vd(v)/2-1} L(-2 phi_01,p).
/// Always cross-checked internally against the change-of-variables form.
QSeries k3_moduli_ell(const K3ModuliInput& input, int q_order);

/// The chi_{-y} value, extracted from the q = 0 products (also cross-checked
/// against the change-of-variables form).
YLaurent k3_moduli_chi_y(const K3ModuliInput& input);

/// q = 0 slice of the lift L20(-phi_m21, .):
/// prod_n ((1-p^n)^2 / ((1-p^n y)(1-p^n/y)))^{n^2 w}.
PSeries chi_y_base_product(int p_order, const Rational& w);

/// 1 + rho sum_{n>=1} sum_{d|n} (y^d - 2 + y^{-d}) (n/d)^3 p^n, the q = 0
/// value of 1 - rho z d/dz log L20(phi_m21, z).
PSeries chi_y_denominator_sum(int p_order, const Rational& rho);

}  // namespace ellgen
