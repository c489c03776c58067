#pragma once

#include <functional>

#include "ellgen/pseries.hpp"
#include "ellgen/qseries.hpp"

namespace ellgen {

/// Source of a q-series at any requested truncation order. A lift truncated
/// at (P, Q) reads coefficients of its input up to q-order P*Q, so the
/// internal order requirement is decoupled from caller-visible orders.
using SeriesProvider = std::function<QSeries(int q_order)>;

/// Wraps an already-computed series; raises InsufficientInputOrder when
/// asked beyond its truncation.
SeriesProvider fixed_provider(QSeries f);

/// Parameters of the multiplicative lift
/// prod_{l>0, m>=0, n} (1 - p^l q^m y^n)^{l^a n^b c_{lm,n}}
/// built from the coefficients c_{m,n} of the input series.
struct LiftSpec {
  int a = 0;
  int b = 0;
  bool negate_input = false;
  int p_order = 0;
  int q_order = 0;
};

/// The lift itself, computed through its exact logarithm
/// -sum_{k>=1} sum_{l,m,n} (1/k) l^a n^b c_{lm,n} p^{lk} q^{mk} y^{nk}
/// and exponentiated. The constant term is always 1.
PSeries lift(const SeriesProvider& f, const LiftSpec& spec);

/// log of the lift (constant term 0), exact at the given truncation.
PSeries lift_log(const SeriesProvider& f, const LiftSpec& spec);

/// z d/dz log of the lift: the p^{lk} term of the log series scaled by lk.
/// Avoids exponentiating and re-expanding the logarithm.
PSeries lift_log_z_derivative(const SeriesProvider& f, const LiftSpec& spec);

}  // namespace ellgen
