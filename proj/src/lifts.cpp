#include "ellgen/lifts.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "ellgen/errors.hpp"

namespace ellgen {

namespace {

Rational ipow(long base, int e) {
  return Rational(base).pow_int(e);
}

void validate(const LiftSpec& spec) {
  if (spec.a < 0 || spec.b < 0)
    throw std::invalid_argument("lift: exponent weights a, b must be >= 0");
  if (spec.p_order < 0 || spec.q_order < 0)
    throw std::invalid_argument("lift: negative truncation order");
}

}  // namespace

SeriesProvider fixed_provider(QSeries f) {
  return [s = std::move(f)](int q_order) {
    if (q_order > s.q_order())
      raise(errc::insufficient_input_order,
            "series is only known to q-order " + std::to_string(s.q_order()) +
                ", need " + std::to_string(q_order));
    return s.truncated(q_order);
  };
}

PSeries lift_log(const SeriesProvider& f, const LiftSpec& spec) {
  validate(spec);
  const int np = spec.p_order, nq = spec.q_order;
  PSeries acc(np, nq);
  if (np < 1) return acc;

  const QSeries fs = f(np * nq);
  if (fs.q_order() < np * nq)
    raise(errc::insufficient_input_order,
          "lift: provider returned q-order " + std::to_string(fs.q_order()) +
              ", need " + std::to_string(np * nq));

  for (int k = 1; k <= np; ++k)
    for (int l = 1; l * k <= np; ++l)
      for (int m = 0; m * k <= nq; ++m) {
        const YLaurent& slice = fs.coeff(l * m);
        for (const auto& [e, c] : slice.terms()) {
          if (e % 2 != 0)
            raise(errc::non_integral_class,
                  "lift: input series must be integral in y");
          const long n = e / 2;
          if (spec.b > 0 && n == 0) continue;
          Rational w = c * ipow(l, spec.a) * ipow(n, spec.b);
          if (spec.negate_input) w = -w;
          acc.at(l * k).at(m * k).add_u(e * k, w * Rational(-1, k));
        }
      }
  return acc;
}

PSeries lift(const SeriesProvider& f, const LiftSpec& spec) {
  return lift_log(f, spec).exp();
}

PSeries lift_log_z_derivative(const SeriesProvider& f, const LiftSpec& spec) {
  PSeries lg = lift_log(f, spec);
  PSeries r(spec.p_order, spec.q_order);
  for (int l = 1; l <= spec.p_order; ++l)
    r.at(l) = lg.coeff(l).scaled(Rational(l));
  return r;
}

}  // namespace ellgen
