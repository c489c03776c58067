#pragma once

#include <random>

#include "ellgen/pseries.hpp"
#include "ellgen/qseries.hpp"
#include "ellgen/rational.hpp"
#include "ellgen/ylaurent.hpp"

namespace ellgen::testing {

// Seeded generator for property tests; raw engine draws keep results
// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(unsigned long seed) : e_(seed) {}

  long uniform(long lo, long hi) {
    return lo + static_cast<long>(e_() % static_cast<unsigned long>(hi - lo + 1));
  }

  Rational rational(long max_abs = 4, long max_den = 3) {
    return Rational(uniform(-max_abs, max_abs), uniform(1, max_den));
  }

  YLaurent ylaurent(int max_u = 3, int terms = 3) {
    YLaurent y;
    for (int t = 0; t < terms; ++t)
      y.add_u(static_cast<int>(uniform(-max_u, max_u)), rational());
    return y;
  }

  // Integral in y: only even u-exponents.
  YLaurent ylaurent_integral(int max_y = 2, int terms = 3) {
    YLaurent y;
    for (int t = 0; t < terms; ++t)
      y.add_u(2 * static_cast<int>(uniform(-max_y, max_y)), rational());
    return y;
  }

  QSeries qseries(int q_order, int max_u = 3) {
    QSeries s(q_order);
    for (int m = 0; m <= q_order; ++m) s.at(m) = ylaurent(max_u, 2);
    return s;
  }

  QSeries qseries_integral(int q_order, int max_y = 2) {
    QSeries s(q_order);
    for (int m = 0; m <= q_order; ++m) s.at(m) = ylaurent_integral(max_y, 2);
    return s;
  }

  PSeries pseries(int p_order, int q_order, int max_u = 2) {
    PSeries s(p_order, q_order);
    for (int l = 0; l <= p_order; ++l) s.at(l) = qseries(q_order, max_u);
    return s;
  }

  // Constant term 1, as required by log/pow/inversion.
  PSeries unit_pseries(int p_order, int q_order, int max_u = 2) {
    PSeries s = pseries(p_order, q_order, max_u);
    s.at(0) = QSeries::one(q_order);
    return s;
  }

 private:
  std::mt19937_64 e_;
};

}  // namespace ellgen::testing
