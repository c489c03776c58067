#pragma once

#include <string>
#include <vector>

#include "ellgen/ylaurent.hpp"

namespace ellgen {

/// Power series in q truncated at q^Q, with YLaurent coefficients.
/// Arithmetic between series of different order truncates to the minimum;
/// the truncation order always travels with the value.
class QSeries {
 public:
  explicit QSeries(int q_order);

  static QSeries one(int q_order);
  static QSeries constant(const YLaurent& c, int q_order);

  int q_order() const { return q_order_; }

  const YLaurent& coeff(int m) const;
  YLaurent& at(int m);

  bool is_zero() const;
  bool is_one() const;

  /// Copy truncated to order M <= q_order.
  QSeries truncated(int m) const;

  QSeries y_derivative() const;
  QSeries scaled(const Rational& c) const;
  bool integral_in_y() const;
  bool symmetric_y() const;

  QSeries operator-() const { return scaled(Rational(-1)); }
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.q_order_ == b.q_order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  std::string str() const;

 private:
  int q_order_;
  std::vector<YLaurent> c_;
};

/// Expansion of (1 - q^{q_pow} u^{u_exp})^w truncated at q^{q_order}; the
/// building block for the infinite products. Requires q_pow >= 1.
QSeries binomial_factor_q(int q_order, int q_pow, int u_exp, const Rational& w);

}  // namespace ellgen
