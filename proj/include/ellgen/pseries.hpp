#pragma once

#include <string>
#include <vector>

#include "ellgen/qseries.hpp"

namespace ellgen {

/// Power series in p (equivalently z) truncated at p^P, whose coefficients
/// are QSeries sharing one q-truncation order. The lifts and every
/// generating function live here; the chi_{-y} specializations use q_order 0.
class PSeries {
 public:
  PSeries(int p_order, int q_order);

  static PSeries one(int p_order, int q_order);
  static PSeries constant(const QSeries& c, int p_order);
  /// The series p itself (zero when p_order = 0).
  static PSeries p_monomial(int p_order, int q_order);

  int p_order() const { return p_order_; }
  int q_order() const { return q_order_; }

  const QSeries& coeff(int l) const;
  QSeries& at(int l);

  /// Exact stored coefficient slices; OrderExceeded beyond the truncation.
  QSeries extract(int l) const { return coeff(l); }
  Rational extract_qu(int l, int m, int u_exp) const;
  Rational extract_qy(int l, int m, int y_exp) const {
    return extract_qu(l, m, 2 * y_exp);
  }

  bool is_zero() const;
  bool is_one() const;

  PSeries truncated_p(int np) const;
  PSeries truncated_q(int nq) const;

  PSeries scaled(const Rational& c) const;
  bool integral_in_y() const;
  bool symmetric_y() const;

  /// Multiplication by p: slices shift up one step, the top slice falls off.
  PSeries shifted_up() const;

  /// log of a series with constant term 1 (NonUnitConstantTerm otherwise).
  PSeries log() const;
  /// exp of a series with constant term 0 (NonZeroConstantTerm otherwise).
  PSeries exp() const;
  /// f^w = exp(w log f) for rational w; integer w goes through binary
  /// powering, which agrees exactly with the exp/log route.
  PSeries pow(const Rational& w) const;
  PSeries reciprocal() const;
  /// z f'/f. Constant term must be 1.
  PSeries z_log_derivative() const;

  PSeries operator-() const { return scaled(Rational(-1)); }
  friend PSeries operator+(const PSeries& a, const PSeries& b);
  friend PSeries operator-(const PSeries& a, const PSeries& b);
  friend PSeries operator*(const PSeries& a, const PSeries& b);
  PSeries& operator+=(const PSeries& o) { return *this = *this + o; }
  PSeries& operator-=(const PSeries& o) { return *this = *this - o; }
  PSeries& operator*=(const PSeries& o) { return *this = *this * o; }

  friend bool operator==(const PSeries& a, const PSeries& b) {
    return a.p_order_ == b.p_order_ && a.q_order_ == b.q_order_ && a.c_ == b.c_;
  }
  friend bool operator!=(const PSeries& a, const PSeries& b) { return !(a == b); }

  std::string str() const;

 private:
  int p_order_;
  int q_order_;
  std::vector<QSeries> c_;
};

/// Substitution f(zp) for zp with zero constant term, truncated to the
/// minimum of the two order pairs.
PSeries compose(const PSeries& f, const PSeries& zp);

/// Solves p = z g(z)^k for z as a series in p (constant term 0, linear
/// coefficient 1), by the fixed-point iteration z <- p g(z)^{-k}. g must
/// have constant term 1.
PSeries invert_change_of_variables(const PSeries& g, const Rational& k);

/// (1 - p^{p_pow} u^{u_exp})^w truncated at p^{p_order}, with scalar q-slices.
PSeries binomial_factor_p(int p_order, int q_order, int p_pow, int u_exp,
                          const Rational& w);

}  // namespace ellgen
