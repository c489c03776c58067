#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ellgen/rational.hpp"

namespace ellgen {

/// Laurent polynomial in y with exact rational coefficients. Exponents are
/// stored in units of u = y^{1/2}, so y^n sits at u-exponent 2n and
/// half-integer powers of y (theta series) stay integral in u. No zero
/// coefficients are ever stored.
class YLaurent {
 public:
  YLaurent() = default;
  explicit YLaurent(const Rational& c) { add_u(0, c); }

  static YLaurent one() { return YLaurent(Rational(1)); }
  static YLaurent monomial_u(int u_exp, const Rational& c);
  static YLaurent monomial_y(int y_exp, const Rational& c) {
    return monomial_u(2 * y_exp, c);
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  bool is_one() const { return is_constant() && coeff_u(0) == Rational(1); }

  Rational coeff_u(int u_exp) const;
  Rational coeff_y(int y_exp) const { return coeff_u(2 * y_exp); }
  void add_u(int u_exp, const Rational& c);

  /// Inclusive u-exponent support range; nullopt for the zero polynomial.
  std::optional<std::pair<int, int>> support_u() const;

  /// All u-exponents even, i.e. a genuine Laurent polynomial in y.
  bool integral_in_y() const;

  /// Invariant under y -> 1/y.
  bool symmetric_y() const { return *this == inverted_y(); }

  YLaurent inverted_y() const;   // y -> 1/y
  YLaurent y_derivative() const; // y d/dy, u-exponent e scales by e/2
  YLaurent scaled(const Rational& c) const;
  Rational eval_y1() const;      // substitute y = 1

  YLaurent operator-() const { return scaled(Rational(-1)); }
  YLaurent& operator+=(const YLaurent& o);
  YLaurent& operator-=(const YLaurent& o);
  friend YLaurent operator+(YLaurent a, const YLaurent& b) { return a += b; }
  friend YLaurent operator-(YLaurent a, const YLaurent& b) { return a -= b; }
  friend YLaurent operator*(const YLaurent& a, const YLaurent& b);

  friend bool operator==(const YLaurent& a, const YLaurent& b) { return a.c_ == b.c_; }
  friend bool operator!=(const YLaurent& a, const YLaurent& b) { return !(a == b); }

  const std::map<int, Rational>& terms() const { return c_; }

  std::string str() const;

 private:
  std::map<int, Rational> c_;
};

}  // namespace ellgen
