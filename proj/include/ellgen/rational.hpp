#pragma once

#include <gmpxx.h>

#include <string>

namespace ellgen {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; zero is 0/1. Backed by GMP.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(runtime/explicit)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "a" or "a/b" in base 10. Throws std::invalid_argument on
  /// malformed input or zero denominator.
  static Rational from_string(const std::string& s);

  static Rational factorial(unsigned long k);

  /// Generalized binomial coefficient a(a-1)...(a-k+1)/k!.
  static Rational binomial(const Rational& a, long k);

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_even_integer() const;
  bool fits_long() const { return is_integer() && v_.get_num().fits_slong_p(); }
  int sign() const { return sgn(v_); }

  Rational reciprocal() const;
  Rational pow_int(long e) const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// Value as a long; throws std::domain_error unless an integer that fits.
  long to_long() const;

  std::string str() const;  // "a" or "a/b"
  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  const mpq_class& value() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

}  // namespace ellgen
