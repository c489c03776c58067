#include "ellgen/rational.hpp"

#include <stdexcept>

namespace ellgen {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::factorial(unsigned long k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(mpq_class(f));
}

Rational Rational::binomial(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  Rational num(1);
  for (long i = 0; i < k; ++i) num *= a - Rational(i);
  return num / factorial(static_cast<unsigned long>(k));
}

bool Rational::is_even_integer() const {
  return is_integer() && mpz_even_p(v_.get_num().get_mpz_t());
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow_int(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e < 0 ? reciprocal() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                          : static_cast<unsigned long>(e);
  mpq_class r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.v_.get_num().get_mpz_t(), n);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.v_.get_den().get_mpz_t(), n);
  return Rational(r);  // powers of a canonical value stay canonical
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::domain_error("Rational: not representable as long: " + str());
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace ellgen
