#include "ellgen/pseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ellgen/errors.hpp"

namespace ellgen {

PSeries::PSeries(int p_order, int q_order)
    : p_order_(p_order), q_order_(q_order) {
  if (p_order < 0) throw std::invalid_argument("PSeries: negative order");
  c_.assign(static_cast<size_t>(p_order) + 1, QSeries(q_order));
}

PSeries PSeries::one(int p_order, int q_order) {
  PSeries s(p_order, q_order);
  s.c_[0] = QSeries::one(q_order);
  return s;
}

PSeries PSeries::constant(const QSeries& c, int p_order) {
  PSeries s(p_order, c.q_order());
  s.c_[0] = c;
  return s;
}

PSeries PSeries::p_monomial(int p_order, int q_order) {
  PSeries s(p_order, q_order);
  if (p_order >= 1) s.c_[1] = QSeries::one(q_order);
  return s;
}

const QSeries& PSeries::coeff(int l) const {
  if (l < 0 || l > p_order_)
    raise(errc::order_exceeded, "PSeries: coefficient p^" + std::to_string(l) +
                                    " beyond order " + std::to_string(p_order_));
  return c_[static_cast<size_t>(l)];
}

QSeries& PSeries::at(int l) {
  if (l < 0 || l > p_order_)
    raise(errc::order_exceeded, "PSeries: coefficient p^" + std::to_string(l) +
                                    " beyond order " + std::to_string(p_order_));
  return c_[static_cast<size_t>(l)];
}

Rational PSeries::extract_qu(int l, int m, int u_exp) const {
  return coeff(l).coeff(m).coeff_u(u_exp);
}

bool PSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const QSeries& s) { return s.is_zero(); });
}

bool PSeries::is_one() const {
  if (!c_[0].is_one()) return false;
  return std::all_of(c_.begin() + 1, c_.end(),
                     [](const QSeries& s) { return s.is_zero(); });
}

PSeries PSeries::truncated_p(int np) const {
  if (np > p_order_)
    raise(errc::order_exceeded, "PSeries: cannot extend p-truncation order");
  PSeries r(np, q_order_);
  for (int l = 0; l <= np; ++l) r.c_[static_cast<size_t>(l)] = c_[static_cast<size_t>(l)];
  return r;
}

PSeries PSeries::truncated_q(int nq) const {
  PSeries r(p_order_, nq);
  for (int l = 0; l <= p_order_; ++l)
    r.c_[static_cast<size_t>(l)] = c_[static_cast<size_t>(l)].truncated(nq);
  return r;
}

PSeries PSeries::scaled(const Rational& s) const {
  PSeries r(p_order_, q_order_);
  for (int l = 0; l <= p_order_; ++l)
    r.c_[static_cast<size_t>(l)] = c_[static_cast<size_t>(l)].scaled(s);
  return r;
}

bool PSeries::integral_in_y() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const QSeries& s) { return s.integral_in_y(); });
}

bool PSeries::symmetric_y() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const QSeries& s) { return s.symmetric_y(); });
}

PSeries PSeries::shifted_up() const {
  PSeries r(p_order_, q_order_);
  for (int l = 0; l + 1 <= p_order_; ++l)
    r.c_[static_cast<size_t>(l + 1)] = c_[static_cast<size_t>(l)];
  return r;
}

PSeries operator+(const PSeries& a, const PSeries& b) {
  PSeries r(std::min(a.p_order_, b.p_order_), std::min(a.q_order_, b.q_order_));
  for (int l = 0; l <= r.p_order_; ++l)
    r.c_[static_cast<size_t>(l)] =
        a.c_[static_cast<size_t>(l)] + b.c_[static_cast<size_t>(l)];
  return r;
}

PSeries operator-(const PSeries& a, const PSeries& b) {
  PSeries r(std::min(a.p_order_, b.p_order_), std::min(a.q_order_, b.q_order_));
  for (int l = 0; l <= r.p_order_; ++l)
    r.c_[static_cast<size_t>(l)] =
        a.c_[static_cast<size_t>(l)] - b.c_[static_cast<size_t>(l)];
  return r;
}

PSeries operator*(const PSeries& a, const PSeries& b) {
  PSeries r(std::min(a.p_order_, b.p_order_), std::min(a.q_order_, b.q_order_));
  for (int i = 0; i <= r.p_order_; ++i) {
    if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= r.p_order_; ++j)
      r.c_[static_cast<size_t>(i + j)] +=
          a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
  }
  return r;
}

PSeries PSeries::log() const {
  if (!c_[0].is_one())
    raise(errc::non_unit_constant_term, "log: constant term must be 1");
  PSeries g = *this - one(p_order_, q_order_);
  PSeries total(p_order_, q_order_);
  PSeries acc = g;
  for (int k = 1; k <= p_order_; ++k) {
    if (k > 1) acc *= g;
    total += acc.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
  }
  return total;
}

PSeries PSeries::exp() const {
  if (!c_[0].is_zero())
    raise(errc::non_zero_constant_term, "exp: constant term must be 0");
  PSeries total = one(p_order_, q_order_);
  PSeries acc = one(p_order_, q_order_);
  for (int k = 1; k <= p_order_; ++k) {
    acc = (acc * *this).scaled(Rational(1, k));
    total += acc;
  }
  return total;
}

PSeries PSeries::reciprocal() const {
  if (!c_[0].is_one())
    raise(errc::non_unit_constant_term, "reciprocal: constant term must be 1");
  PSeries r = one(p_order_, q_order_);
  for (int l = 1; l <= p_order_; ++l) {
    QSeries s(q_order_);
    for (int j = 1; j <= l; ++j)
      s += c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(l - j)];
    r.c_[static_cast<size_t>(l)] = -s;
  }
  return r;
}

PSeries PSeries::pow(const Rational& w) const {
  if (!c_[0].is_one())
    raise(errc::non_unit_constant_term, "pow: constant term must be 1");
  if (w.is_zero()) return one(p_order_, q_order_);
  if (w.fits_long()) {
    long e = w.to_long();
    PSeries base = e < 0 ? reciprocal() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                            : static_cast<unsigned long>(e);
    PSeries r = one(p_order_, q_order_);
    while (n > 0) {
      if (n & 1) r *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return r;
  }
  return log().scaled(w).exp();
}

PSeries PSeries::z_log_derivative() const {
  PSeries lg = log();
  PSeries r(p_order_, q_order_);
  for (int l = 1; l <= p_order_; ++l)
    r.c_[static_cast<size_t>(l)] = lg.c_[static_cast<size_t>(l)].scaled(Rational(l));
  return r;
}

std::string PSeries::str() const {
  std::ostringstream os;
  for (int l = 0; l <= p_order_; ++l) {
    if (c_[static_cast<size_t>(l)].is_zero()) continue;
    os << "p^" << l << ": " << c_[static_cast<size_t>(l)].str() << "\n";
  }
  os << "O(p^" << p_order_ + 1 << ")";
  return os.str();
}

PSeries compose(const PSeries& f, const PSeries& zp) {
  if (!zp.coeff(0).is_zero())
    raise(errc::non_zero_constant_term,
          "compose: inner series must have zero constant term");
  const int np = std::min(f.p_order(), zp.p_order());
  const int nq = std::min(f.q_order(), zp.q_order());
  PSeries z = zp.truncated_p(np).truncated_q(nq);
  PSeries r = PSeries::constant(f.coeff(np).truncated(nq), np);
  for (int l = np - 1; l >= 0; --l)
    r = r * z + PSeries::constant(f.coeff(l).truncated(nq), np);
  return r;
}

PSeries invert_change_of_variables(const PSeries& g, const Rational& k) {
  if (!g.coeff(0).is_one())
    raise(errc::non_unit_constant_term,
          "invert_change_of_variables: constant term of g must be 1");
  PSeries z = PSeries::p_monomial(g.p_order(), g.q_order());
  if (k.is_zero()) return z;
  // Each pass fixes one more p-order, so p_order + 1 passes are exact.
  for (int it = 0; it <= g.p_order(); ++it)
    z = compose(g, z).pow(-k).shifted_up();
  return z;
}

PSeries binomial_factor_p(int p_order, int q_order, int p_pow, int u_exp,
                          const Rational& w) {
  if (p_pow < 1) throw std::invalid_argument("binomial_factor_p: p_pow must be >= 1");
  PSeries r(p_order, q_order);
  for (int j = 0; j * p_pow <= p_order; ++j) {
    Rational c = Rational::binomial(w, j);
    if (j % 2 != 0) c = -c;
    r.at(j * p_pow).at(0).add_u(j * u_exp, c);
  }
  return r;
}

}  // namespace ellgen
