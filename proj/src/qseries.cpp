#include "ellgen/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ellgen/errors.hpp"

namespace ellgen {

QSeries::QSeries(int q_order) : q_order_(q_order) {
  if (q_order < 0) throw std::invalid_argument("QSeries: negative order");
  c_.resize(static_cast<size_t>(q_order) + 1);
}

QSeries QSeries::one(int q_order) {
  return constant(YLaurent::one(), q_order);
}

QSeries QSeries::constant(const YLaurent& c, int q_order) {
  QSeries s(q_order);
  s.c_[0] = c;
  return s;
}

const YLaurent& QSeries::coeff(int m) const {
  if (m < 0 || m > q_order_)
    raise(errc::order_exceeded, "QSeries: coefficient q^" + std::to_string(m) +
                                    " beyond order " + std::to_string(q_order_));
  return c_[static_cast<size_t>(m)];
}

YLaurent& QSeries::at(int m) {
  if (m < 0 || m > q_order_)
    raise(errc::order_exceeded, "QSeries: coefficient q^" + std::to_string(m) +
                                    " beyond order " + std::to_string(q_order_));
  return c_[static_cast<size_t>(m)];
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const YLaurent& y) { return y.is_zero(); });
}

bool QSeries::is_one() const {
  if (!c_[0].is_one()) return false;
  return std::all_of(c_.begin() + 1, c_.end(),
                     [](const YLaurent& y) { return y.is_zero(); });
}

QSeries QSeries::truncated(int m) const {
  if (m > q_order_)
    raise(errc::order_exceeded, "QSeries: cannot extend truncation order");
  QSeries r(m);
  for (int i = 0; i <= m; ++i) r.c_[static_cast<size_t>(i)] = c_[static_cast<size_t>(i)];
  return r;
}

QSeries QSeries::y_derivative() const {
  QSeries r(q_order_);
  for (int m = 0; m <= q_order_; ++m)
    r.c_[static_cast<size_t>(m)] = c_[static_cast<size_t>(m)].y_derivative();
  return r;
}

QSeries QSeries::scaled(const Rational& s) const {
  QSeries r(q_order_);
  for (int m = 0; m <= q_order_; ++m)
    r.c_[static_cast<size_t>(m)] = c_[static_cast<size_t>(m)].scaled(s);
  return r;
}

bool QSeries::integral_in_y() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const YLaurent& y) { return y.integral_in_y(); });
}

bool QSeries::symmetric_y() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const YLaurent& y) { return y.symmetric_y(); });
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.q_order_, b.q_order_));
  for (int m = 0; m <= r.q_order_; ++m)
    r.c_[static_cast<size_t>(m)] =
        a.c_[static_cast<size_t>(m)] + b.c_[static_cast<size_t>(m)];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.q_order_, b.q_order_));
  for (int m = 0; m <= r.q_order_; ++m)
    r.c_[static_cast<size_t>(m)] =
        a.c_[static_cast<size_t>(m)] - b.c_[static_cast<size_t>(m)];
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.q_order_, b.q_order_));
  for (int i = 0; i <= r.q_order_; ++i) {
    if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; i + j <= r.q_order_; ++j)
      r.c_[static_cast<size_t>(i + j)] +=
          a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
  }
  return r;
}

std::string QSeries::str() const {
  std::ostringstream os;
  bool some = false;
  for (int m = 0; m <= q_order_; ++m) {
    if (c_[static_cast<size_t>(m)].is_zero()) continue;
    if (some) os << " + ";
    os << "(" << c_[static_cast<size_t>(m)].str() << ")*q^" << m;
    some = true;
  }
  if (!some) os << "0";
  os << " + O(q^" << q_order_ + 1 << ")";
  return os.str();
}

QSeries binomial_factor_q(int q_order, int q_pow, int u_exp, const Rational& w) {
  if (q_pow < 1) throw std::invalid_argument("binomial_factor_q: q_pow must be >= 1");
  QSeries r(q_order);
  for (int j = 0; j * q_pow <= q_order; ++j) {
    Rational c = Rational::binomial(w, j);
    if (j % 2 != 0) c = -c;
    r.at(j * q_pow).add_u(j * u_exp, c);
  }
  return r;
}

}  // namespace ellgen
