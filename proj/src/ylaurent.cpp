#include "ellgen/ylaurent.hpp"

#include <sstream>

namespace ellgen {

YLaurent YLaurent::monomial_u(int u_exp, const Rational& c) {
  YLaurent r;
  r.add_u(u_exp, c);
  return r;
}

bool YLaurent::is_constant() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rational YLaurent::coeff_u(int u_exp) const {
  auto it = c_.find(u_exp);
  return it == c_.end() ? Rational(0) : it->second;
}

void YLaurent::add_u(int u_exp, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = c_.emplace(u_exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) c_.erase(it);
  }
}

std::optional<std::pair<int, int>> YLaurent::support_u() const {
  if (c_.empty()) return std::nullopt;
  return std::make_pair(c_.begin()->first, c_.rbegin()->first);
}

bool YLaurent::integral_in_y() const {
  for (const auto& [e, c] : c_)
    if (e % 2 != 0) return false;
  return true;
}

YLaurent YLaurent::inverted_y() const {
  YLaurent r;
  for (const auto& [e, c] : c_) r.c_.emplace(-e, c);
  return r;
}

YLaurent YLaurent::y_derivative() const {
  YLaurent r;
  for (const auto& [e, c] : c_)
    if (e != 0) r.c_.emplace(e, c * Rational(e, 2));
  return r;
}

YLaurent YLaurent::scaled(const Rational& s) const {
  YLaurent r;
  if (s.is_zero()) return r;
  for (const auto& [e, c] : c_) r.c_.emplace(e, c * s);
  return r;
}

Rational YLaurent::eval_y1() const {
  Rational sum(0);
  for (const auto& [e, c] : c_) sum += c;
  return sum;
}

YLaurent& YLaurent::operator+=(const YLaurent& o) {
  for (const auto& [e, c] : o.c_) add_u(e, c);
  return *this;
}

YLaurent& YLaurent::operator-=(const YLaurent& o) {
  for (const auto& [e, c] : o.c_) add_u(e, -c);
  return *this;
}

YLaurent operator*(const YLaurent& a, const YLaurent& b) {
  YLaurent r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) r.add_u(ea + eb, ca * cb);
  return r;
}

std::string YLaurent::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) { os << "-"; a = -a; }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.str();
      continue;
    }
    if (a != Rational(1)) os << a.str() << "*";
    os << "y";
    if (e != 2) {
      if (e % 2 == 0) os << "^" << e / 2;
      else os << "^(" << e << "/2)";
    }
  }
  return os.str();
}

}  // namespace ellgen
