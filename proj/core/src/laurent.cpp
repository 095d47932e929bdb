#include "rbhopf/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace rbhopf {

namespace {

using Exponent = LaurentSeries::Exponent;

Exponent saturating_add(Exponent a, Exponent b) {
  if (a == LaurentSeries::kExact || b == LaurentSeries::kExact) return LaurentSeries::kExact;
  return a + b;
}

}  // namespace

LaurentSeries::LaurentSeries(std::map<Exponent, Rational> coeffs, Exponent order)
    : coeffs_(std::move(coeffs)), order_(order) {
  std::erase_if(coeffs_, [&](const auto& kv) { return kv.second == 0 || kv.first > order_; });
}

LaurentSeries LaurentSeries::constant(const Rational& c, Exponent order) {
  return monomial(c, 0, order);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, Exponent exponent, Exponent order) {
  return LaurentSeries({{exponent, c}}, order);
}

Exponent LaurentSeries::min_exp() const {
  if (!coeffs_.empty()) return coeffs_.begin()->first;
  return order_ == kExact ? kExact : order_ + 1;
}

Rational LaurentSeries::coefficient(Exponent e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

bool LaurentSeries::agrees_with(const LaurentSeries& other) const {
  const Exponent limit = std::min(order_, other.order_);
  auto trimmed = [&](const LaurentSeries& s) {
    std::map<Exponent, Rational> out;
    for (const auto& [e, c] : s.coeffs_) {
      if (e <= limit) out.emplace(e, c);
    }
    return out;
  };
  return trimmed(*this) == trimmed(other);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  std::map<Exponent, Rational> out = a.coeffs_;
  for (const auto& [e, c] : b.coeffs_) out[e] += c;
  return LaurentSeries(std::move(out), std::min(a.order_, b.order_));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
  return a + Rational(-1) * b;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const Exponent order = std::min(saturating_add(a.order_, b.min_exp()),
                                  saturating_add(b.order_, a.min_exp()));
  std::map<Exponent, Rational> out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) {
      if (ea + eb > order) break;
      out[ea + eb] += ca * cb;
    }
  }
  return LaurentSeries(std::move(out), order);
}

LaurentSeries operator*(const Rational& c, const LaurentSeries& a) {
  std::map<Exponent, Rational> out;
  for (const auto& [e, v] : a.coeffs_) out.emplace(e, c * v);
  return LaurentSeries(std::move(out), a.order_);
}

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) { return a * b; }

LaurentSeries pole_projection(const LaurentSeries& a) {
  std::map<Exponent, Rational> out;
  for (const auto& [e, c] : a.coefficients()) {
    if (e < 0) out.emplace(e, c);
  }
  const Exponent order = a.order() >= -1 ? LaurentSeries::kExact : a.order();
  return LaurentSeries(std::move(out), order);
}

std::string to_string(const LaurentSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : s.coefficients()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << to_string(mag);
    if (e != 0) os << "*t^" << e;
  }
  if (first) os << "0";
  if (!s.is_exact()) os << " + O(t^" << s.order() + 1 << ")";
  return os.str();
}

}  // namespace rbhopf
