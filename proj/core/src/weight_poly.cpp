#include "rbhopf/weight_poly.hpp"

#include <sstream>

namespace rbhopf {

WeightPoly::WeightPoly(Integer constant) { add_term(0, constant); }

WeightPoly WeightPoly::monomial(Integer coeff, Exponent exponent) {
  WeightPoly p;
  p.add_term(exponent, coeff);
  return p;
}

WeightPoly WeightPoly::lambda(Exponent exponent) { return monomial(1, exponent); }

bool WeightPoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

WeightPoly::Exponent WeightPoly::degree() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

Integer WeightPoly::coefficient(Exponent exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void WeightPoly::add_term(Exponent exponent, const Integer& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

Rational WeightPoly::specialize(const Rational& value) const {
  // Horner over the sparse exponent list, highest first.
  Rational acc = 0;
  Exponent prev = degree();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    for (Exponent e = it->first; e < prev; ++e) acc *= value;
    acc += Rational(it->second);
    prev = it->first;
  }
  for (Exponent e = 0; e < prev; ++e) acc *= value;
  return acc;
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

WeightPoly& WeightPoly::operator*=(const WeightPoly& other) {
  *this = *this * other;
  return *this;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
  WeightPoly out;
  for (const auto& [ea, ca] : a.coeffs_) {
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

WeightPoly operator-(const WeightPoly& a) {
  WeightPoly out = a;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

WeightPoly poly_add(const WeightPoly& a, const WeightPoly& b) { return a + b; }
WeightPoly poly_mul(const WeightPoly& a, const WeightPoly& b) { return a * b; }
Rational specialize(const WeightPoly& a, const Rational& value) { return a.specialize(value); }

namespace {

std::string render(const WeightPoly& p, const char* var, const char* times, bool braces) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& cs = p.coefficients();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    const auto [e, c] = *it;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << times;
    os << var;
    if (e > 1) {
      if (braces) {
        os << "^{" << e << "}";
      } else {
        os << "^" << e;
      }
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const WeightPoly& p) { return render(p, "L", "*", false); }

std::string to_latex(const WeightPoly& p) { return render(p, "\\lambda", "", true); }

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

}  // namespace rbhopf
