#pragma once

// Exact polynomials in the formal weight L (lambda) with big-integer
// coefficients. This is the coefficient ring of every linear combination in
// the library.

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbhopf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class WeightPoly {
 public:
  using Exponent = std::uint32_t;
  using Coefficients = std::map<Exponent, Integer>;

  WeightPoly() = default;
  WeightPoly(Integer constant);  // NOLINT(google-explicit-constructor)
  WeightPoly(int constant) : WeightPoly(Integer(constant)) {}  // NOLINT

  static WeightPoly monomial(Integer coeff, Exponent exponent);
  /// The weight itself raised to `exponent`.
  static WeightPoly lambda(Exponent exponent = 1);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Highest exponent with a nonzero coefficient; 0 for the zero polynomial.
  [[nodiscard]] Exponent degree() const;
  [[nodiscard]] Integer coefficient(Exponent exponent) const;
  [[nodiscard]] const Coefficients& coefficients() const { return coeffs_; }

  /// Evaluates at L = value.
  [[nodiscard]] Rational specialize(const Rational& value) const;

  WeightPoly& operator+=(const WeightPoly& other);
  WeightPoly& operator-=(const WeightPoly& other);
  WeightPoly& operator*=(const WeightPoly& other);

  friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
  friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);
  friend WeightPoly operator-(const WeightPoly& a);

  friend bool operator==(const WeightPoly&, const WeightPoly&) = default;

 private:
  void add_term(Exponent exponent, const Integer& coeff);

  Coefficients coeffs_;  // never holds a zero
};

WeightPoly poly_add(const WeightPoly& a, const WeightPoly& b);
WeightPoly poly_mul(const WeightPoly& a, const WeightPoly& b);
Rational specialize(const WeightPoly& a, const Rational& value);

/// Renders as `2*L^2 - 3*L + 1`, highest power first; zero renders as `0`.
std::string to_string(const WeightPoly& p);
std::string to_latex(const WeightPoly& p);

std::string to_string(const Rational& r);

}  // namespace rbhopf
