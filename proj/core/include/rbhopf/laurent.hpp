#pragma once

// Truncated Laurent series with exact rational coefficients.
//
// A series knows its coefficients for every exponent <= order(); anything
// above is unknown. Exact series (finite Laurent polynomials) carry the
// order kExact. Products and sums shrink the order so that only coefficients
// that are actually determined by the inputs are ever stored.

#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "rbhopf/weight_poly.hpp"

namespace rbhopf {

class LaurentSeries {
 public:
  using Exponent = std::int64_t;
  static constexpr Exponent kExact = std::numeric_limits<Exponent>::max();

  /// The exact zero series.
  LaurentSeries() = default;
  /// Drops zero coefficients and every exponent above `order`.
  explicit LaurentSeries(std::map<Exponent, Rational> coeffs, Exponent order = kExact);

  static LaurentSeries constant(const Rational& c, Exponent order = kExact);
  static LaurentSeries monomial(const Rational& c, Exponent exponent, Exponent order = kExact);

  [[nodiscard]] Exponent order() const { return order_; }
  [[nodiscard]] bool is_exact() const { return order_ == kExact; }
  /// Lowest stored exponent; order() + 1 when nothing is stored.
  [[nodiscard]] Exponent min_exp() const;
  [[nodiscard]] const std::map<Exponent, Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coefficient(Exponent e) const;

  /// Same coefficients on every exponent both series determine.
  [[nodiscard]] bool agrees_with(const LaurentSeries& other) const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const Rational& c, const LaurentSeries& a);

  friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

 private:
  std::map<Exponent, Rational> coeffs_;
  Exponent order_ = kExact;
};

/// Cauchy product; order(a*b) = min(order(a) + min_exp(b), order(b) + min_exp(a)).
LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b);

/// Keeps exactly the strictly negative powers. The result is exact whenever
/// the input determines every negative coefficient (order >= -1).
LaurentSeries pole_projection(const LaurentSeries& a);

/// `1*t^-1 + 2 + 1*t^1`; truncated series end with `+ O(t^k)`, k = order + 1.
std::string to_string(const LaurentSeries& s);

}  // namespace rbhopf
