#pragma once

// Finite linear combinations with WeightPoly coefficients.
//
// Element is the carrier of the free Rota-Baxter algebra (combinations of
// forests); TensorElement and MultiTensor hold combinations of pairs and of
// words of forests.

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "rbhopf/forest.hpp"
#include "rbhopf/weight_poly.hpp"

namespace rbhopf {

template <typename Key>
class Combination {
 public:
  using key_type = Key;
  using Terms = std::map<Key, WeightPoly>;

  Combination() = default;
  explicit Combination(Key key, WeightPoly coeff = WeightPoly(1)) {
    add(std::move(key), coeff);
  }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] auto begin() const { return terms_.begin(); }
  [[nodiscard]] auto end() const { return terms_.end(); }

  [[nodiscard]] WeightPoly coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? WeightPoly() : it->second;
  }

  void add(const Key& key, const WeightPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += coeff * other
  void add_scaled(const Combination& other, const WeightPoly& coeff) {
    if (coeff.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, c * coeff);
  }

  Combination& operator+=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  Combination& operator*=(const WeightPoly& coeff) {
    if (coeff.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= coeff;
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator-(Combination a) { return a *= WeightPoly(-1); }
  friend Combination operator*(const WeightPoly& c, Combination a) { return a *= c; }
  friend Combination operator*(Combination a, const WeightPoly& c) { return a *= c; }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Terms terms_;  // never holds a zero coefficient
};

using Element = Combination<Forest>;
using TensorElement = Combination<std::pair<Forest, Forest>>;
using MultiTensor = Combination<std::vector<Forest>>;

/// The unit `o` with coefficient 1.
Element unit_element();
Element basis(const Forest& f);

/// Sum of coeff_i * part_i.
Element linear_combine(std::span<const std::pair<WeightPoly, Element>> parts);

/// Largest degree in the support; 0 for the zero element.
std::size_t max_degree(const Element& a);

/// Bilinear a (x) b.
TensorElement tensor(const Element& a, const Element& b);

}  // namespace rbhopf
