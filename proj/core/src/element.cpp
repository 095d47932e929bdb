#include "rbhopf/element.hpp"

#include <algorithm>

namespace rbhopf {

Element unit_element() { return Element(Forest()); }

Element basis(const Forest& f) { return Element(f); }

Element linear_combine(std::span<const std::pair<WeightPoly, Element>> parts) {
  Element out;
  for (const auto& [coeff, part] : parts) out.add_scaled(part, coeff);
  return out;
}

std::size_t max_degree(const Element& a) {
  std::size_t d = 0;
  for (const auto& [f, c] : a) d = std::max(d, f.degree());
  return d;
}

TensorElement tensor(const Element& a, const Element& b) {
  TensorElement out;
  for (const auto& [fa, ca] : a) {
    for (const auto& [fb, cb] : b) out.add({fa, fb}, ca * cb);
  }
  return out;
}

}  // namespace rbhopf
