#include "rbhopf/hopf.hpp"

#include <map>
#include <stdexcept>

namespace rbhopf {

namespace {

// (rDelta (x) id^(k-1)) on a k-leg tensor. Every leg of a reduced coproduct
// has degree >= 2, so the unit never shows up as a leg here.
MultiTensor reduce_leftmost(const MultiTensor& t) {
  MultiTensor out;
  for (const auto& [legs, c] : t) {
    for (const auto& [lr, c2] : reduced_coproduct(legs.front())) {
      std::vector<Forest> next;
      next.reserve(legs.size() + 1);
      next.push_back(lr.first);
      next.push_back(lr.second);
      next.insert(next.end(), legs.begin() + 1, legs.end());
      out.add(next, c * c2);
    }
  }
  return out;
}

}  // namespace

MultiTensor iterated_reduced_coproduct(const Forest& f, std::size_t n) {
  if (f.is_unit()) throw std::invalid_argument("reduced coproduct is undefined on the unit o");
  MultiTensor t({f});
  for (std::size_t i = 0; i < n && !t.is_zero(); ++i) t = reduce_leftmost(t);
  return t;
}

Element multiply_legs(const MultiTensor& t) {
  Element out;
  for (const auto& [legs, c] : t) {
    Element prod = basis(legs.front());
    for (std::size_t i = 1; i < legs.size(); ++i) prod = diamond(prod, basis(legs[i]));
    out.add_scaled(prod, c);
  }
  return out;
}

Element antipode(const Forest& f) {
  if (f.is_unit()) return unit_element();
  Element out = -basis(f);
  MultiTensor level({f});
  std::size_t n = 0;
  while (true) {
    level = reduce_leftmost(level);
    ++n;
    if (level.is_zero()) break;
    if (n + 2 > f.degree()) {
      throw std::logic_error("reduced coproduct failed to vanish at order deg - 1");
    }
    out.add_scaled(multiply_legs(level), WeightPoly(n % 2 == 1 ? 1 : -1));
  }
  return out;
}

Element antipode(const Element& a) {
  Element out;
  for (const auto& [f, c] : a) out.add_scaled(antipode(f), c);
  return out;
}

Element antipode_oracle(const Forest& f) {
  if (f.is_unit()) return unit_element();
  thread_local std::map<Forest, Element> memo;
  if (auto it = memo.find(f); it != memo.end()) return it->second;
  Element out = -basis(f);
  for (const auto& [lr, c] : reduced_coproduct(f)) {
    out.add_scaled(diamond(antipode_oracle(lr.first), basis(lr.second)), -c);
  }
  memo.emplace(f, out);
  return out;
}

Element antipode_oracle(const Element& a) {
  Element out;
  for (const auto& [f, c] : a) out.add_scaled(antipode_oracle(f), c);
  return out;
}

ConvolutionSides convolution_sides(const Forest& f) {
  ConvolutionSides sides;
  for (const auto& [lr, c] : coproduct(f)) {
    sides.left.add_scaled(diamond(antipode(lr.first), basis(lr.second)), c);
    sides.right.add_scaled(diamond(basis(lr.first), antipode(lr.second)), c);
  }
  sides.middle = counit(basis(f)) * unit_element();
  return sides;
}

bool convolve_check(const Forest& f) {
  const auto sides = convolution_sides(f);
  return sides.left == sides.middle && sides.middle == sides.right;
}

}  // namespace rbhopf
