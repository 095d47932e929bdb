#include "rbhopf/models.hpp"

namespace rbhopf {

SpecializedElement specialize(const Element& a, const Rational& weight) {
  SpecializedElement out{weight, {}};
  for (const auto& [f, c] : a) {
    Rational v = c.specialize(weight);
    if (v != 0) out.terms.emplace(f, std::move(v));
  }
  return out;
}

}  // namespace rbhopf
