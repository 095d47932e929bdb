#pragma once

#include <string>

#include "rbhopf/syntax.hpp"

namespace testing {

inline rbhopf::Forest F(const std::string& s) { return rbhopf::parse_forest(s); }
inline rbhopf::Element E(const std::string& s) { return rbhopf::parse_element(s); }
inline rbhopf::WeightPoly P(const std::string& s) { return rbhopf::parse_poly(s); }
inline rbhopf::Rational Q(const std::string& s) { return rbhopf::parse_rational(s); }
inline rbhopf::Alphabet letters(std::initializer_list<std::string> xs) {
  return rbhopf::make_alphabet(std::vector<std::string>(xs));
}

}  // namespace testing
