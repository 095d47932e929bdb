#pragma once

// Textual forms of forests, elements, tensors, weight polynomials and
// Laurent series.
//
//   element := '0' | ['+'|'-'] term (('+'|'-') term)*
//   term    := [coeff '*'] forest
//   coeff   := int | '(' poly ')'
//   poly    := ['+'|'-'] mono (('+'|'-') mono)*
//   mono    := int ['*' 'L' ['^' int]] | 'L' ['^' int]
//   forest  := tree (letter tree)*
//   tree    := 'o' | '[' forest ']'
//   letter  := identifier other than o, L, t
//
// Tensors use `forest (x) forest` in place of `forest`. Laurent series are
// sums of `c*t^n` terms with rational c, optionally ending in `+ O(t^k)`.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rbhopf/element.hpp"
#include "rbhopf/laurent.hpp"

namespace rbhopf {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }
  /// The message without the position prefix.
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// When `alphabet` is set, letters outside it are rejected; otherwise any
/// legal identifier is accepted as a letter.
Forest parse_forest(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);
Element parse_element(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);
TensorElement parse_tensor(std::string_view text,
                           const std::optional<Alphabet>& alphabet = std::nullopt);
WeightPoly parse_poly(std::string_view text);
Rational parse_rational(std::string_view text);
LaurentSeries parse_laurent(std::string_view text);

enum class Format { kPlain, kLatex };

std::string render(const Forest& f, Format format = Format::kPlain);
/// Terms in (degree, canonical rendering) order; zero renders as `0`.
std::string render(const Element& a, Format format = Format::kPlain);
/// Terms ordered by left leg, then right leg.
std::string render(const TensorElement& t, Format format = Format::kPlain);

}  // namespace rbhopf
