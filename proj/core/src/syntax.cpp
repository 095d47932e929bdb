#include "rbhopf/syntax.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace rbhopf {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok { kInt, kIdent, kLBracket, kRBracket, kLParen, kRParen, kPlus, kMinus, kStar, kCaret, kSlash, kTensor, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line;
    const std::size_t cl = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::kInt, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::kIdent, std::string(s.substr(i, j - i)), l, cl});
      advance(j - i);
      continue;
    }
    if (s.substr(i, 3) == "(x)") {
      out.push_back({Tok::kTensor, "(x)", l, cl});
      advance(3);
      continue;
    }
    Tok kind;
    switch (c) {
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '^': kind = Tok::kCaret; break;
      case '/': kind = Tok::kSlash; break;
      default:
        throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::optional<Alphabet>& alphabet)
      : tokens_(tokenize(text)), alphabet_(alphabet) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view name) const { return at(Tok::kIdent) && peek().text == name; }

  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(t.line, t.column, message);
  }

  Token expect(Tok kind, const std::string& what) {
    if (!at(kind)) fail(peek(), "expected " + what + ", found " + describe(peek()));
    return take();
  }

  void expect_end() {
    if (!at(Tok::kEnd)) fail(peek(), "unexpected " + describe(peek()) + " after complete expression");
  }

  // --- forests ---

  Tree tree() {
    if (at_ident("o")) {
      take();
      return Tree::leaf();
    }
    if (at(Tok::kLBracket)) {
      const Token open = take();
      Forest body = forest();
      if (!at(Tok::kRBracket)) {
        fail(peek(), "expected ']' to close '[' at " + std::to_string(open.line) + ":" +
                         std::to_string(open.column) + ", found " + describe(peek()));
      }
      take();
      return Tree::graft(std::move(body));
    }
    fail(peek(), "expected a tree ('o' or '['), found " + describe(peek()));
  }

  Forest forest() {
    std::vector<Tree> trees{tree()};
    std::vector<Letter> letters;
    while (at(Tok::kIdent) && !at_ident("o")) {
      const Token t = take();
      if (is_reserved_identifier(t.text)) fail(t, "reserved identifier '" + t.text + "' used as a letter");
      Letter x(t.text);
      if (alphabet_ && !contains(*alphabet_, x)) fail(t, "unknown letter '" + t.text + "'");
      letters.push_back(std::move(x));
      trees.push_back(tree());
    }
    if (at_ident("o") || at(Tok::kLBracket)) fail(peek(), "expected a letter between trees");
    return Forest(std::move(trees), std::move(letters));
  }

  // --- numbers and polynomials ---

  Integer integer() {
    const Token t = expect(Tok::kInt, "an integer");
    return Integer(t.text);
  }

  WeightPoly monomial() {
    Integer c = 1;
    bool has_int = false;
    if (at(Tok::kInt)) {
      c = integer();
      has_int = true;
      if (!at(Tok::kStar)) return WeightPoly(c);
      take();
    }
    if (!at_ident("L")) {
      fail(peek(), std::string("expected ") + (has_int ? "'L'" : "an integer or 'L'") + ", found " +
                       describe(peek()));
    }
    take();
    WeightPoly::Exponent e = 1;
    if (at(Tok::kCaret)) {
      take();
      const Token t = expect(Tok::kInt, "an exponent");
      e = static_cast<WeightPoly::Exponent>(std::stoul(t.text));
    }
    return WeightPoly::monomial(c, e);
  }

  WeightPoly poly() {
    bool negate = false;
    if (at(Tok::kPlus) || at(Tok::kMinus)) negate = take().kind == Tok::kMinus;
    WeightPoly out = negate ? -monomial() : monomial();
    while (at(Tok::kPlus) || at(Tok::kMinus)) {
      const bool minus = take().kind == Tok::kMinus;
      WeightPoly m = monomial();
      out += minus ? -m : m;
    }
    return out;
  }

  Rational rational() {
    bool negate = false;
    if (at(Tok::kPlus) || at(Tok::kMinus)) negate = take().kind == Tok::kMinus;
    Rational r(integer());
    if (at(Tok::kSlash)) {
      take();
      const Token t = peek();
      Integer d = integer();
      if (d == 0) fail(t, "zero denominator");
      r /= Rational(d);
    }
    return negate ? Rational(-r) : r;
  }

  // --- elements and tensors ---

  WeightPoly coefficient_prefix() {
    if (at(Tok::kInt)) {
      WeightPoly c(integer());
      expect(Tok::kStar, "'*' after coefficient");
      return c;
    }
    if (at(Tok::kLParen)) {
      take();
      WeightPoly c = poly();
      expect(Tok::kRParen, "')'");
      expect(Tok::kStar, "'*' after coefficient");
      return c;
    }
    return WeightPoly(1);
  }

  bool zero_literal() {
    if (at(Tok::kInt) && peek().text.find_first_not_of('0') == std::string::npos &&
        peek(1).kind == Tok::kEnd) {
      take();
      return true;
    }
    return false;
  }

  template <typename Combo, typename TermFn>
  Combo sum(TermFn term_fn) {
    Combo out;
    if (zero_literal()) return out;
    bool negate = false;
    if (at(Tok::kPlus) || at(Tok::kMinus)) negate = take().kind == Tok::kMinus;
    while (true) {
      WeightPoly c = coefficient_prefix();
      auto key = term_fn();
      out.add(key, negate ? -c : c);
      if (!(at(Tok::kPlus) || at(Tok::kMinus))) break;
      negate = take().kind == Tok::kMinus;
    }
    expect_end();
    return out;
  }

  Element element() {
    return sum<Element>([&] { return forest(); });
  }

  TensorElement tensor_element() {
    return sum<TensorElement>([&] {
      Forest l = forest();
      expect(Tok::kTensor, "'(x)'");
      Forest r = forest();
      return std::pair<Forest, Forest>(std::move(l), std::move(r));
    });
  }

  // --- Laurent series ---

  LaurentSeries::Exponent t_power() {
    take();  // t
    if (!at(Tok::kCaret)) return 1;
    take();
    bool negate = false;
    if (at(Tok::kMinus)) {
      take();
      negate = true;
    }
    const Token t = expect(Tok::kInt, "an exponent");
    const auto e = static_cast<LaurentSeries::Exponent>(std::stoll(t.text));
    return negate ? -e : e;
  }

  LaurentSeries laurent() {
    std::map<LaurentSeries::Exponent, Rational> coeffs;
    LaurentSeries::Exponent order = LaurentSeries::kExact;
    bool negate = false;
    if (at(Tok::kPlus) || at(Tok::kMinus)) negate = take().kind == Tok::kMinus;
    while (true) {
      if (at_ident("O")) {
        if (negate) fail(peek(), "the order term cannot be negated");
        take();
        expect(Tok::kLParen, "'('");
        if (!at_ident("t")) fail(peek(), "expected 't'");
        order = t_power() - 1;
        expect(Tok::kRParen, "')'");
        break;
      }
      Rational c = 1;
      LaurentSeries::Exponent e = 0;
      if (at_ident("t")) {
        e = t_power();
      } else {
        Rational mag(integer());
        if (at(Tok::kSlash)) {
          take();
          const Token t = peek();
          Integer d = integer();
          if (d == 0) fail(t, "zero denominator");
          mag /= Rational(d);
        }
        c = mag;
        if (at(Tok::kStar)) {
          take();
          if (!at_ident("t")) fail(peek(), "expected 't', found " + describe(peek()));
          e = t_power();
        }
      }
      coeffs[e] += negate ? Rational(-c) : c;
      if (!(at(Tok::kPlus) || at(Tok::kMinus))) break;
      negate = take().kind == Tok::kMinus;
    }
    expect_end();
    return LaurentSeries(std::move(coeffs), order);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const std::optional<Alphabet>& alphabet_;
};

// --- rendering ---------------------------------------------------------------

void render_forest(const Forest& f, Format format, std::ostringstream& os);

void render_tree(const Tree& t, Format format, std::ostringstream& os) {
  if (t.is_leaf()) {
    os << (format == Format::kPlain ? "o" : "\\bullet");
    return;
  }
  os << (format == Format::kPlain ? "[" : "\\lfloor ");
  render_forest(t.body(), format, os);
  os << (format == Format::kPlain ? "]" : " \\rfloor");
}

void render_forest(const Forest& f, Format format, std::ostringstream& os) {
  if (format == Format::kPlain) {
    os << f.str();
    return;
  }
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (i > 0) os << " " << f.letters()[i - 1].symbol() << " ";
    render_tree(f.tree(i), format, os);
  }
}

// Writes the sign separator and the coefficient prefix of one term.
void render_coefficient(const WeightPoly& c, bool first, Format format, std::ostringstream& os) {
  const bool negative = c.coefficients().rbegin()->second < 0;
  const WeightPoly mag = negative ? -c : c;
  if (first) {
    if (negative) os << "- ";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (mag == WeightPoly(1)) return;
  if (format == Format::kPlain) {
    if (mag.is_constant()) {
      os << to_string(mag) << "*";
    } else {
      os << "(" << to_string(mag) << ")*";
    }
  } else {
    if (mag.is_constant()) {
      os << to_latex(mag) << " ";
    } else {
      os << "(" << to_latex(mag) << ") ";
    }
  }
}

}  // namespace

Forest parse_forest(std::string_view text, const std::optional<Alphabet>& alphabet) {
  Parser p(text, alphabet);
  Forest f = p.forest();
  p.expect_end();
  return f;
}

Element parse_element(std::string_view text, const std::optional<Alphabet>& alphabet) {
  return Parser(text, alphabet).element();
}

TensorElement parse_tensor(std::string_view text, const std::optional<Alphabet>& alphabet) {
  return Parser(text, alphabet).tensor_element();
}

WeightPoly parse_poly(std::string_view text) {
  Parser p(text, std::nullopt);
  WeightPoly out = p.poly();
  p.expect_end();
  return out;
}

Rational parse_rational(std::string_view text) {
  Parser p(text, std::nullopt);
  Rational out = p.rational();
  p.expect_end();
  return out;
}

LaurentSeries parse_laurent(std::string_view text) {
  return Parser(text, std::nullopt).laurent();
}

std::string render(const Forest& f, Format format) {
  std::ostringstream os;
  render_forest(f, format, os);
  return os.str();
}

std::string render(const Element& a, Format format) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [f, c] : a) {
    render_coefficient(c, first, format, os);
    render_forest(f, format, os);
    first = false;
  }
  return os.str();
}

std::string render(const TensorElement& t, Format format) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const char* otimes = format == Format::kPlain ? " (x) " : " \\otimes ";
  for (const auto& [lr, c] : t) {
    render_coefficient(c, first, format, os);
    render_forest(lr.first, format, os);
    os << otimes;
    render_forest(lr.second, format, os);
    first = false;
  }
  return os.str();
}

}  // namespace rbhopf
