#include "rbhopf/forest.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace rbhopf {

namespace detail {

struct ForestNode {
  std::vector<Tree> trees;
  std::vector<Letter> letters;
  std::size_t degree = 0;
  std::size_t depth = 0;
  std::size_t leaves = 0;
  std::size_t decorations = 0;
  std::string text;
};

struct TreeNode {
  std::optional<Forest> body;  // empty for the leaf
  bool leaf = true;
  std::size_t degree = 1;
  std::size_t depth = 0;
  std::size_t leaves = 1;
  std::size_t decorations = 0;
  std::string text = "o";
};

}  // namespace detail

namespace {

const std::shared_ptr<const detail::TreeNode>& leaf_node() {
  static const auto node = std::make_shared<const detail::TreeNode>();
  return node;
}

}  // namespace

bool is_reserved_identifier(std::string_view s) { return s == "o" || s == "L" || s == "t"; }

bool is_letter_identifier(std::string_view s) {
  if (s.empty() || is_reserved_identifier(s)) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c); });
}

Letter::Letter(std::string symbol) : symbol_(std::move(symbol)) {
  if (!is_letter_identifier(symbol_)) {
    throw std::invalid_argument("invalid letter identifier '" + symbol_ + "'");
  }
}

bool contains(const Alphabet& alphabet, const Letter& letter) {
  return std::find(alphabet.begin(), alphabet.end(), letter) != alphabet.end();
}

Alphabet make_alphabet(std::span<const std::string> symbols) {
  Alphabet out;
  for (const auto& s : symbols) {
    Letter l(s);
    if (!contains(out, l)) out.push_back(std::move(l));
  }
  return out;
}

// --- Tree ---------------------------------------------------------------

Tree::Tree() : node_(leaf_node()) {}

Tree Tree::graft(Forest body) {
  auto node = std::make_shared<detail::TreeNode>();
  node->leaf = false;
  node->degree = body.degree() + 1;
  node->depth = body.depth() + 1;
  node->leaves = body.leaf_count();
  node->decorations = body.decoration_count();
  node->text = "[" + body.str() + "]";
  node->body = std::move(body);
  return Tree(std::move(node));
}

bool Tree::is_leaf() const { return node_->leaf; }

const Forest& Tree::body() const {
  if (node_->leaf) throw std::logic_error("the one-vertex tree has no body");
  return *node_->body;
}

std::size_t Tree::degree() const { return node_->degree; }
std::size_t Tree::depth() const { return node_->depth; }
std::size_t Tree::leaf_count() const { return node_->leaves; }
std::size_t Tree::decoration_count() const { return node_->decorations; }
const std::string& Tree::str() const { return node_->text; }

bool operator==(const Tree& a, const Tree& b) {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.str().compare(b.str()) <=> 0;
}

// --- Forest -------------------------------------------------------------

Forest::Forest() {
  static const Forest unit(std::vector<Tree>{Tree()}, {});
  node_ = unit.node_;
}

Forest::Forest(Tree tree) : Forest(std::vector<Tree>{std::move(tree)}, {}) {}

Forest::Forest(std::vector<Tree> trees, std::vector<Letter> letters) {
  if (trees.empty()) throw std::invalid_argument("a forest needs at least one tree");
  if (letters.size() + 1 != trees.size()) {
    throw std::invalid_argument("forest letters must alternate with trees");
  }
  auto node = std::make_shared<detail::ForestNode>();
  std::size_t text_size = 0;
  for (const auto& t : trees) {
    node->degree += t.degree();
    node->depth = std::max(node->depth, t.depth());
    node->leaves += t.leaf_count();
    node->decorations += t.decoration_count();
    text_size += t.str().size();
  }
  node->decorations += letters.size();
  for (const auto& l : letters) text_size += l.symbol().size() + 2;
  node->text.reserve(text_size);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i > 0) {
      node->text += ' ';
      node->text += letters[i - 1].symbol();
      node->text += ' ';
    }
    node->text += trees[i].str();
  }
  node->trees = std::move(trees);
  node->letters = std::move(letters);
  node_ = std::move(node);
}

const std::vector<Tree>& Forest::trees() const { return node_->trees; }
const std::vector<Letter>& Forest::letters() const { return node_->letters; }
const Tree& Forest::tree(std::size_t i) const { return node_->trees.at(i); }
std::size_t Forest::length() const { return node_->trees.size(); }
std::size_t Forest::degree() const { return node_->degree; }
std::size_t Forest::depth() const { return node_->depth; }
std::size_t Forest::leaf_count() const { return node_->leaves; }
std::size_t Forest::decoration_count() const { return node_->decorations; }
bool Forest::is_unit() const { return node_->degree == 1; }
const std::string& Forest::str() const { return node_->text; }

bool operator==(const Forest& a, const Forest& b) {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.str().compare(b.str()) <=> 0;
}

ForestStats stats(const Forest& f) {
  return {f.degree(), f.depth(), f.length(), f.leaf_count(), f.decoration_count()};
}

Forest graft(const Forest& body) { return Forest(Tree::graft(body)); }

Forest concat_with_letter(const Forest& left, const Letter& x, const Forest& right) {
  std::vector<Tree> trees = left.trees();
  trees.insert(trees.end(), right.trees().begin(), right.trees().end());
  std::vector<Letter> letters = left.letters();
  letters.reserve(letters.size() + right.letters().size() + 1);
  letters.push_back(x);
  letters.insert(letters.end(), right.letters().begin(), right.letters().end());
  return Forest(std::move(trees), std::move(letters));
}

Forest concat_with_letter(const Forest& left, const Letter& x, const Forest& right,
                          const Alphabet& alphabet) {
  if (!contains(alphabet, x)) {
    throw std::invalid_argument("letter '" + x.symbol() + "' is not in the alphabet");
  }
  return concat_with_letter(left, x, right);
}

// --- addressing ---------------------------------------------------------

const Forest& forest_at(const Forest& f, std::span<const std::size_t> forest_path) {
  const Forest* cur = &f;
  for (std::size_t i : forest_path) {
    if (i >= cur->length() || cur->tree(i).is_leaf()) {
      throw std::out_of_range("forest path does not resolve");
    }
    cur = &cur->tree(i).body();
  }
  return *cur;
}

const Tree& vertex_at(const Forest& f, const VertexAddr& addr) {
  if (addr.path.empty()) throw std::out_of_range("empty vertex path");
  std::span<const std::size_t> path(addr.path);
  const Forest& parent = forest_at(f, path.first(path.size() - 1));
  if (path.back() >= parent.length()) throw std::out_of_range("vertex path does not resolve");
  return parent.tree(path.back());
}

const Letter& angle_at(const Forest& f, const AngleAddr& addr) {
  const Forest& parent = forest_at(f, addr.forest_path);
  if (addr.slot >= parent.letters().size()) throw std::out_of_range("angle slot does not resolve");
  return parent.letters()[addr.slot];
}

namespace {

void collect_addresses(const Forest& f, std::vector<std::size_t>& prefix,
                       std::vector<VertexAddr>* vertices, std::vector<AngleAddr>* angles) {
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (angles && i > 0) angles->push_back({prefix, i - 1});
    prefix.push_back(i);
    if (vertices) vertices->push_back({prefix});
    if (!f.tree(i).is_leaf()) collect_addresses(f.tree(i).body(), prefix, vertices, angles);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<VertexAddr> vertex_addresses(const Forest& f) {
  std::vector<VertexAddr> out;
  std::vector<std::size_t> prefix;
  collect_addresses(f, prefix, &out, nullptr);
  return out;
}

std::vector<AngleAddr> angle_addresses(const Forest& f) {
  std::vector<AngleAddr> out;
  std::vector<std::size_t> prefix;
  collect_addresses(f, prefix, nullptr, &out);
  return out;
}

// --- corpora ------------------------------------------------------------

namespace {

class Enumerator {
 public:
  explicit Enumerator(const Alphabet& alphabet) : alphabet_(alphabet) {}

  const std::vector<Forest>& forests(std::size_t n) {
    grow(n);
    return forests_[n];
  }

 private:
  // trees_[n] / forests_[n]: all trees / forests of degree exactly n.
  void grow(std::size_t n) {
    if (trees_.empty()) {
      trees_.emplace_back();
      forests_.emplace_back();
    }
    while (trees_.size() <= n) {
      const std::size_t d = trees_.size();
      std::vector<Tree> ts;
      if (d == 1) {
        ts.push_back(Tree::leaf());
      } else {
        for (const auto& body : forests_[d - 1]) ts.push_back(Tree::graft(body));
      }
      std::vector<Forest> fs;
      for (const auto& t : ts) fs.emplace_back(t);
      for (std::size_t k = 1; k < d; ++k) {
        for (const auto& head : trees_[k]) {
          for (const auto& x : alphabet_) {
            for (const auto& tail : forests_[d - k]) {
              fs.push_back(concat_with_letter(Forest(head), x, tail));
            }
          }
        }
      }
      std::sort(fs.begin(), fs.end());
      trees_.push_back(std::move(ts));
      forests_.push_back(std::move(fs));
    }
  }

  const Alphabet& alphabet_;
  std::vector<std::vector<Tree>> trees_;
  std::vector<std::vector<Forest>> forests_;
};

Tree random_tree_exact(std::mt19937_64& rng, std::size_t degree, const Alphabet& alphabet);

Forest random_forest_exact(std::mt19937_64& rng, std::size_t degree, const Alphabet& alphabet) {
  if (degree == 1 || alphabet.empty() || std::bernoulli_distribution(0.5)(rng)) {
    return Forest(random_tree_exact(rng, degree, alphabet));
  }
  std::size_t head = std::uniform_int_distribution<std::size_t>(1, degree - 1)(rng);
  const Letter& x = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
  Tree first = random_tree_exact(rng, head, alphabet);
  return concat_with_letter(Forest(std::move(first)), x,
                            random_forest_exact(rng, degree - head, alphabet));
}

Tree random_tree_exact(std::mt19937_64& rng, std::size_t degree, const Alphabet& alphabet) {
  if (degree == 1) return Tree::leaf();
  return Tree::graft(random_forest_exact(rng, degree - 1, alphabet));
}

}  // namespace

std::vector<Forest> forests_of_degree(std::size_t degree, const Alphabet& alphabet) {
  if (degree == 0) return {};
  Enumerator e(alphabet);
  return e.forests(degree);
}

std::vector<Forest> enumerate_forests(std::size_t max_degree, const Alphabet& alphabet) {
  if (max_degree == 0) throw std::invalid_argument("max_degree must be at least 1");
  Enumerator e(alphabet);
  std::vector<Forest> out;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    const auto& level = e.forests(d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Forest random_forest(std::mt19937_64& rng, std::size_t max_degree, const Alphabet& alphabet) {
  if (max_degree == 0) throw std::invalid_argument("max_degree must be at least 1");
  std::size_t degree = std::uniform_int_distribution<std::size_t>(1, max_degree)(rng);
  return random_forest_exact(rng, degree, alphabet);
}

Forest random_forest(std::uint64_t seed, std::size_t max_degree, const Alphabet& alphabet) {
  std::mt19937_64 rng(seed);
  return random_forest(rng, max_degree, alphabet);
}

}  // namespace rbhopf
