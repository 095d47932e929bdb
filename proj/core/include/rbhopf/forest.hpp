#pragma once

// Angularly decorated planar rooted trees and forests.
//
// A tree is either the one-vertex tree `o` or the graft [F] of a forest F.
// A forest is an alternating word T1 x1 T2 ... x_{k-1} Tk of trees and
// letters; letters decorate the gaps between adjacent leaves, so a forest
// with n leaves always carries n-1 letters.
//
// Both types are immutable handles onto shared nodes, so copies are cheap.
// Every node caches its canonical rendering, which doubles as the identity
// of the value: two forests are equal iff they render identically.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rbhopf {

/// True for `o`, `L` and `t`, which the textual grammar reserves.
bool is_reserved_identifier(std::string_view s);
/// `[A-Za-z_][A-Za-z0-9_]*` and not reserved.
bool is_letter_identifier(std::string_view s);

class Letter {
 public:
  /// Throws std::invalid_argument if `symbol` is not a legal letter identifier.
  explicit Letter(std::string symbol);

  [[nodiscard]] const std::string& symbol() const { return symbol_; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  std::string symbol_;
};

using Alphabet = std::vector<Letter>;

bool contains(const Alphabet& alphabet, const Letter& letter);
/// Builds an alphabet from identifiers, dropping duplicates but keeping order.
Alphabet make_alphabet(std::span<const std::string> symbols);

class Tree;
class Forest;

namespace detail {
struct TreeNode;
struct ForestNode;
}  // namespace detail

class Forest {
 public:
  /// The one-vertex forest `o`.
  Forest();
  explicit Forest(Tree tree);
  /// Throws std::invalid_argument unless letters.size() + 1 == trees.size().
  Forest(std::vector<Tree> trees, std::vector<Letter> letters);

  [[nodiscard]] const std::vector<Tree>& trees() const;
  [[nodiscard]] const std::vector<Letter>& letters() const;
  [[nodiscard]] const Tree& tree(std::size_t i) const;

  /// Number of tree factors.
  [[nodiscard]] std::size_t length() const;
  /// Number of vertices.
  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] std::size_t depth() const;
  [[nodiscard]] std::size_t leaf_count() const;
  /// Letters at every level, not only between the tree factors.
  [[nodiscard]] std::size_t decoration_count() const;

  /// True iff this is the unit forest `o`.
  [[nodiscard]] bool is_unit() const;
  /// Canonical plain-text rendering, e.g. `[o x o] y o`.
  [[nodiscard]] const std::string& str() const;

  friend bool operator==(const Forest& a, const Forest& b);
  /// Orders by degree, then by canonical rendering.
  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b);

 private:
  std::shared_ptr<const detail::ForestNode> node_;
};

class Tree {
 public:
  /// The one-vertex tree `o`.
  Tree();
  static Tree leaf() { return Tree(); }
  /// B+(body): a new root with the trees of `body` as children.
  static Tree graft(Forest body);

  [[nodiscard]] bool is_leaf() const;
  /// Precondition: !is_leaf().
  [[nodiscard]] const Forest& body() const;

  [[nodiscard]] std::size_t degree() const;
  [[nodiscard]] std::size_t depth() const;
  [[nodiscard]] std::size_t leaf_count() const;
  [[nodiscard]] std::size_t decoration_count() const;
  [[nodiscard]] const std::string& str() const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);

 private:
  explicit Tree(std::shared_ptr<const detail::TreeNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TreeNode> node_;
};

struct ForestStats {
  std::size_t degree = 0;
  std::size_t depth = 0;
  std::size_t length = 0;
  std::size_t leaf_count = 0;
  std::size_t decoration_count = 0;

  friend bool operator==(const ForestStats&, const ForestStats&) = default;
};

ForestStats stats(const Forest& f);

/// Grafts a forest onto a new root and returns it as a one-tree forest.
Forest graft(const Forest& body);

/// The forest `left x right`.
Forest concat_with_letter(const Forest& left, const Letter& x, const Forest& right);
/// As above; throws std::invalid_argument if `x` is not in `alphabet`.
Forest concat_with_letter(const Forest& left, const Letter& x, const Forest& right,
                          const Alphabet& alphabet);

// --- addressing ---------------------------------------------------------

/// Path of tree-slot indices: {i} is the root of top-level factor i,
/// {i, j} the root of the j-th tree in the body of factor i, and so on.
struct VertexAddr {
  std::vector<std::size_t> path;
  friend auto operator<=>(const VertexAddr&, const VertexAddr&) = default;
  friend bool operator==(const VertexAddr&, const VertexAddr&) = default;
};

/// Angle `slot` (between trees slot and slot+1) of the forest reached by
/// `forest_path`; the empty path names the top-level forest.
struct AngleAddr {
  std::vector<std::size_t> forest_path;
  std::size_t slot = 0;
  friend auto operator<=>(const AngleAddr&, const AngleAddr&) = default;
  friend bool operator==(const AngleAddr&, const AngleAddr&) = default;
};

/// Throws std::out_of_range for an address that does not resolve.
const Tree& vertex_at(const Forest& f, const VertexAddr& addr);
const Forest& forest_at(const Forest& f, std::span<const std::size_t> forest_path);
const Letter& angle_at(const Forest& f, const AngleAddr& addr);

std::vector<VertexAddr> vertex_addresses(const Forest& f);
std::vector<AngleAddr> angle_addresses(const Forest& f);

// --- corpora ------------------------------------------------------------

/// Every forest of degree <= max_degree over `alphabet`, each once, sorted
/// by (degree, canonical rendering). Throws std::invalid_argument if
/// max_degree == 0.
std::vector<Forest> enumerate_forests(std::size_t max_degree, const Alphabet& alphabet);

/// Forests of exactly the given degree, in the same order.
std::vector<Forest> forests_of_degree(std::size_t degree, const Alphabet& alphabet);

/// Deterministic in (seed, max_degree, alphabet).
Forest random_forest(std::uint64_t seed, std::size_t max_degree, const Alphabet& alphabet);
Forest random_forest(std::mt19937_64& rng, std::size_t max_degree, const Alphabet& alphabet);

}  // namespace rbhopf

template <>
struct std::hash<rbhopf::Forest> {
  std::size_t operator()(const rbhopf::Forest& f) const noexcept {
    return std::hash<std::string>{}(f.str());
  }
};
