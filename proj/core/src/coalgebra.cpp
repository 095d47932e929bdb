#include "rbhopf/coalgebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rbhopf {

namespace {

bool is_prefix(const std::vector<std::size_t>& prefix, const std::vector<std::size_t>& path) {
  return prefix.size() <= path.size() && std::equal(prefix.begin(), prefix.end(), path.begin());
}

// Index of the first leaf of the tree at `vertex_path`, counting leaves of
// the whole forest left to right from 0.
std::size_t first_leaf(const Forest& f, const std::vector<std::size_t>& vertex_path) {
  std::size_t offset = 0;
  const Forest* cur = &f;
  for (std::size_t depth = 0; depth < vertex_path.size(); ++depth) {
    const std::size_t slot = vertex_path[depth];
    for (std::size_t i = 0; i < slot; ++i) offset += cur->tree(i).leaf_count();
    if (depth + 1 < vertex_path.size()) cur = &cur->tree(slot).body();
  }
  return offset;
}

// Sort key placing picked pieces in reading order: subtree rooted at a
// vertex sits at 2 * (its first leaf); an angle sits just before the first
// leaf of the tree to its right.
std::size_t vertex_position(const Forest& f, const VertexAddr& v) {
  return 2 * first_leaf(f, v.path);
}

std::size_t angle_position(const Forest& f, const AngleAddr& a) {
  std::vector<std::size_t> right = a.forest_path;
  right.push_back(a.slot + 1);
  return 2 * first_leaf(f, right) - 1;
}

struct Piece {
  std::size_t position;
  std::optional<VertexAddr> vertex;
  std::optional<AngleAddr> angle;
};

std::vector<Piece> ordered_pieces(const Forest& f, const SubforestMarking& h) {
  std::vector<Piece> pieces;
  for (const auto& v : h.vertices) pieces.push_back({vertex_position(f, v), v, std::nullopt});
  for (const auto& a : h.angles) pieces.push_back({angle_position(f, a), std::nullopt, a});
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& x, const Piece& y) { return x.position < y.position; });
  return pieces;
}

void require_valid(const Forest& f, const SubforestMarking& h) {
  if (auto err = marking_error(f, h)) throw std::invalid_argument("invalid subforest marking: " + *err);
}

MarkedTree marked_leaf() { return MarkedTree{}; }

MarkedTree marked_graft(MarkedWord body) {
  return MarkedTree{std::make_shared<const MarkedWord>(std::move(body))};
}

MarkedTree to_marked_tree(const Tree& t) {
  if (t.is_leaf()) return marked_leaf();
  return marked_graft(to_marked_word(t.body()));
}

void render(const MarkedWord& w, std::ostringstream& os);

void render(const MarkedTree& t, std::ostringstream& os) {
  if (t.is_leaf()) {
    os << 'o';
    return;
  }
  os << '[';
  render(*t.body, os);
  os << ']';
}

void render(const MarkedWord& w, std::ostringstream& os) {
  for (std::size_t i = 0; i < w.trees.size(); ++i) {
    if (i > 0) {
      const auto& sep = w.separators[i - 1];
      os << ' ' << (sep.is_join() ? std::string("⊔") : sep.letter->symbol()) << ' ';
    }
    render(w.trees[i], os);
  }
}

Element evaluate_tree(const MarkedTree& t, const ProductRules& rules) {
  if (t.is_leaf()) return unit_element();
  return bplus(evaluate_marked_word(*t.body, rules));
}

// Bilinear juxtaposition `a x b`.
Element concat(const Element& a, const Letter& x, const Element& b) {
  Element out;
  for (const auto& [fa, ca] : a) {
    for (const auto& [fb, cb] : b) out.add(concat_with_letter(fa, x, fb), ca * cb);
  }
  return out;
}

MarkedWord quotient_word(const Forest& f, std::vector<std::size_t>& prefix,
                         const std::set<std::vector<std::size_t>>& picked_vertices,
                         const std::set<AngleAddr>& picked_angles) {
  MarkedWord w;
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (i > 0) {
      if (picked_angles.count(AngleAddr{prefix, i - 1})) {
        w.separators.push_back(Separator::join());
      } else {
        w.separators.push_back(Separator{f.letters()[i - 1]});
      }
    }
    prefix.push_back(i);
    const Tree& t = f.tree(i);
    if (t.is_leaf()) {
      w.trees.push_back(marked_leaf());
    } else if (picked_vertices.count(prefix)) {
      // An extracted subtree leaves its leaves behind, joined.
      w.trees.push_back(marked_leaf());
      for (std::size_t k = 1; k < t.leaf_count(); ++k) {
        w.separators.push_back(Separator::join());
        w.trees.push_back(marked_leaf());
      }
    } else {
      w.trees.push_back(marked_graft(quotient_word(t.body(), prefix, picked_vertices, picked_angles)));
    }
    prefix.pop_back();
  }
  return w;
}

void enumerate_into(const Forest& f, std::vector<std::size_t>& prefix,
                    std::vector<SubforestMarking>& out) {
  out.assign(1, SubforestMarking{});
  for (std::size_t i = 0; i < f.length(); ++i) {
    // Choices for the letter left of tree i: keep it, or pick it.
    if (i > 0) {
      const std::size_t n = out.size();
      for (std::size_t k = 0; k < n; ++k) {
        SubforestMarking m = out[k];
        m.angles.push_back({prefix, i - 1});
        out.push_back(std::move(m));
      }
    }
    const Tree& t = f.tree(i);
    if (t.is_leaf()) continue;
    prefix.push_back(i);
    std::vector<SubforestMarking> inner;
    enumerate_into(t.body(), prefix, inner);
    SubforestMarking whole;
    whole.vertices.push_back({prefix});
    inner.push_back(std::move(whole));
    prefix.pop_back();

    std::vector<SubforestMarking> combined;
    combined.reserve(out.size() * inner.size());
    for (const auto& inner_marking : inner) {
      for (const auto& outer : out) {
        SubforestMarking m = outer;
        m.vertices.insert(m.vertices.end(), inner_marking.vertices.begin(), inner_marking.vertices.end());
        m.angles.insert(m.angles.end(), inner_marking.angles.begin(), inner_marking.angles.end());
        combined.push_back(std::move(m));
      }
    }
    out = std::move(combined);
  }
}

TensorElement tree_coproduct_factorwise(const Tree& t, const ProductRules& rules);

}  // namespace

std::optional<std::string> marking_error(const Forest& f, const SubforestMarking& h) {
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    const auto& v = h.vertices[i];
    try {
      if (vertex_at(f, v).is_leaf()) return "picked vertex is a leaf";
    } catch (const std::out_of_range&) {
      return "vertex address does not resolve";
    }
    for (std::size_t j = 0; j < h.vertices.size(); ++j) {
      if (i != j && is_prefix(v.path, h.vertices[j].path)) {
        return v.path == h.vertices[j].path ? "vertex picked twice" : "picked subtrees overlap";
      }
    }
  }
  for (std::size_t i = 0; i < h.angles.size(); ++i) {
    const auto& a = h.angles[i];
    try {
      angle_at(f, a);
    } catch (const std::out_of_range&) {
      return "angle address does not resolve";
    }
    for (std::size_t j = i + 1; j < h.angles.size(); ++j) {
      if (a == h.angles[j]) return "angle picked twice";
    }
    for (const auto& v : h.vertices) {
      if (is_prefix(v.path, a.forest_path)) return "picked angle lies inside a picked subtree";
    }
  }
  return std::nullopt;
}

std::vector<SubforestMarking> enumerate_subforests(const Forest& f) {
  std::vector<SubforestMarking> out;
  std::vector<std::size_t> prefix;
  enumerate_into(f, prefix, out);
  for (auto& m : out) {
    std::sort(m.vertices.begin(), m.vertices.end());
    std::sort(m.angles.begin(), m.angles.end());
  }
  return out;
}

std::vector<std::string> marking_components(const Forest& f, const SubforestMarking& h) {
  require_valid(f, h);
  std::vector<std::string> out;
  for (const auto& p : ordered_pieces(f, h)) {
    out.push_back(p.vertex ? vertex_at(f, *p.vertex).str() : angle_at(f, *p.angle).symbol());
  }
  return out;
}

MarkedWord to_marked_word(const Forest& f) {
  MarkedWord w;
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (i > 0) w.separators.push_back(Separator{f.letters()[i - 1]});
    w.trees.push_back(to_marked_tree(f.tree(i)));
  }
  return w;
}

std::string to_string(const MarkedWord& w) {
  std::ostringstream os;
  render(w, os);
  return os.str();
}

Element evaluate_marked_word(const MarkedWord& w, const ProductRules& rules) {
  if (w.trees.empty() || w.separators.size() + 1 != w.trees.size()) {
    throw std::invalid_argument("marked word must alternate trees and separators");
  }
  Element acc = evaluate_tree(w.trees.front(), rules);
  for (std::size_t i = 0; i < w.separators.size(); ++i) {
    Element next = evaluate_tree(w.trees[i + 1], rules);
    const auto& sep = w.separators[i];
    acc = sep.is_join() ? diamond(acc, next, rules) : concat(acc, *sep.letter, next);
  }
  return acc;
}

MarkedWord closure(const Forest& f, const SubforestMarking& h) {
  require_valid(f, h);
  MarkedWord w;
  enum class Last { kNothing, kTree, kLetter } last = Last::kNothing;
  for (const auto& piece : ordered_pieces(f, h)) {
    if (piece.vertex) {
      if (last == Last::kTree) w.separators.push_back(Separator::join());
      w.trees.push_back(to_marked_tree(vertex_at(f, *piece.vertex)));
      last = Last::kTree;
    } else {
      if (last != Last::kTree) w.trees.push_back(marked_leaf());
      w.separators.push_back(Separator{angle_at(f, *piece.angle)});
      last = Last::kLetter;
    }
  }
  if (last != Last::kTree) w.trees.push_back(marked_leaf());
  return w;
}

MarkedWord quotient(const Forest& f, const SubforestMarking& h) {
  require_valid(f, h);
  std::set<std::vector<std::size_t>> picked_vertices;
  for (const auto& v : h.vertices) picked_vertices.insert(v.path);
  std::set<AngleAddr> picked_angles(h.angles.begin(), h.angles.end());
  std::vector<std::size_t> prefix;
  return quotient_word(f, prefix, picked_vertices, picked_angles);
}

// --- coproduct ---------------------------------------------------------------

namespace {

TensorElement coproduct_uncached(const Forest& f, const CoproductOptions& options) {
  TensorElement out;
  for (const auto& h : enumerate_subforests(f)) {
    if (h.empty() && !options.include_empty_subforest) continue;
    out += tensor(evaluate_marked_word(closure(f, h), options.product),
                  evaluate_marked_word(quotient(f, h), options.product));
  }
  return out;
}

constexpr std::size_t kCoproductCacheLimit = 1u << 15;

}  // namespace

TensorElement coproduct(const Forest& f, const CoproductOptions& options) {
  const bool standard = options.include_empty_subforest && options.product.weight_term;
  if (!standard) return coproduct_uncached(f, options);
  thread_local std::map<Forest, TensorElement> cache;
  if (auto it = cache.find(f); it != cache.end()) return it->second;
  TensorElement out = coproduct_uncached(f, options);
  if (cache.size() >= kCoproductCacheLimit) cache.clear();
  cache.emplace(f, out);
  return out;
}

TensorElement coproduct(const Element& a, const CoproductOptions& options) {
  TensorElement out;
  for (const auto& [f, c] : a) out.add_scaled(coproduct(f, options), c);
  return out;
}

namespace {

TensorElement tree_coproduct_factorwise(const Tree& t, const ProductRules& rules) {
  const Forest whole(t);
  if (t.is_leaf()) return TensorElement({whole, whole});
  TensorElement out({whole, Forest()});
  out += graft_right(coproduct_factorwise(t.body(), rules));
  return out;
}

}  // namespace

TensorElement coproduct_factorwise(const Forest& f, const ProductRules& rules) {
  TensorElement acc = tree_coproduct_factorwise(f.tree(0), rules);
  for (std::size_t i = 1; i < f.length(); ++i) {
    const Letter& x = f.letters()[i - 1];
    const TensorElement next = tree_coproduct_factorwise(f.tree(i), rules);
    TensorElement combined;
    for (const auto& [lr, c] : acc) {
      const Element l = basis(lr.first);
      const Element r = basis(lr.second);
      for (const auto& [lr2, c2] : next) {
        const Element l2 = basis(lr2.first);
        const Element r2 = basis(lr2.second);
        const WeightPoly coeff = c * c2;
        // letter picked
        combined.add_scaled(tensor(concat(l, x, l2), diamond(r, r2, rules)), coeff);
        // letter kept
        combined.add_scaled(tensor(diamond(l, l2, rules), concat(r, x, r2)), coeff);
      }
    }
    acc = std::move(combined);
  }
  return acc;
}

WeightPoly counit(const Element& a) { return a.coefficient(Forest()); }

TensorElement reduced_coproduct(const Forest& f) {
  if (f.is_unit()) throw std::invalid_argument("reduced coproduct is undefined on the unit o");
  TensorElement out = coproduct(f);
  out.add({Forest(), f}, WeightPoly(-1));
  out.add({f, Forest()}, WeightPoly(-1));
  return out;
}

std::size_t filtration_degree(const Element& a) {
  if (a.is_zero()) throw std::invalid_argument("filtration degree of zero is undefined");
  return max_degree(a) - 1;
}

// --- tensor helpers -----------------------------------------------------------

TensorElement tensor_diamond(const TensorElement& x, const TensorElement& y,
                             const ProductRules& rules) {
  TensorElement out;
  for (const auto& [ab, c1] : x) {
    for (const auto& [cd, c2] : y) {
      out.add_scaled(tensor(diamond(ab.first, cd.first, rules), diamond(ab.second, cd.second, rules)),
                     c1 * c2);
    }
  }
  return out;
}

TensorElement graft_right(const TensorElement& x) {
  TensorElement out;
  for (const auto& [lr, c] : x) out.add({lr.first, graft(lr.second)}, c);
  return out;
}

Element counit_left(const TensorElement& x) {
  Element out;
  for (const auto& [lr, c] : x) {
    if (lr.first.is_unit()) out.add(lr.second, c);
  }
  return out;
}

Element counit_right(const TensorElement& x) {
  Element out;
  for (const auto& [lr, c] : x) {
    if (lr.second.is_unit()) out.add(lr.first, c);
  }
  return out;
}

MultiTensor coproduct_left(const TensorElement& x) {
  MultiTensor out;
  for (const auto& [lr, c] : x) {
    for (const auto& [inner, c2] : coproduct(lr.first)) {
      out.add({inner.first, inner.second, lr.second}, c * c2);
    }
  }
  return out;
}

MultiTensor coproduct_right(const TensorElement& x) {
  MultiTensor out;
  for (const auto& [lr, c] : x) {
    for (const auto& [inner, c2] : coproduct(lr.second)) {
      out.add({lr.first, inner.first, inner.second}, c * c2);
    }
  }
  return out;
}

MultiTensor to_multi(const TensorElement& x) {
  MultiTensor out;
  for (const auto& [lr, c] : x) out.add({lr.first, lr.second}, c);
  return out;
}

}  // namespace rbhopf
