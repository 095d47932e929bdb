#include "rbhopf/rb_algebra.hpp"

#include <map>
#include <tuple>

namespace rbhopf {

namespace {

struct TreePairKey {
  Tree left;
  Tree right;
  bool weight_term;
  friend auto operator<=>(const TreePairKey&, const TreePairKey&) = default;
  friend bool operator==(const TreePairKey&, const TreePairKey&) = default;
};

// Products of trees are recomputed constantly by the coproduct and the
// axiom suite, so they are cached per thread. The cache is bounded.
constexpr std::size_t kTreeCacheLimit = 1u << 16;

Element tree_product(const Tree& t, const Tree& u, const ProductRules& rules) {
  if (u.is_leaf()) return basis(Forest(t));
  if (t.is_leaf()) return basis(Forest(u));

  thread_local std::map<TreePairKey, Element> cache;
  TreePairKey key{t, u, rules.weight_term};
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const Forest& tbar = t.body();
  const Forest& ubar = u.body();
  Element inner = diamond(Forest(t), ubar, rules);
  inner += diamond(tbar, Forest(u), rules);
  if (rules.weight_term) inner.add_scaled(diamond(tbar, ubar, rules), WeightPoly::lambda());
  Element out = bplus(inner);

  if (cache.size() >= kTreeCacheLimit) cache.clear();
  cache.emplace(std::move(key), out);
  return out;
}

}  // namespace

Element diamond(const Forest& a, const Forest& b, const ProductRules& rules) {
  if (a.is_unit()) return basis(b);
  if (b.is_unit()) return basis(a);

  const Tree& last = a.trees().back();
  const Tree& first = b.trees().front();
  Element middle = tree_product(last, first, rules);
  if (a.length() == 1 && b.length() == 1) return middle;

  std::vector<Letter> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());

  Element out;
  for (const auto& [m, c] : middle) {
    std::vector<Tree> trees(a.trees().begin(), a.trees().end() - 1);
    trees.reserve(a.length() + b.length() - 1);
    trees.push_back(m.tree(0));
    trees.insert(trees.end(), b.trees().begin() + 1, b.trees().end());
    out.add(Forest(std::move(trees), letters), c);
  }
  return out;
}

Element diamond(const Element& a, const Element& b, const ProductRules& rules) {
  Element out;
  for (const auto& [fa, ca] : a) {
    for (const auto& [fb, cb] : b) out.add_scaled(diamond(fa, fb, rules), ca * cb);
  }
  return out;
}

Element bplus(const Element& a) {
  Element out;
  for (const auto& [f, c] : a) out.add(graft(f), c);
  return out;
}

Element star(const Element& abar, const Element& bbar, const ProductRules& rules) {
  Element out = diamond(bplus(abar), bbar, rules);
  out += diamond(abar, bplus(bbar), rules);
  if (rules.weight_term) out.add_scaled(diamond(abar, bbar, rules), WeightPoly::lambda());
  return out;
}

RbIdentitySides rb_identity_sides(const Element& a, const Element& b, const ProductRules& rules) {
  const Element pa = bplus(a);
  const Element pb = bplus(b);
  RbIdentitySides sides;
  sides.lhs = diamond(pa, pb, rules);
  sides.rhs = bplus(diamond(a, pb, rules));
  sides.rhs += bplus(diamond(pa, b, rules));
  sides.rhs.add_scaled(bplus(diamond(a, b, rules)), WeightPoly::lambda());
  return sides;
}

bool check_rb_identity(const Element& a, const Element& b, const ProductRules& rules) {
  auto sides = rb_identity_sides(a, b, rules);
  return sides.lhs == sides.rhs;
}

}  // namespace rbhopf
