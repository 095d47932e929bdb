#pragma once

// Subforests, closures, quotients and the angular coproduct.
//
// A subforest marking picks mutually disjoint non-leaf subtrees and angle
// letters lying outside them. Its closure lists the picked pieces left to
// right: a leading or trailing letter gets a `o` on its open side, two
// adjacent letters get a `o` between them, and two adjacent subtrees get a
// join (the product, not yet executed). Its quotient replaces every picked
// subtree by its leaves, joined (`[o x o]` leaves `o ⊔ o`), and every picked
// letter by a join. The coproduct of F sums
// closure (x) quotient over all markings, including the empty one, with joins
// evaluated as products.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rbhopf/element.hpp"
#include "rbhopf/rb_algebra.hpp"

namespace rbhopf {

struct SubforestMarking {
  std::vector<VertexAddr> vertices;  // roots of picked subtrees
  std::vector<AngleAddr> angles;     // picked letters

  [[nodiscard]] bool empty() const { return vertices.empty() && angles.empty(); }
  friend bool operator==(const SubforestMarking&, const SubforestMarking&) = default;
  friend auto operator<=>(const SubforestMarking&, const SubforestMarking&) = default;
};

/// Empty if `h` satisfies the marking invariants for `f`, else a reason.
std::optional<std::string> marking_error(const Forest& f, const SubforestMarking& h);

/// Every valid marking of `f`, each exactly once. The empty marking is first.
std::vector<SubforestMarking> enumerate_subforests(const Forest& f);

/// The picked pieces of `h` in left-to-right order, rendered (`x1`, `[o x1 o]`).
std::vector<std::string> marking_components(const Forest& f, const SubforestMarking& h);

// --- marked words ----------------------------------------------------------

struct MarkedWord;

/// `o`, or a graft of a marked word.
struct MarkedTree {
  std::shared_ptr<const MarkedWord> body;  // null for the leaf
  [[nodiscard]] bool is_leaf() const { return body == nullptr; }
};

/// A letter, or the join marker standing for an unexecuted product.
struct Separator {
  std::optional<Letter> letter;
  [[nodiscard]] bool is_join() const { return !letter.has_value(); }
  static Separator join() { return {}; }
};

/// Alternating trees and separators; separators.size() + 1 == trees.size().
struct MarkedWord {
  std::vector<MarkedTree> trees;
  std::vector<Separator> separators;
};

MarkedWord to_marked_word(const Forest& f);
/// Plain form with `⊔` for joins, e.g. `[o ⊔ o] x2 o`.
std::string to_string(const MarkedWord& w);
/// Letters concatenate, joins multiply; the fold runs left to right.
Element evaluate_marked_word(const MarkedWord& w, const ProductRules& rules = {});

/// Throw std::invalid_argument if `h` is not a valid marking of `f`.
MarkedWord closure(const Forest& f, const SubforestMarking& h);
MarkedWord quotient(const Forest& f, const SubforestMarking& h);

// --- coproduct ---------------------------------------------------------------

struct CoproductOptions {
  /// Only mutation tests drop the empty marking.
  bool include_empty_subforest = true;
  ProductRules product;
};

/// Sum over enumerate_subforests(f) of closure (x) quotient.
TensorElement coproduct(const Forest& f, const CoproductOptions& options = {});
TensorElement coproduct(const Element& a, const CoproductOptions& options = {});

/// The same map computed by recursion on the factor decomposition: each
/// tree factor contributes its own coproduct (grafts via the cocycle rule)
/// and each letter is either picked (left legs joined by the letter, right
/// legs multiplied) or kept (left legs multiplied, right legs joined).
TensorElement coproduct_factorwise(const Forest& f, const ProductRules& rules = {});

/// Coefficient of `o`.
WeightPoly counit(const Element& a);

/// coproduct(f) - o (x) f - f (x) o. Throws std::invalid_argument for f = o.
TensorElement reduced_coproduct(const Forest& f);

/// Largest degree - 1 over the support. Throws std::invalid_argument on zero.
std::size_t filtration_degree(const Element& a);

// --- tensor helpers -----------------------------------------------------------

/// (a (x) b) <> (c (x) d) = (a <> c) (x) (b <> d), extended bilinearly.
TensorElement tensor_diamond(const TensorElement& x, const TensorElement& y,
                             const ProductRules& rules = {});
/// (id (x) B+)
TensorElement graft_right(const TensorElement& x);
/// (eps (x) id) and (id (x) eps) under k (x) H = H = H (x) k.
Element counit_left(const TensorElement& x);
Element counit_right(const TensorElement& x);
/// (Delta (x) id) and (id (x) Delta) as three-leg tensors.
MultiTensor coproduct_left(const TensorElement& x);
MultiTensor coproduct_right(const TensorElement& x);

MultiTensor to_multi(const TensorElement& x);

}  // namespace rbhopf
