#pragma once

// The free Rota-Baxter algebra on angularly decorated forests: the diamond
// product, the grafting operator B+ (the Rota-Baxter operator) and the
// auxiliary star product used for grafted products.
//
// For trees, with T = B+(A) and T' = B+(B):
//   o <> o   = o
//   T <> o   = T,  o <> T' = T'
//   T <> T'  = B+(T <> B) + B+(A <> T') + L * B+(A <> B)
// For longer forests only the two facing boundary trees are multiplied:
//   (T1 x1 ... Tm) <> (T'1 y1 ... T'n) = T1 x1 ... (Tm <> T'1) y1 ... T'n

#include "rbhopf/element.hpp"

namespace rbhopf {

/// Switches for the product. Only mutation tests turn anything off.
struct ProductRules {
  /// Emit the L * B+(A <> B) cross term of the grafted case.
  bool weight_term = true;
};

Element diamond(const Forest& a, const Forest& b, const ProductRules& rules = {});
Element diamond(const Element& a, const Element& b, const ProductRules& rules = {});

/// Linear extension of F -> [F].
Element bplus(const Element& a);

/// B+(a) <> b + a <> B+(b) + L * a <> b, so that B+(star(a, b)) = B+(a) <> B+(b).
Element star(const Element& abar, const Element& bbar, const ProductRules& rules = {});

struct RbIdentitySides {
  Element lhs;  // B+(a) <> B+(b)
  Element rhs;  // B+(a <> B+(b)) + B+(B+(a) <> b) + L * B+(a <> b)
};

RbIdentitySides rb_identity_sides(const Element& a, const Element& b,
                                  const ProductRules& rules = {});

/// Exact check of the weight-L Rota-Baxter identity for P = B+.
bool check_rb_identity(const Element& a, const Element& b, const ProductRules& rules = {});

}  // namespace rbhopf
