#pragma once

// Antipode of the connected filtered bialgebra, computed two ways.

#include <cstddef>

#include "rbhopf/coalgebra.hpp"

namespace rbhopf {

/// Series form: S(o) = o and, for F != o,
///   S(F) = -F + sum_{n >= 1} (-1)^(n+1) m^n rDelta^n(F),
/// where rDelta^n is the reduced coproduct iterated n times on the leftmost
/// leg and m^n multiplies the n+1 legs left to right. The series stops at
/// the first n with rDelta^n(F) = 0, which happens no later than deg(F) - 1.
Element antipode(const Element& a);
Element antipode(const Forest& f);

/// Triangular recursion S(F) = -F - sum S(F') <> F'' over the terms
/// F' (x) F'' of rDelta(F), memoised per thread.
Element antipode_oracle(const Element& a);
Element antipode_oracle(const Forest& f);

/// rDelta^n(f) as an (n+1)-leg tensor; rDelta^0(f) = f. Throws for f = o.
MultiTensor iterated_reduced_coproduct(const Forest& f, std::size_t n);

/// m^n on an (n+1)-leg tensor: the left-nested product of the legs.
Element multiply_legs(const MultiTensor& t);

struct ConvolutionSides {
  Element left;    // sum S(F1) <> F2
  Element middle;  // eps(F) o
  Element right;   // sum F1 <> S(F2)
};

ConvolutionSides convolution_sides(const Forest& f);
/// True iff m(S (x) id) Delta(F) = eps(F) o = m(id (x) S) Delta(F).
bool convolve_check(const Forest& f);

}  // namespace rbhopf
