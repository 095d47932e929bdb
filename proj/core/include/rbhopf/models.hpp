#pragma once

// Concrete Rota-Baxter algebras and the evaluation homomorphism out of the
// free algebra.
//
// Given a model (R, P) of weight w and values f(x) for the letters, a forest
// is evaluated by
//   eval(o)               = 1
//   eval([F])             = P(eval(F))
//   eval(T1 x1 T2 ... Tk) = eval(T1) f(x1) eval(T2) ... eval(Tk)
// after specialising every L-coefficient at L = w.

#include <concepts>
#include <map>
#include <stdexcept>

#include "rbhopf/element.hpp"
#include "rbhopf/laurent.hpp"

namespace rbhopf {

template <typename M>
concept RotaBaxterModel = requires(const M& m, const typename M::Value& v, const Rational& r) {
  { m.weight() } -> std::convertible_to<Rational>;
  { m.one() } -> std::convertible_to<typename M::Value>;
  { m.add(v, v) } -> std::convertible_to<typename M::Value>;
  { m.multiply(v, v) } -> std::convertible_to<typename M::Value>;
  { m.scale(r, v) } -> std::convertible_to<typename M::Value>;
  { m.apply(v) } -> std::convertible_to<typename M::Value>;
  { m.equivalent(v, v) } -> std::convertible_to<bool>;
};

/// Any commutative ring of rationals with P(r) = -w r, which is a
/// Rota-Baxter operator of weight w.
class ScalarModel {
 public:
  using Value = Rational;

  explicit ScalarModel(Rational weight) : weight_(std::move(weight)) {}

  [[nodiscard]] Rational weight() const { return weight_; }
  [[nodiscard]] Value one() const { return 1; }
  [[nodiscard]] Value add(const Value& a, const Value& b) const { return a + b; }
  [[nodiscard]] Value multiply(const Value& a, const Value& b) const { return a * b; }
  [[nodiscard]] Value scale(const Rational& c, const Value& a) const { return c * a; }
  [[nodiscard]] Value apply(const Value& a) const { return -weight_ * a; }
  [[nodiscard]] bool equivalent(const Value& a, const Value& b) const { return a == b; }

 private:
  Rational weight_;
};

/// Laurent series under the pole-part projection; weight -1.
class LaurentModel {
 public:
  using Value = LaurentSeries;

  LaurentModel() = default;
  /// Throws std::invalid_argument unless weight == -1.
  explicit LaurentModel(const Rational& weight) {
    if (weight != -1) throw std::invalid_argument("the Laurent model has weight -1");
  }

  [[nodiscard]] Rational weight() const { return -1; }
  [[nodiscard]] Value one() const { return LaurentSeries::constant(1); }
  [[nodiscard]] Value add(const Value& a, const Value& b) const { return a + b; }
  [[nodiscard]] Value multiply(const Value& a, const Value& b) const { return a * b; }
  [[nodiscard]] Value scale(const Rational& c, const Value& a) const { return c * a; }
  [[nodiscard]] Value apply(const Value& a) const { return pole_projection(a); }
  /// Compares only coefficients both sides determine.
  [[nodiscard]] bool equivalent(const Value& a, const Value& b) const { return a.agrees_with(b); }
};

/// An element with its L-coefficients evaluated at a fixed weight.
struct SpecializedElement {
  Rational weight;
  std::map<Forest, Rational> terms;
};

SpecializedElement specialize(const Element& a, const Rational& weight);

template <RotaBaxterModel M>
using Assignment = std::map<Letter, typename M::Value>;

namespace detail {

template <RotaBaxterModel M>
typename M::Value evaluate_forest(const Forest& f, const Assignment<M>& assignment, const M& model);

template <RotaBaxterModel M>
typename M::Value evaluate_tree(const Tree& t, const Assignment<M>& assignment, const M& model) {
  if (t.is_leaf()) return model.one();
  return model.apply(evaluate_forest(t.body(), assignment, model));
}

template <RotaBaxterModel M>
typename M::Value evaluate_forest(const Forest& f, const Assignment<M>& assignment, const M& model) {
  typename M::Value acc = evaluate_tree(f.tree(0), assignment, model);
  for (std::size_t i = 1; i < f.length(); ++i) {
    const Letter& x = f.letters()[i - 1];
    auto it = assignment.find(x);
    if (it == assignment.end()) {
      throw std::invalid_argument("letter '" + x.symbol() + "' has no assigned value");
    }
    acc = model.multiply(model.multiply(acc, it->second), evaluate_tree(f.tree(i), assignment, model));
  }
  return acc;
}

}  // namespace detail

/// Throws std::invalid_argument on an unassigned letter, or when `a` was
/// specialised at a weight other than the model's.
template <RotaBaxterModel M>
typename M::Value evaluate_hom(const SpecializedElement& a, const Assignment<M>& assignment,
                               const M& model) {
  if (a.weight != model.weight()) {
    throw std::invalid_argument("element specialised at weight " + to_string(a.weight) +
                                " but the model has weight " + to_string(model.weight()));
  }
  typename M::Value out = model.scale(0, model.one());
  for (const auto& [f, c] : a.terms) {
    out = model.add(out, model.scale(c, detail::evaluate_forest(f, assignment, model)));
  }
  return out;
}

/// Specialises at the model's weight, then evaluates.
template <RotaBaxterModel M>
typename M::Value evaluate_hom(const Element& a, const Assignment<M>& assignment, const M& model) {
  return evaluate_hom(specialize(a, model.weight()), assignment, model);
}

/// P(u)P(v) == P(u P(v)) + P(P(u) v) + w P(u v) in the model.
template <RotaBaxterModel M>
bool check_rb_identity(const M& model, const typename M::Value& u, const typename M::Value& v) {
  const auto pu = model.apply(u);
  const auto pv = model.apply(v);
  const auto lhs = model.multiply(pu, pv);
  auto rhs = model.add(model.apply(model.multiply(u, pv)), model.apply(model.multiply(pu, v)));
  rhs = model.add(rhs, model.scale(model.weight(), model.apply(model.multiply(u, v))));
  return model.equivalent(lhs, rhs);
}

}  // namespace rbhopf
