#include <doctest.h>

#include "oracles.hpp"
#include "rbhopf/coalgebra.hpp"
#include "support.hpp"

using namespace rbhopf;
using testing::E;
using testing::F;
using testing::letters;

namespace {

SubforestMarking marking_with(const Forest& f, const std::vector<std::string>& pieces) {
  for (const auto& h : enumerate_subforests(f)) {
    if (marking_components(f, h) == pieces) return h;
  }
  FAIL("no marking with the requested pieces");
  return {};
}

TensorElement T(const std::string& s) { return parse_tensor(s); }

}  // namespace

TEST_SUITE("coalgebra") {
  TEST_CASE("subforest counts") {
    CHECK(enumerate_subforests(F("[o x o]")).size() == 3);
    CHECK(enumerate_subforests(F("[[o x1 o] x2 o]")).size() == 7);
    CHECK(enumerate_subforests(F("[o x1 o] x2 o")).size() == 6);
    CHECK(enumerate_subforests(F("o")).size() == 1);
    CHECK(enumerate_subforests(F("[o x o]")).front().empty());
  }

  TEST_CASE("subforest counts agree with brute force and the closed form") {
    for (const auto& f : enumerate_forests(6, letters({"a", "b"}))) {
      const auto o = oracle::read(f.str());
      const auto n = enumerate_subforests(f).size();
      CHECK(n == oracle::valid_markings(o).size());
      CHECK(n == oracle::closed_form_count(o));
    }
  }

  TEST_CASE("every enumerated marking is valid and distinct") {
    const Forest f = F("[[o a o] b [o]] a o b [o a o]");
    const auto all = enumerate_subforests(f);
    std::set<SubforestMarking> seen(all.begin(), all.end());
    CHECK(seen.size() == all.size());
    for (const auto& h : all) CHECK_FALSE(marking_error(f, h).has_value());
  }

  TEST_CASE("invalid markings are rejected") {
    const Forest f = F("[o x o]");
    SubforestMarking nested;
    nested.vertices = {VertexAddr{{0}}};
    nested.angles = {angle_addresses(f).front()};
    CHECK(marking_error(f, nested).has_value());
    CHECK_THROWS_AS(closure(f, nested), std::invalid_argument);
    CHECK_THROWS_AS(quotient(f, nested), std::invalid_argument);
  }

  TEST_CASE("closures") {
    const Forest f = F("[o x o]");
    CHECK(to_string(closure(f, marking_with(f, {"x"}))) == "o x o");
    CHECK(to_string(closure(f, marking_with(f, {}))) == "o");
    const Forest g = F("[o x1 o] x2 o");
    CHECK(to_string(closure(g, marking_with(g, {"[o x1 o]", "x2"}))) == "[o x1 o] x2 o");
    const Forest h = F("[[o x1 o] x2 o]");
    CHECK(to_string(closure(h, marking_with(h, {"x1", "x2"}))) == "o x1 o x2 o");
    const Forest j = F("[o a o] b [o]");
    CHECK(to_string(closure(j, marking_with(j, {"[o a o]", "[o]"}))) == "[o a o] ⊔ [o]");
  }

  TEST_CASE("quotients") {
    const Forest f = F("[o x o]");
    CHECK(to_string(quotient(f, marking_with(f, {"x"}))) == "[o ⊔ o]");
    CHECK(evaluate_marked_word(quotient(f, marking_with(f, {"x"}))) == E("[o]"));
    const Forest g = F("[o x1 o] x2 o");
    CHECK(to_string(quotient(g, marking_with(g, {"[o x1 o]"}))) == "o ⊔ o x2 o");
    CHECK(evaluate_marked_word(quotient(g, marking_with(g, {"[o x1 o]"}))) == E("o x2 o"));
    CHECK(to_string(quotient(g, marking_with(g, {}))) == "[o x1 o] x2 o");
    CHECK(to_string(quotient(g, marking_with(g, {"[o x1 o]", "x2"}))) == "o ⊔ o ⊔ o");
    CHECK(to_string(quotient(F("[[o]] a o"), marking_with(F("[[o]] a o"), {"[o]"}))) == "[o] a o");
  }

  TEST_CASE("factorwise quotient table") {
    const Forest g = F("[o x1 o] x2 o");
    std::vector<std::string> rows;
    for (const auto& h : enumerate_subforests(g)) rows.push_back(to_string(quotient(g, h)));
    std::sort(rows.begin(), rows.end());
    std::vector<std::string> expected{"[o x1 o] x2 o", "[o ⊔ o] x2 o", "o ⊔ o x2 o",
                                      "[o x1 o] ⊔ o",  "[o ⊔ o] ⊔ o",  "o ⊔ o ⊔ o"};
    std::sort(expected.begin(), expected.end());
    CHECK(rows == expected);
  }

  TEST_CASE("marked word evaluation") {
    auto word = [](std::vector<Forest> trees, std::vector<std::string> seps) {
      MarkedWord w;
      for (const auto& t : trees) w.trees.push_back(to_marked_word(t).trees.front());
      for (const auto& s : seps) w.separators.push_back(s.empty() ? Separator::join() : Separator{Letter(s)});
      return w;
    };
    CHECK(evaluate_marked_word(word({F("o"), F("o")}, {""})) == E("o"));
    CHECK(evaluate_marked_word(word({F("[o]"), F("o"), F("o")}, {"", "x"})) == E("[o] x o"));
    CHECK(evaluate_marked_word(word({F("[o]"), F("[o]")}, {""})) == E("2*[[o]] + (L)*[o]"));
  }

  TEST_CASE("worked coproducts") {
    CHECK(coproduct(F("[o x o]")) == T("o (x) [o x o] + [o x o] (x) o + o x o (x) [o]"));
    CHECK(coproduct(F("[[o x1 o] x2 o]")) ==
          T("o (x) [[o x1 o] x2 o] + o x1 o (x) [[o] x2 o] + [o x1 o] (x) [o x2 o]"
            " + o x2 o (x) [[o x1 o]] + o x1 o x2 o (x) [[o]] + [o x1 o] x2 o (x) [o]"
            " + [[o x1 o] x2 o] (x) o"));
    const auto g = coproduct(F("[o x1 o] x2 o"));
    CHECK(g.size() == 6);
    CHECK(g.coefficient({F("o x1 o"), F("[o] x2 o")}) == WeightPoly(1));
    CHECK(g.coefficient({F("o x1 o x2 o"), F("[o]")}) == WeightPoly(1));
    CHECK(coproduct(F("o")) == T("o (x) o"));
  }

  TEST_CASE("coproduct agrees with the reference on every small forest") {
    for (const auto& f : enumerate_forests(5, letters({"a", "b"}))) {
      CHECK(oracle::from_library(coproduct(f)) == oracle::coproduct(oracle::read(f.str())));
    }
  }

  TEST_CASE("global and factorwise coproducts agree") {
    for (const auto& f : enumerate_forests(5, letters({"a", "b"}))) CHECK(coproduct(f) == coproduct_factorwise(f));
  }

  TEST_CASE("degree balance") {
    for (const auto& f : enumerate_forests(5, letters({"a", "b"}))) {
      for (const auto& [k, c] : coproduct(f)) {
        const auto total = k.first.degree() + k.second.degree();
        CHECK(total <= f.degree() + 1);
        if (c.is_constant()) CHECK(total == f.degree() + 1);
      }
    }
  }

  TEST_CASE("counit") {
    CHECK(counit(E("o")) == WeightPoly(1));
    CHECK(counit(E("[o]")).is_zero());
    CHECK(counit(E("3*o + (L)*[o x o]")) == WeightPoly(3));
  }

  TEST_CASE("reduced coproduct") {
    CHECK(reduced_coproduct(F("o x o")).is_zero());
    CHECK(reduced_coproduct(F("[o x o]")) == T("o x o (x) [o]"));
    CHECK(reduced_coproduct(F("[o]")).is_zero());
    CHECK_THROWS_AS(reduced_coproduct(F("o")), std::invalid_argument);
    for (const auto& f : enumerate_forests(4, letters({"a"}))) {
      if (f.is_unit()) continue;
      for (const auto& [k, c] : reduced_coproduct(f)) {
        CHECK_FALSE(k.first.is_unit());
        CHECK_FALSE(k.second.is_unit());
      }
    }
  }

  TEST_CASE("filtration degree") {
    CHECK(filtration_degree(E("o")) == 0);
    CHECK(filtration_degree(E("[o x o]")) == 2);
    CHECK(filtration_degree(E("o + [[o]]")) == 2);
    CHECK_THROWS_AS(filtration_degree(Element()), std::invalid_argument);
  }

  TEST_CASE("dropping the empty subforest breaks the counit law") {
    CoproductOptions broken;
    broken.include_empty_subforest = false;
    const Forest f = F("[o x o]");
    CHECK(counit_left(coproduct(f, broken)) != basis(f));
    CHECK(counit_left(coproduct(f)) == basis(f));
    CHECK(counit_right(coproduct(f)) == basis(f));
  }
}
