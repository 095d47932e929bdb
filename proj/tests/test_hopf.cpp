#include <doctest.h>

#include "oracles.hpp"
#include "rbhopf/axioms.hpp"
#include "rbhopf/hopf.hpp"
#include "support.hpp"

using namespace rbhopf;
using testing::E;
using testing::F;
using testing::letters;

namespace {

// Triangular recursion on the reference structures.
std::map<std::string, oracle::Poly> reference_antipode(const std::string& f) {
  oracle::Comb s;
  if (f == "o") {
    s.add(oracle::read("o"), oracle::kOne);
    return oracle::flatten(s);
  }
  s.add(oracle::read(f), oracle::Poly{{0, -1}});
  for (const auto& [k, c] : oracle::coproduct(oracle::read(f))) {
    if (k.first == "o" || k.second == "o") continue;
    oracle::Comb left;
    for (const auto& [g, cg] : reference_antipode(k.first)) left.add(oracle::read(g), cg);
    oracle::Comb right;
    right.add(oracle::read(k.second), oracle::kOne);
    s.add(oracle::product(left, right), oracle::poly_mul(c, oracle::Poly{{0, -1}}));
  }
  return oracle::flatten(s);
}

}  // namespace

TEST_SUITE("hopf") {
  TEST_CASE("worked antipodes") {
    CHECK(antipode(E("o")) == E("o"));
    CHECK(antipode(E("[o x o]")) == E("-[o x o] + o x [o]"));
    CHECK(antipode(E("[o x o] y o")) == E("o y [o x o] - o y o x [o]"));
    CHECK(antipode_oracle(E("[o x o]")) == E("-[o x o] + o x [o]"));
    CHECK(antipode(E("o x o")) == E("-o x o"));
    CHECK(antipode_oracle(E("o x o")) == E("-o x o"));
  }

  TEST_CASE("series and recursion agree with the reference") {
    for (const auto& f : enumerate_forests(4, letters({"a", "b"}))) {
      const auto s = antipode(f);
      CHECK(s == antipode_oracle(f));
      CHECK(oracle::from_library(s) == reference_antipode(f.str()));
    }
  }

  TEST_CASE("antipode is linear") {
    const Element a = E("2*[o a o] + (L)*o a [o] - o");
    CHECK(antipode(a) == WeightPoly(2) * antipode(F("[o a o]")) + WeightPoly::lambda() * antipode(F("o a [o]")) -
                             antipode(F("o")));
  }

  TEST_CASE("iterated reduced coproduct vanishes past the degree") {
    for (const auto& f : enumerate_forests(5, letters({"a"}))) {
      if (f.degree() < 2) continue;
      CHECK(iterated_reduced_coproduct(f, f.degree() - 1).is_zero());
    }
    CHECK_FALSE(iterated_reduced_coproduct(F("[o x o]"), 1).is_zero());
  }

  TEST_CASE("convolution") {
    CHECK(convolve_check(F("o")));
    CHECK(convolve_check(F("[o x o]")));
    const auto sides = convolution_sides(F("[[o a o] b o]"));
    CHECK(sides.left.is_zero());
    CHECK(sides.right.is_zero());
    CHECK(sides.middle.is_zero());
    for (const auto& f : enumerate_forests(5, letters({"a", "b"}))) CHECK(convolve_check(f));
  }

  TEST_CASE("antihomomorphism on samples") {
    const auto corpus = enumerate_forests(3, letters({"a", "b"}));
    for (const auto& a : corpus) {
      for (const auto& b : corpus) {
        CHECK(antipode(diamond(basis(a), basis(b))) == diamond(antipode(b), antipode(a)));
      }
    }
  }

  TEST_CASE("suite over degree 3 with one letter") {
    SuiteConfig config;
    config.max_degree = 3;
    config.alphabet = letters({"a"});
    const auto report = run_axiom_suite(config);
    CHECK(report.corpus_size == 8);
    CHECK(report.all_passed());
    for (const auto& law : report.laws) CHECK_MESSAGE(law.ok(), law.law);
    CHECK(report.laws.front().law == "rota_baxter_identity");
  }

  TEST_CASE("suite detects a product without the weight term") {
    SuiteConfig config;
    config.max_degree = 3;
    config.alphabet = letters({"a"});
    config.structure.product.weight_term = false;
    const auto report = run_axiom_suite(config);
    CHECK_FALSE(report.all_passed());
    const auto* rb = report.find("rota_baxter_identity");
    REQUIRE(rb != nullptr);
    CHECK(rb->failed > 0);
    REQUIRE(rb->first_counterexample.has_value());
    CHECK(rb->first_counterexample->inputs.size() == 2);
    CHECK(rb->first_counterexample->lhs != rb->first_counterexample->rhs);
  }

  TEST_CASE("suite detects a coproduct without the empty subforest") {
    SuiteConfig config;
    config.max_degree = 3;
    config.alphabet = letters({"a"});
    config.structure.include_empty_subforest = false;
    const auto report = run_axiom_suite(config);
    const auto* counit = report.find("counit");
    REQUIRE(counit != nullptr);
    CHECK(counit->failed > 0);
    CHECK(counit->first_counterexample.has_value());
  }

  TEST_CASE("random mode is reproducible") {
    SuiteConfig config;
    config.max_degree = 2;
    config.alphabet = letters({"a", "b"});
    config.samples = 40;
    config.seed = 11;
    const auto a = run_axiom_suite(config);
    const auto b = run_axiom_suite(config);
    CHECK(a.all_passed());
    CHECK(to_json(a) == to_json(b));
    CHECK(to_text(a) == to_text(b));
  }
}
