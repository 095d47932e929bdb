#include <random>

#include <doctest.h>

#include "rbhopf/models.hpp"
#include "rbhopf/rb_algebra.hpp"
#include "support.hpp"

using namespace rbhopf;
using testing::E;
using testing::F;
using testing::letters;
using testing::Q;

namespace {

LaurentSeries series(std::map<LaurentSeries::Exponent, Rational> c, LaurentSeries::Exponent order) {
  return LaurentSeries(std::move(c), order);
}

LaurentSeries random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> low(-3, 1), len(0, 5), coeff(-4, 4), order(2, 6);
  std::map<LaurentSeries::Exponent, Rational> c;
  const int start = low(rng);
  for (int i = 0, n = len(rng); i < n; ++i) c[start + i] = Rational(coeff(rng), 1 + (i % 3));
  return LaurentSeries(c, order(rng));
}

}  // namespace

TEST_SUITE("models") {
  TEST_CASE("laurent products") {
    const auto inv = LaurentSeries::monomial(1, -1);
    const auto t = LaurentSeries::monomial(1, 1);
    CHECK(laurent_mul(inv, t) == LaurentSeries::constant(1));
    CHECK(laurent_mul(inv + LaurentSeries::constant(1), inv) == series({{-2, 1}, {-1, 1}}, LaurentSeries::kExact));
    const auto a = series({{-1, 1}, {0, 2}, {3, 1}}, 3);
    const auto b = series({{-1, 5}, {2, 1}}, 3);
    const auto ab = laurent_mul(a, b);
    CHECK(ab.order() == 2);
    CHECK(ab.coefficient(-2) == 5);
    CHECK(ab.coefficient(-1) == 10);
  }

  TEST_CASE("pole projection") {
    CHECK(pole_projection(series({{-1, 1}, {0, 2}, {1, 1}}, LaurentSeries::kExact)) == LaurentSeries::monomial(1, -1));
    CHECK(pole_projection(series({{0, 1}, {2, 1}}, LaurentSeries::kExact)) == LaurentSeries());
    CHECK(pole_projection(series({{-2, 3}, {4, 1}}, 5)).is_exact());
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
      const auto s = random_series(rng);
      CHECK(pole_projection(pole_projection(s)) == pole_projection(s));
    }
  }

  TEST_CASE("text form") {
    CHECK(to_string(series({{-1, 1}, {0, 2}, {1, 1}}, LaurentSeries::kExact)) == "1*t^-1 + 2 + 1*t^1");
    CHECK(to_string(LaurentSeries()) == "0");
    CHECK(parse_laurent("1*t^-1 + 2 + 1*t^1") == series({{-1, 1}, {0, 2}, {1, 1}}, LaurentSeries::kExact));
  }

  TEST_CASE("scalar models satisfy the identity") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
    for (const auto& w : {Q("0"), Q("1"), Q("-1"), Q("3/2")}) {
      const ScalarModel m(w);
      for (int i = 0; i < 100; ++i) CHECK(check_rb_identity(m, Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
    }
  }

  TEST_CASE("laurent model satisfies the identity within its order") {
    const LaurentModel m;
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) CHECK(check_rb_identity(m, random_series(rng), random_series(rng)));
    CHECK_THROWS_AS(LaurentModel(Rational(1)), std::invalid_argument);
  }

  TEST_CASE("evaluation examples") {
    const LaurentModel laurent;
    Assignment<LaurentModel> f{{Letter("x"), LaurentSeries::monomial(1, -1)}};
    CHECK(evaluate_hom(E("o"), f, laurent) == LaurentSeries::constant(1));
    CHECK(evaluate_hom(E("[o]"), f, laurent) == LaurentSeries());
    CHECK(evaluate_hom(E("[o x o]"), f, laurent) == LaurentSeries::monomial(1, -1));
    for (const auto& mu : {Q("0"), Q("2"), Q("-3/4")}) {
      CHECK(evaluate_hom(E("[o]"), Assignment<ScalarModel>{}, ScalarModel(mu)) == -mu);
      CHECK(evaluate_hom(E("o"), Assignment<ScalarModel>{}, ScalarModel(mu)) == 1);
    }
  }

  TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(evaluate_hom(E("o x o"), Assignment<ScalarModel>{}, ScalarModel(1)), std::invalid_argument);
    const auto s = specialize(E("(L)*[o]"), 2);
    CHECK_THROWS_AS(evaluate_hom(s, Assignment<ScalarModel>{}, ScalarModel(1)), std::invalid_argument);
    CHECK(evaluate_hom(s, Assignment<ScalarModel>{}, ScalarModel(2)) == -4);
  }

  TEST_CASE("evaluation is a Rota-Baxter homomorphism") {
    const auto corpus = enumerate_forests(3, letters({"a", "b"}));
    const ScalarModel scalar(Q("3/2"));
    Assignment<ScalarModel> fs{{Letter("a"), Q("2/3")}, {Letter("b"), Q("-5")}};
    const LaurentModel laurent;
    Assignment<LaurentModel> fl{{Letter("a"), series({{-1, 1}, {0, 2}}, 4)},
                                {Letter("b"), series({{-2, Q("1/2")}, {1, 1}}, 3)}};
    for (const auto& a : corpus) {
      CHECK(evaluate_hom(bplus(basis(a)), fs, scalar) == scalar.apply(evaluate_hom(basis(a), fs, scalar)));
      CHECK(laurent.equivalent(evaluate_hom(bplus(basis(a)), fl, laurent),
                               laurent.apply(evaluate_hom(basis(a), fl, laurent))));
      for (const auto& b : corpus) {
        const Element ab = diamond(a, b);
        CHECK(evaluate_hom(ab, fs, scalar) == evaluate_hom(basis(a), fs, scalar) * evaluate_hom(basis(b), fs, scalar));
        CHECK(laurent.equivalent(evaluate_hom(ab, fl, laurent),
                                 evaluate_hom(basis(a), fl, laurent) * evaluate_hom(basis(b), fl, laurent)));
      }
    }
  }
}
