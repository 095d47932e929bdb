// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "rbhopf/axioms.hpp"
#include "rbhopf/hopf.hpp"
#include "rbhopf/models.hpp"
#include "rbhopf/syntax.hpp"

using namespace rbhopf;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Alphabet ab() { return make_alphabet(std::vector<std::string>{"a", "b"}); }

Outcome worked_examples() {
  Outcome o;
  struct Case {
    std::string name;
    std::function<bool()> check;
  };
  const std::vector<Case> cases{
      {"coproduct [o x o]",
       [] {
         return coproduct(parse_forest("[o x o]")) ==
                parse_tensor("o (x) [o x o] + [o x o] (x) o + o x o (x) [o]");
       }},
      {"coproduct [[o x1 o] x2 o]",
       [] {
         return coproduct(parse_forest("[[o x1 o] x2 o]")) ==
                parse_tensor("o (x) [[o x1 o] x2 o] + o x1 o (x) [[o] x2 o] + [o x1 o] (x) [o x2 o]"
                             " + o x2 o (x) [[o x1 o]] + o x1 o x2 o (x) [[o]] + [o x1 o] x2 o (x) [o]"
                             " + [[o x1 o] x2 o] (x) o");
       }},
      {"coproduct [o x1 o] x2 o",
       [] {
         return coproduct(parse_forest("[o x1 o] x2 o")) ==
                parse_tensor("o (x) [o x1 o] x2 o + o x1 o (x) [o] x2 o + [o x1 o] (x) o x2 o"
                             " + o x2 o (x) [o x1 o] + o x1 o x2 o (x) [o] + [o x1 o] x2 o (x) o");
       }},
      {"antipode [o x o]",
       [] { return antipode(parse_element("[o x o]")) == parse_element("-[o x o] + o x [o]"); }},
      {"antipode [o x o] y o",
       [] { return antipode(parse_element("[o x o] y o")) == parse_element("o y [o x o] - o y o x [o]"); }},
      {"subforest counts 3/7/6",
       [] {
         return enumerate_subforests(parse_forest("[o x o]")).size() == 3 &&
                enumerate_subforests(parse_forest("[[o x1 o] x2 o]")).size() == 7 &&
                enumerate_subforests(parse_forest("[o x1 o] x2 o")).size() == 6;
       }},
  };
  double slowest = 0;
  for (const auto& c : cases) {
    const auto start = Clock::now();
    const bool ok = c.check();
    const double t = seconds_since(start);
    slowest = std::max(slowest, t);
    o.require(ok, c.name + " differs");
    o.require(t < 1.0, c.name + " took over 1 s");
  }
  std::ostringstream s;
  s << cases.size() << " examples, slowest " << slowest << " s";
  if (o.ok) o.detail = s.str();
  return o;
}

void require_laws(Outcome& o, const SuiteReport& report, const std::vector<std::string>& laws) {
  for (const auto& name : laws) {
    const auto* law = report.find(name);
    o.require(law != nullptr, "law " + name + " missing from report");
    if (law == nullptr) continue;
    o.require(law->instances > 0, "law " + name + " has no instances");
    o.require(law->ok(), "law " + name + " failed " + std::to_string(law->failed) + " times");
  }
}

const std::vector<std::string> kLaws{"rota_baxter_identity", "associativity", "unit", "coassociativity",
                                     "counit", "cocycle", "multiplicativity", "product_filtration",
                                     "coproduct_filtration", "connectedness"};

Outcome exhaustive_suite() {
  Outcome o;
  SuiteConfig config;
  config.max_degree = 4;
  config.alphabet = ab();
  config.max_degree_sum = 6;
  const auto start = Clock::now();
  const auto report = run_axiom_suite(config);
  const double t = seconds_since(start);
  require_laws(o, report, kLaws);
  o.require(report.all_passed(), "suite reported failures");
  o.require(t <= 120.0, "suite took over 2 minutes");
  if (o.ok) {
    std::size_t instances = 0;
    for (const auto& law : report.laws) instances += law.instances;
    o.detail = std::to_string(report.corpus_size) + " forests, " + std::to_string(instances) + " law instances, " +
               std::to_string(t) + " s";
  }
  return o;
}

Outcome random_suite() {
  Outcome o;
  SuiteConfig config;
  config.max_degree = 2;
  config.alphabet = ab();
  config.samples = 500;
  config.sample_max_degree = 6;
  config.seed = 20240611;
  const auto first = run_axiom_suite(config);
  const auto second = run_axiom_suite(config);
  require_laws(o, first, kLaws);
  o.require(first.all_passed(), "random suite reported failures");
  o.require(to_json(first) == to_json(second), "reports differ for the same seed");
  if (o.ok) o.detail = "500 samples, seed " + std::to_string(config.seed) + ", reports identical";
  return o;
}

Outcome oracle_equivalences() {
  Outcome o;
  const auto corpus = enumerate_forests(5, ab());
  for (const auto& f : corpus) {
    o.require(antipode(f) == antipode_oracle(f), "antipodes differ on " + f.str());
    o.require(coproduct(f) == coproduct_factorwise(f), "coproduct routes differ on " + f.str());
    const auto n = enumerate_subforests(f).size();
    o.require(n == oracle::closed_form_count(oracle::read(f.str())), "subforest count wrong on " + f.str());
  }
  for (const auto& f : forests_of_degree(6, ab())) {
    o.require(coproduct(f) == coproduct_factorwise(f), "coproduct routes differ on " + f.str());
    o.require(enumerate_subforests(f).size() == oracle::closed_form_count(oracle::read(f.str())),
              "subforest count wrong on " + f.str());
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " forests of degree <= 5, coproducts and counts also at degree 6";
  return o;
}

Outcome antipode_axiom() {
  Outcome o;
  const auto corpus = enumerate_forests(5, ab());
  for (const auto& f : corpus) {
    const auto sides = convolution_sides(f);
    o.require(sides.left == sides.middle && sides.middle == sides.right, "antipode axiom fails on " + f.str());
    o.require(sides.middle == counit(basis(f)) * unit_element(), "counit side wrong on " + f.str());
  }
  if (o.ok) o.detail = std::to_string(corpus.size()) + " forests of degree <= 5";
  return o;
}

LaurentSeries random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> low(-3, 1), len(0, 6), num(-5, 5), den(1, 4), order(1, 6);
  std::map<LaurentSeries::Exponent, Rational> c;
  const int start = low(rng);
  for (int i = 0, n = len(rng); i < n; ++i) c[start + i] = Rational(num(rng), den(rng));
  return LaurentSeries(c, order(rng));
}

Outcome models() {
  Outcome o;
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  for (const auto& w : {Rational(0), Rational(1), Rational(-1), Rational(3, 2)}) {
    const ScalarModel m(w);
    for (int i = 0; i < 100; ++i) {
      o.require(check_rb_identity(m, Rational(num(rng), den(rng)), Rational(num(rng), den(rng))),
                "scalar identity fails at weight " + to_string(w));
    }
  }
  const LaurentModel laurent;
  for (int i = 0; i < 100; ++i) {
    o.require(check_rb_identity(laurent, random_series(rng), random_series(rng)), "Laurent identity fails");
  }

  const auto corpus = enumerate_forests(4, ab());
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);
  const ScalarModel scalar(Rational(3, 2));
  Assignment<ScalarModel> fs{{Letter("a"), Rational(2, 3)}, {Letter("b"), Rational(-5)}};
  Assignment<LaurentModel> fl{{Letter("a"), random_series(rng)}, {Letter("b"), random_series(rng)}};
  for (int i = 0; i < 200; ++i) {
    const Forest& a = corpus[pick(rng)];
    const Forest& b = corpus[pick(rng)];
    const Element ab = diamond(a, b);
    o.require(evaluate_hom(ab, fs, scalar) == evaluate_hom(basis(a), fs, scalar) * evaluate_hom(basis(b), fs, scalar),
              "scalar eval not multiplicative on " + a.str() + ", " + b.str());
    o.require(evaluate_hom(bplus(basis(a)), fs, scalar) == scalar.apply(evaluate_hom(basis(a), fs, scalar)),
              "scalar eval does not intertwine grafting on " + a.str());
    o.require(laurent.equivalent(evaluate_hom(ab, fl, laurent),
                                 evaluate_hom(basis(a), fl, laurent) * evaluate_hom(basis(b), fl, laurent)),
              "Laurent eval not multiplicative on " + a.str() + ", " + b.str());
    o.require(laurent.equivalent(evaluate_hom(bplus(basis(a)), fl, laurent),
                                 laurent.apply(evaluate_hom(basis(a), fl, laurent))),
              "Laurent eval does not intertwine grafting on " + a.str());
  }
  if (o.ok) o.detail = "scalar weights 0, 1, -1, 3/2; Laurent weight -1; 200 evaluation pairs";
  return o;
}

Outcome mutations() {
  Outcome o;
  SuiteConfig config;
  config.max_degree = 3;
  config.alphabet = ab();

  SuiteConfig no_weight = config;
  no_weight.structure.product.weight_term = false;
  const auto r1 = run_axiom_suite(no_weight);
  const auto* rb = r1.find("rota_baxter_identity");
  o.require(rb != nullptr && rb->failed > 0, "dropping the weight term was not detected");
  o.require(rb != nullptr && rb->first_counterexample.has_value(), "no counterexample for the weight term");

  SuiteConfig no_empty = config;
  no_empty.structure.include_empty_subforest = false;
  const auto r2 = run_axiom_suite(no_empty);
  const auto* counit = r2.find("counit");
  o.require(counit != nullptr && counit->failed > 0, "dropping the empty subforest was not detected");
  if (o.ok) {
    const auto& ce = *rb->first_counterexample;
    o.detail = "RB counterexample (" + ce.inputs[0] + ", " + ce.inputs[1] + "); counit failed " +
               std::to_string(counit->failed) + " times";
  }
  return o;
}

Outcome parser() {
  Outcome o;
  std::mt19937_64 rng(88);
  std::uniform_int_distribution<int> terms(0, 4), coeff(-9, 9), power(0, 2);
  const Alphabet letters = make_alphabet(std::vector<std::string>{"a", "b", "x1"});
  for (int i = 0; i < 500; ++i) {
    Element a;
    for (int k = 0, n = terms(rng); k < n; ++k) {
      WeightPoly c;
      for (int e = power(rng); e >= 0; --e) c += WeightPoly(coeff(rng)) * WeightPoly::lambda(e);
      a.add(random_forest(rng, 6, letters), c);
    }
    o.require(parse_element(render(a)) == a, "round trip fails on " + render(a));
  }
  const std::vector<std::vector<std::string>> malformed{
      {"antipode", "[o x"}, {"mul", "o", "[o ] ]"}, {"coproduct", "2*"}, {"bplus", "o a"}, {"counit", "o L o"}};
  for (const auto& args : malformed) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    o.require(code == 2, "exit code " + std::to_string(code) + " for " + args[1]);
    o.require(err.str().find(":1:") != std::string::npos, "no position in diagnostic: " + err.str());
  }
  if (o.ok) o.detail = "500 round trips, " + std::to_string(malformed.size()) + " malformed inputs rejected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked examples", worked_examples},
      {"exhaustive laws, degree <= 4", exhaustive_suite},
      {"random laws, 500 samples", random_suite},
      {"oracle equivalences", oracle_equivalences},
      {"antipode axiom, degree <= 5", antipode_axiom},
      {"models", models},
      {"mutation sensitivity", mutations},
      {"parser", parser},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail
              << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
