#include "rbhopf/axioms.hpp"

#include <array>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rbhopf/hopf.hpp"
#include "rbhopf/syntax.hpp"

namespace rbhopf {

namespace {

std::string render_multi(const MultiTensor& t) {
  if (t.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [legs, c] : t) {
    os << (first ? "" : " + ") << "(" << to_string(c) << ")*";
    for (std::size_t i = 0; i < legs.size(); ++i) os << (i ? " (x) " : "") << legs[i].str();
    first = false;
  }
  return os.str();
}

class Law {
 public:
  explicit Law(std::string name, bool advisory = false) {
    result_.law = std::move(name);
    result_.advisory = advisory;
  }

  void expect_equal(const std::vector<Forest>& inputs, const Element& lhs, const Element& rhs) {
    record(lhs == rhs, inputs, [&] { return std::pair(render(lhs), render(rhs)); });
  }

  void expect_equal(const std::vector<Forest>& inputs, const TensorElement& lhs,
                    const TensorElement& rhs) {
    record(lhs == rhs, inputs, [&] { return std::pair(render(lhs), render(rhs)); });
  }

  void expect_equal(const std::vector<Forest>& inputs, const MultiTensor& lhs, const MultiTensor& rhs) {
    record(lhs == rhs, inputs, [&] { return std::pair(render_multi(lhs), render_multi(rhs)); });
  }

  void record(bool ok, const std::vector<Forest>& inputs,
              const std::function<std::pair<std::string, std::string>()>& sides) {
    ++result_.instances;
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (!result_.first_counterexample) {
      Counterexample ce;
      for (const auto& f : inputs) ce.inputs.push_back(f.str());
      std::tie(ce.lhs, ce.rhs) = sides();
      result_.first_counterexample = std::move(ce);
    }
  }

  LawResult take() { return std::move(result_); }

 private:
  LawResult result_;
};

struct Workload {
  std::vector<Forest> singles;
  std::vector<std::pair<Forest, Forest>> pairs;
  std::vector<std::array<Forest, 3>> triples;
  std::vector<Forest> antipode_singles;
};

Workload build_workload(const SuiteConfig& config, std::size_t& corpus_size) {
  Workload w;
  const auto corpus = enumerate_forests(config.max_degree, config.alphabet);
  corpus_size = corpus.size();
  const std::size_t bound = config.max_degree_sum ? config.max_degree_sum : config.max_degree + 2;
  const std::size_t antipode_bound = config.antipode_max_degree ? config.antipode_max_degree
                                                                : config.max_degree;
  w.singles = corpus;
  for (const auto& f : corpus) {
    if (f.degree() <= antipode_bound) w.antipode_singles.push_back(f);
  }
  if (antipode_bound > config.max_degree) {
    w.antipode_singles = enumerate_forests(antipode_bound, config.alphabet);
  }
  for (const auto& a : corpus) {
    for (const auto& b : corpus) {
      if (a.degree() + b.degree() > bound) continue;
      w.pairs.emplace_back(a, b);
      for (const auto& c : corpus) {
        if (a.degree() + b.degree() + c.degree() <= bound) w.triples.push_back({a, b, c});
      }
    }
  }
  std::mt19937_64 rng(config.seed);
  for (std::size_t i = 0; i < config.samples; ++i) {
    Forest a = random_forest(rng, config.sample_max_degree, config.alphabet);
    Forest b = random_forest(rng, config.sample_max_degree, config.alphabet);
    Forest c = random_forest(rng, config.sample_max_degree, config.alphabet);
    w.singles.push_back(a);
    w.pairs.emplace_back(a, b);
    w.triples.push_back({a, b, c});
  }
  return w;
}

}  // namespace

bool SuiteReport::all_passed() const {
  for (const auto& law : laws) {
    if (!law.advisory && !law.ok()) return false;
  }
  return true;
}

const LawResult* SuiteReport::find(const std::string& law) const {
  for (const auto& l : laws) {
    if (l.law == law) return &l;
  }
  return nullptr;
}

SuiteReport run_axiom_suite(const SuiteConfig& config) {
  SuiteReport report;
  report.config = config;
  const Workload w = build_workload(config, report.corpus_size);
  const ProductRules& rules = config.structure.product;
  const CoproductOptions& structure = config.structure;
  const Forest unit;
  const Element one = unit_element();

  auto mul = [&](const Element& a, const Element& b) { return diamond(a, b, rules); };
  auto delta = [&](const Element& a) { return coproduct(a, structure); };

  {
    Law law("rota_baxter_identity");
    for (const auto& [a, b] : w.pairs) {
      auto sides = rb_identity_sides(basis(a), basis(b), rules);
      law.expect_equal({a, b}, sides.lhs, sides.rhs);
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("product_filtration");
    for (const auto& [a, b] : w.pairs) {
      const Element p = mul(basis(a), basis(b));
      const bool ok = p.is_zero() || max_degree(p) + 1 <= a.degree() + b.degree();
      law.record(ok, {a, b}, [&] {
        return std::pair("max degree " + std::to_string(max_degree(p)),
                         "at most " + std::to_string(a.degree() + b.degree() - 1));
      });
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("associativity");
    for (const auto& [a, b, c] : w.triples) {
      law.expect_equal({a, b, c}, mul(mul(basis(a), basis(b)), basis(c)),
                       mul(basis(a), mul(basis(b), basis(c))));
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("unit");
    for (const auto& f : w.singles) {
      const Element x = basis(f);
      law.expect_equal({f}, mul(one, x), x);
      law.expect_equal({f}, mul(x, one), x);
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("coassociativity");
    for (const auto& f : w.singles) {
      const TensorElement d = delta(basis(f));
      MultiTensor lhs;
      MultiTensor rhs;
      for (const auto& [lr, c] : d) {
        for (const auto& [inner, c2] : coproduct(lr.first, structure)) {
          lhs.add({inner.first, inner.second, lr.second}, c * c2);
        }
        for (const auto& [inner, c2] : coproduct(lr.second, structure)) {
          rhs.add({lr.first, inner.first, inner.second}, c * c2);
        }
      }
      law.expect_equal({f}, lhs, rhs);
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("counit");
    for (const auto& f : w.singles) {
      const TensorElement d = delta(basis(f));
      law.expect_equal({f}, counit_left(d), basis(f));
      law.expect_equal({f}, counit_right(d), basis(f));
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("cocycle");
    for (const auto& f : w.singles) {
      TensorElement rhs({graft(f), unit});
      rhs += graft_right(delta(basis(f)));
      law.expect_equal({f}, delta(bplus(basis(f))), rhs);
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("multiplicativity");
    for (const auto& [a, b] : w.pairs) {
      law.expect_equal({a, b}, delta(mul(basis(a), basis(b))),
                       tensor_diamond(delta(basis(a)), delta(basis(b)), rules));
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("coproduct_filtration");
    for (const auto& f : w.singles) {
      const TensorElement d = delta(basis(f));
      std::string bad;
      for (const auto& [lr, c] : d) {
        if ((lr.first.degree() - 1) + (lr.second.degree() - 1) > f.degree() - 1) {
          bad = lr.first.str() + " (x) " + lr.second.str();
          break;
        }
      }
      law.record(bad.empty(), {f}, [&] {
        return std::pair(bad, "filtration degree at most " + std::to_string(f.degree() - 1));
      });
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("connectedness");
    // H^0 is spanned by the unit: it is the only forest of filtration degree
    // 0, and the unit is grouplike with counit 1.
    for (const auto& f : w.singles) {
      const bool in_h0 = filtration_degree(basis(f)) == 0;
      law.record(in_h0 == f.is_unit(), {f}, [&] {
        return std::pair("filtration degree " + std::to_string(filtration_degree(basis(f))),
                         std::string(f.is_unit() ? "0" : "positive"));
      });
    }
    law.expect_equal({unit}, delta(one), TensorElement({unit, unit}));
    law.record(counit(one) == WeightPoly(1), {unit},
               [&] { return std::pair(to_string(counit(one)), std::string("1")); });
    report.laws.push_back(law.take());
  }
  {
    Law law("coproduct_routes_agree");
    for (const auto& f : w.singles) {
      law.expect_equal({f}, delta(basis(f)), coproduct_factorwise(f, rules));
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("reduced_coproduct_truncation");
    for (const auto& f : w.antipode_singles) {
      if (f.is_unit()) continue;
      law.expect_equal({f}, iterated_reduced_coproduct(f, f.degree() - 1), MultiTensor());
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("antipode_routes_agree");
    for (const auto& f : w.antipode_singles) law.expect_equal({f}, antipode(f), antipode_oracle(f));
    report.laws.push_back(law.take());
  }
  {
    Law law("antipode_axiom");
    for (const auto& f : w.antipode_singles) {
      const auto sides = convolution_sides(f);
      law.expect_equal({f}, sides.left, sides.middle);
      law.expect_equal({f}, sides.right, sides.middle);
    }
    report.laws.push_back(law.take());
  }
  {
    Law law("antipode_antihomomorphism", /*advisory=*/true);
    const std::size_t bound = config.antipode_max_degree ? config.antipode_max_degree
                                                         : config.max_degree;
    for (const auto& [a, b] : w.pairs) {
      if (a.degree() + b.degree() > bound + 1) continue;
      law.expect_equal({a, b}, antipode(diamond(basis(a), basis(b))),
                       diamond(antipode(b), antipode(a)));
    }
    report.laws.push_back(law.take());
  }
  return report;
}

std::string to_json(const SuiteReport& report) {
  using nlohmann::ordered_json;
  ordered_json root;
  std::vector<std::string> alphabet;
  for (const auto& x : report.config.alphabet) alphabet.push_back(x.symbol());
  root["config"] = {
      {"max_degree", report.config.max_degree},
      {"alphabet", alphabet},
      {"samples", report.config.samples},
      {"seed", report.config.seed},
  };
  root["corpus_size"] = report.corpus_size;
  root["all_passed"] = report.all_passed();
  ordered_json laws = ordered_json::array();
  for (const auto& l : report.laws) {
    ordered_json j;
    j["law"] = l.law;
    j["instances"] = l.instances;
    j["passed"] = l.passed;
    j["failed"] = l.failed;
    j["advisory"] = l.advisory;
    if (l.first_counterexample) {
      j["first_counterexample"] = {{"inputs", l.first_counterexample->inputs},
                                   {"lhs", l.first_counterexample->lhs},
                                   {"rhs", l.first_counterexample->rhs}};
    } else {
      j["first_counterexample"] = nullptr;
    }
    laws.push_back(std::move(j));
  }
  root["laws"] = std::move(laws);
  return root.dump(2);
}

std::string to_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "corpus: " << report.corpus_size << " forests of degree <= " << report.config.max_degree;
  if (report.config.samples) {
    os << ", " << report.config.samples << " random samples (seed " << report.config.seed << ")";
  }
  os << "\n";
  for (const auto& l : report.laws) {
    const char* status = l.ok() ? "PASS" : (l.advisory ? "WARN" : "FAIL");
    os << status << "  " << l.law << "  " << l.passed << "/" << l.instances << "\n";
    if (l.first_counterexample) {
      const auto& ce = *l.first_counterexample;
      os << "      inputs:";
      for (const auto& in : ce.inputs) os << " {" << in << "}";
      os << "\n      lhs: " << ce.lhs << "\n      rhs: " << ce.rhs << "\n";
    }
  }
  os << (report.all_passed() ? "all laws hold\n" : "law failures detected\n");
  return os.str();
}

}  // namespace rbhopf
