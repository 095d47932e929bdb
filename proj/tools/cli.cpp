#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "rbhopf/axioms.hpp"
#include "rbhopf/hopf.hpp"
#include "rbhopf/models.hpp"
#include "rbhopf/syntax.hpp"

namespace rbhopf::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Alphabet alphabet_from(const std::string& text) {
  try {
    return make_alphabet(split_commas(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--alphabet: ") + e.what());
  }
}

// Wraps a parse so that diagnostics name the argument that failed.
template <typename Fn>
auto parsed(const std::string& what, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw UsageError(what + ":" + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
  }
  auto print_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? " | " : "") << row[i];
      if (i + 1 < row.size()) out << std::string(widths[i] - display_width(row[i]), ' ');
    }
    out << "\n";
  };
  print_row(rows.front());
  std::size_t total = 0;
  for (std::size_t w : widths) total += w;
  out << std::string(total + 3 * (widths.size() - 1), '-') << "\n";
  for (std::size_t r = 1; r < rows.size(); ++r) print_row(rows[r]);
}

struct Common {
  std::string alphabet_text;
  CLI::Option* alphabet_option = nullptr;
  bool latex = false;

  [[nodiscard]] std::optional<Alphabet> alphabet() const {
    if (alphabet_option == nullptr || alphabet_option->count() == 0) return std::nullopt;
    return alphabet_from(alphabet_text);
  }
  [[nodiscard]] Format format() const { return latex ? Format::kLatex : Format::kPlain; }
};

void add_common(CLI::App* cmd, Common& common) {
  common.alphabet_option =
      cmd->add_option("--alphabet", common.alphabet_text, "Comma-separated letters; unknown letters are rejected");
  cmd->add_flag("--latex", common.latex, "Render output as LaTeX");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free Rota-Baxter algebra on angularly decorated forests: products, coproducts, antipodes"};
  app.require_subcommand(1);

  std::function<int()> action;

  // mul A B
  Common mul_opts;
  std::string mul_a, mul_b;
  auto* mul = app.add_subcommand("mul", "Diamond product A <> B");
  mul->add_option("A", mul_a)->required();
  mul->add_option("B", mul_b)->required();
  add_common(mul, mul_opts);
  mul->callback([&] {
    action = [&] {
      auto alphabet = mul_opts.alphabet();
      Element a = parsed("A", [&] { return parse_element(mul_a, alphabet); });
      Element b = parsed("B", [&] { return parse_element(mul_b, alphabet); });
      out << render(diamond(a, b), mul_opts.format()) << "\n";
      return kSuccess;
    };
  });

  // Unary element commands share one shape.
  struct Unary {
    Common opts;
    std::string input;
  };
  std::map<std::string, Unary> unary;
  auto add_unary = [&](const std::string& name, const std::string& help,
                       std::function<void(const Element&, const Unary&)> run) {
    Unary& u = unary[name];
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("A", u.input)->required();
    add_common(cmd, u.opts);
    cmd->callback([&, run] {
      action = [&, run] {
        Element a = parsed("A", [&] { return parse_element(u.input, u.opts.alphabet()); });
        run(a, u);
        return kSuccess;
      };
    });
  };
  add_unary("bplus", "Graft: B+(A)", [&](const Element& a, const Unary& u) {
    out << render(bplus(a), u.opts.format()) << "\n";
  });
  add_unary("coproduct", "Angular coproduct of A", [&](const Element& a, const Unary& u) {
    out << render(coproduct(a), u.opts.format()) << "\n";
  });
  add_unary("counit", "Counit: the coefficient of o in A", [&](const Element& a, const Unary& u) {
    out << (u.opts.latex ? to_latex(counit(a)) : to_string(counit(a))) << "\n";
  });
  add_unary("antipode", "Antipode S(A)", [&](const Element& a, const Unary& u) {
    out << render(antipode(a), u.opts.format()) << "\n";
  });

  // subforests F
  Common sub_opts;
  std::string sub_input;
  auto* sub = app.add_subcommand("subforests", "Table of subforests, closures and quotients of a forest");
  sub->add_option("F", sub_input)->required();
  add_common(sub, sub_opts);
  sub->callback([&] {
    action = [&] {
      Forest f = parsed("F", [&] { return parse_forest(sub_input, sub_opts.alphabet()); });
      std::vector<std::vector<std::string>> rows{
          {"subforest", "closure", "factorwise quotient", "reduced quotient"}};
      for (const auto& h : enumerate_subforests(f)) {
        std::string name;
        for (const auto& piece : marking_components(f, h)) name += (name.empty() ? "" : " ") + piece;
        if (name.empty()) name = "(empty)";
        const MarkedWord q = quotient(f, h);
        rows.push_back({name, to_string(closure(f, h)), to_string(q),
                        render(evaluate_marked_word(q), sub_opts.format())});
      }
      print_table(out, rows);
      out << enumerate_subforests(f).size() << " subforests\n";
      return kSuccess;
    };
  });

  // enumerate
  std::size_t enum_degree = 0;
  std::string enum_alphabet;
  auto* enumerate = app.add_subcommand("enumerate", "List every forest up to a degree");
  enumerate->add_option("--max-degree", enum_degree)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--alphabet", enum_alphabet, "Comma-separated letters (empty for none)")->required();
  enumerate->callback([&] {
    action = [&] {
      for (const auto& f : enumerate_forests(enum_degree, alphabet_from(enum_alphabet))) {
        out << f.str() << "\n";
      }
      return kSuccess;
    };
  });

  // eval
  std::string eval_model = "scalar";
  std::string eval_weight;
  std::vector<std::string> eval_assign;
  Common eval_opts;
  std::string eval_input;
  auto* eval = app.add_subcommand("eval", "Evaluate A in a concrete Rota-Baxter algebra");
  eval->add_option("--model", eval_model)->check(CLI::IsMember({"scalar", "laurent"}));
  eval->add_option("--weight", eval_weight, "Model weight (rational); the Laurent model requires -1")
      ->allow_extra_args(false);
  eval->add_option("--assign", eval_assign, "Letter value, x=EXPR (repeatable)")->allow_extra_args(false);
  eval->add_option("A", eval_input)->required();
  add_common(eval, eval_opts);
  eval->callback([&] {
    action = [&]() -> int {
      Element a = parsed("A", [&] { return parse_element(eval_input, eval_opts.alphabet()); });
      std::optional<Rational> weight;
      if (!eval_weight.empty()) weight = parsed("--weight", [&] { return parse_rational(eval_weight); });
      auto split_assign = [](const std::string& s) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("--assign expects x=EXPR, got '" + s + "'");
        return std::pair(s.substr(0, eq), s.substr(eq + 1));
      };
      if (eval_model == "scalar") {
        if (!weight) throw UsageError("--weight is required for the scalar model");
        ScalarModel model(*weight);
        Assignment<ScalarModel> assignment;
        for (const auto& s : eval_assign) {
          auto [name, expr] = split_assign(s);
          Letter x = parsed("--assign", [&] { return Letter(name); });
          assignment[x] = parsed("--assign " + name, [&] { return parse_rational(expr); });
        }
        out << to_string(parsed("A", [&] { return evaluate_hom(a, assignment, model); })) << "\n";
      } else {
        LaurentModel model = parsed("--weight", [&] { return weight ? LaurentModel(*weight) : LaurentModel(); });
        Assignment<LaurentModel> assignment;
        for (const auto& s : eval_assign) {
          auto [name, expr] = split_assign(s);
          Letter x = parsed("--assign", [&] { return Letter(name); });
          assignment[x] = parsed("--assign " + name, [&] { return parse_laurent(expr); });
        }
        out << to_string(parsed("A", [&] { return evaluate_hom(a, assignment, model); })) << "\n";
      }
      return kSuccess;
    };
  });

  // check
  SuiteConfig check_config;
  std::string check_alphabet;
  std::string check_json;
  std::string check_mutation;
  auto* check = app.add_subcommand("check", "Run the law suite over a corpus of forests");
  check->add_option("--max-degree", check_config.max_degree)->required()->check(CLI::PositiveNumber);
  check->add_option("--alphabet", check_alphabet, "Comma-separated letters (empty for none)")->required();
  check->add_option("--max-degree-sum", check_config.max_degree_sum,
                    "Degree bound for pairs and triples (default: max-degree + 2)");
  check->add_option("--antipode-max-degree", check_config.antipode_max_degree,
                    "Degree bound for antipode laws (default: max-degree)");
  check->add_option("--samples", check_config.samples, "Random pairs/triples on top of the corpus");
  check->add_option("--sample-max-degree", check_config.sample_max_degree)->check(CLI::PositiveNumber);
  check->add_option("--seed", check_config.seed);
  check->add_option("--json", check_json, "Also write the report as JSON to this path");
  check->add_option("--mutate", check_mutation, "Inject a fault (mutation testing)")
      ->check(CLI::IsMember({"drop-weight-term", "drop-empty-subforest"}));
  check->callback([&] {
    action = [&] {
      check_config.alphabet = alphabet_from(check_alphabet);
      if (check_mutation == "drop-weight-term") check_config.structure.product.weight_term = false;
      if (check_mutation == "drop-empty-subforest") check_config.structure.include_empty_subforest = false;
      const SuiteReport report = run_axiom_suite(check_config);
      out << to_text(report);
      if (!check_json.empty()) {
        std::ofstream file(check_json);
        if (!file) throw UsageError("cannot write " + check_json);
        file << to_json(report) << "\n";
      }
      return report.all_passed() ? kSuccess : kLawFailure;
    };
  });

  std::vector<const char*> argv{"rbhopf"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    return action ? action() : kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace rbhopf::cli
