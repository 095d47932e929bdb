#pragma once

// Machine check of the Rota-Baxter, bialgebra and Hopf laws over an
// exhaustive corpus of small forests plus seeded random samples.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rbhopf/coalgebra.hpp"

namespace rbhopf {

struct SuiteConfig {
  /// Corpus: every forest of degree <= max_degree over `alphabet`.
  std::size_t max_degree = 3;
  Alphabet alphabet;
  /// Pairs and triples from the corpus whose degrees sum to at most this;
  /// 0 means max_degree + 2.
  std::size_t max_degree_sum = 0;
  /// Degree bound for the antipode laws; 0 means max_degree.
  std::size_t antipode_max_degree = 0;
  /// Random pairs/triples drawn on top of the corpus.
  std::size_t samples = 0;
  std::size_t sample_max_degree = 6;
  std::uint64_t seed = 0;
  /// Fault injection for mutation tests; defaults are the real structure.
  CoproductOptions structure;
};

struct Counterexample {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct LawResult {
  std::string law;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// Advisory laws are reported but never fail the suite.
  bool advisory = false;
  std::optional<Counterexample> first_counterexample;

  [[nodiscard]] bool ok() const { return failed == 0; }
};

struct SuiteReport {
  SuiteConfig config;
  std::size_t corpus_size = 0;
  std::vector<LawResult> laws;

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] const LawResult* find(const std::string& law) const;
};

/// Runs, in order: Rota-Baxter identity, product filtration, associativity,
/// unit, coassociativity, counit, cocycle, multiplicativity, coproduct
/// filtration, connectedness, agreement of the two coproduct routes,
/// truncation of the reduced coproduct, agreement of the two antipodes,
/// the antipode axiom, and (advisory) antihomomorphism of the antipode.
SuiteReport run_axiom_suite(const SuiteConfig& config);

std::string to_json(const SuiteReport& report);
std::string to_text(const SuiteReport& report);

}  // namespace rbhopf
