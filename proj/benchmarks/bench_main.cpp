#include <benchmark/benchmark.h>

#include "rbhopf/axioms.hpp"
#include "rbhopf/hopf.hpp"
#include "rbhopf/syntax.hpp"

using namespace rbhopf;

namespace {

const Alphabet& ab() {
  static const Alphabet a = make_alphabet(std::vector<std::string>{"a", "b"});
  return a;
}

// Forests of one degree, fixed across runs.
std::vector<Forest> sample(std::size_t degree, std::size_t n) {
  std::vector<Forest> out;
  std::mt19937_64 rng(degree);
  while (out.size() < n) {
    Forest f = random_forest(rng, degree, ab());
    if (f.degree() == degree) out.push_back(f);
  }
  return out;
}

void BM_Diamond(benchmark::State& state) {
  const auto fs = sample(static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) {
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) benchmark::DoNotOptimize(diamond(fs[i], fs[i + 1]));
  }
}
BENCHMARK(BM_Diamond)->DenseRange(2, 8, 2);

// coproduct() memoises; this rebuilds every term from its marking.
void BM_CoproductGlobal(benchmark::State& state) {
  const auto fs = sample(static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) {
    for (const auto& f : fs) {
      TensorElement out;
      for (const auto& h : enumerate_subforests(f)) {
        out += tensor(evaluate_marked_word(closure(f, h)), evaluate_marked_word(quotient(f, h)));
      }
      benchmark::DoNotOptimize(out);
    }
  }
}
BENCHMARK(BM_CoproductGlobal)->DenseRange(2, 8, 2);

void BM_CoproductFactorwise(benchmark::State& state) {
  const auto fs = sample(static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) {
    for (const auto& f : fs) benchmark::DoNotOptimize(coproduct_factorwise(f));
  }
}
BENCHMARK(BM_CoproductFactorwise)->DenseRange(2, 8, 2);

void BM_AntipodeSeries(benchmark::State& state) {
  const auto fs = sample(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) {
    for (const auto& f : fs) benchmark::DoNotOptimize(antipode(f));
  }
}
BENCHMARK(BM_AntipodeSeries)->DenseRange(2, 6, 1);

void BM_AntipodeRecursion(benchmark::State& state) {
  const auto fs = sample(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) {
    for (const auto& f : fs) benchmark::DoNotOptimize(antipode_oracle(f));
  }
}
BENCHMARK(BM_AntipodeRecursion)->DenseRange(2, 6, 1);

void BM_Suite(benchmark::State& state) {
  SuiteConfig config;
  config.max_degree = static_cast<std::size_t>(state.range(0));
  config.alphabet = ab();
  for (auto _ : state) benchmark::DoNotOptimize(run_axiom_suite(config));
}
BENCHMARK(BM_Suite)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
