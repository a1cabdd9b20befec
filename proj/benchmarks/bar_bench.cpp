#include "torbar/parser.hpp"
#include "torbar/tor.hpp"

#include <benchmark/benchmark.h>

#include <fstream>
#include <memory>
#include <sstream>

using namespace torbar;

namespace {

std::shared_ptr<const AlgebraContext> load(const char* name) {
  std::ifstream in(std::string(TORBAR_DATA_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::make_shared<AlgebraContext>(parse_presentation(ss.str()));
}

void bm_word_enumeration(benchmark::State& state) {
  auto algebra = load("s2-circle.alg");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // fresh context each pass: the slices are memoized
    BarContext bar(algebra, BarMode::OverK, n);
    benchmark::DoNotOptimize(bar.complex_dim(n));
  }
}
BENCHMARK(bm_word_enumeration)->DenseRange(4, 8, 2);

void bm_differential_matrix(benchmark::State& state) {
  auto algebra = load("s2-circle.alg");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BarContext bar(algebra, BarMode::OverR, n + 1);
    benchmark::DoNotOptimize(bar.D_matrix(n));
  }
}
BENCHMARK(bm_differential_matrix)->DenseRange(4, 10, 2);

void bm_move_quotient(benchmark::State& state) {
  auto algebra = load("s2-circle.alg");
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BarContext bar(algebra, BarMode::OverK, n);
    benchmark::DoNotOptimize(bar.quotient_over_R(n).basis_words.size());
  }
}
BENCHMARK(bm_move_quotient)->DenseRange(3, 7, 2);

void bm_tor_table(benchmark::State& state) {
  auto algebra = load("s2-circle.alg");
  TorRequest req;
  req.algebra = algebra;
  req.max_degree = static_cast<int>(state.range(0));
  req.mode = TorMode::OverR;
  for (auto _ : state) {
    TorResult r = tor_compute(req);
    benchmark::DoNotOptimize(r.betti);
  }
}
BENCHMARK(bm_tor_table)->DenseRange(6, 12, 3);

void bm_shuffle_product(benchmark::State& state) {
  auto algebra = load("s2-circle.alg");
  BarContext bar(algebra, BarMode::OverR, 12);
  const int n = static_cast<int>(state.range(0));
  BarChain a = bar.word_chain(bar.bar_basis(n).front());
  BarChain b = bar.word_chain(bar.bar_basis(n).back());
  for (auto _ : state) benchmark::DoNotOptimize(bar.shuffle_mul(a, b));
}
BENCHMARK(bm_shuffle_product)->DenseRange(2, 5, 1);

}  // namespace

BENCHMARK_MAIN();
