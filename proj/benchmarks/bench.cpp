// Microbenchmarks for the hot paths: eta construction across link sizes,
// sparse polynomial multiplication, word traces, and normal-form reduction.

#include <benchmark/benchmark.h>

#include "tbchar/char_variety.hpp"
#include "tbchar/linkparam.hpp"
#include "tbchar/rng.hpp"
#include "tbchar/skein_reduce.hpp"
#include "tbchar/trace_engine.hpp"

using namespace tbchar;

namespace {

TwoBridgeParam widest_link(std::int64_t p) { return {2 * p, 2 * p - 1}; }

Polynomial random_poly(Rng& rng, int terms, int max_exp) {
  Polynomial f(VarSet::barred);
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (int v = 0; v < 3; ++v)
      m.exp[static_cast<std::size_t>(v)] =
          static_cast<int>(rng.uniform(0, max_exp));
    f.add_term(m, Int(static_cast<long>(rng.uniform(-50, 50))));
  }
  return f;
}

void bench_eta(benchmark::State& state) {
  const TwoBridgeParam l = widest_link(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eta(l));
}

void bench_relator_trace(benchmark::State& state) {
  const Word w = relator_word(widest_link(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trace_of_word(w));
}

void bench_poly_multiply(benchmark::State& state) {
  Rng rng(42);
  const int terms = static_cast<int>(state.range(0));
  const Polynomial f = random_poly(rng, terms, 8);
  const Polynomial g = random_poly(rng, terms, 8);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}

void bench_normal_form(benchmark::State& state) {
  const CharacterRingReducer red(widest_link(state.range(0)));
  Rng rng(7);
  const Polynomial f = random_poly(rng, 40, 12);
  for (auto _ : state) benchmark::DoNotOptimize(red.normal_form(f));
}

}  // namespace

BENCHMARK(bench_eta)->Arg(2)->Arg(4)->Arg(6)->Arg(8);
BENCHMARK(bench_relator_trace)->Arg(2)->Arg(4)->Arg(8);
BENCHMARK(bench_poly_multiply)->Arg(16)->Arg(64)->Arg(256);
BENCHMARK(bench_normal_form)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
