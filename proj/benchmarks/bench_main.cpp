#include <benchmark/benchmark.h>

#include "lattkit/boolean_triples.hpp"
#include "lattkit/congruence.hpp"
#include "lattkit/corpus.hpp"
#include "lattkit/extensions.hpp"
#include "lattkit/lattice.hpp"

using namespace lattkit;

namespace {

void BM_FromCovers_Fano(benchmark::State& state) {
  FiniteLattice f = named("Fano");
  std::vector<std::pair<int, int>> covers = f.cover_pairs();
  for (auto _ : state) {
    benchmark::DoNotOptimize(FiniteLattice::from_covers(f.size(), covers));
  }
}
BENCHMARK(BM_FromCovers_Fano);

void BM_M3Hat(benchmark::State& state, const char* name) {
  FiniteLattice L = named(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m3_hat(L));
  }
}
BENCHMARK_CAPTURE(BM_M3Hat, C3, "C3");
BENCHMARK_CAPTURE(BM_M3Hat, M3, "M3");
BENCHMARK_CAPTURE(BM_M3Hat, B3, "B3");
BENCHMARK_CAPTURE(BM_M3Hat, M3xC2, "M3xC2");
BENCHMARK_CAPTURE(BM_M3Hat, Fano, "Fano");

void BM_BooleanClosure(benchmark::State& state) {
  FiniteLattice L = named("Fano");
  int n = L.size(), i = 0;
  for (auto _ : state) {
    Triple t{i % n, (i / n) % n, (i / n / n) % n};
    benchmark::DoNotOptimize(boolean_closure(L, t));
    ++i;
  }
}
BENCHMARK(BM_BooleanClosure);

void BM_AllCongruences(benchmark::State& state, const char* name) {
  FiniteLattice L = named(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_congruences(L));
  }
}
BENCHMARK_CAPTURE(BM_AllCongruences, C6, "C6");
BENCHMARK_CAPTURE(BM_AllCongruences, B3, "B3");
BENCHMARK_CAPTURE(BM_AllCongruences, Fano, "Fano");

void BM_AllCongruences_M3HatM3(benchmark::State& state) {
  FiniteLattice K = m3_hat(named("M3")).lattice();
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_congruences(K));
  }
}
BENCHMARK(BM_AllCongruences_M3HatM3);

void BM_VerifyExtension_M3(benchmark::State& state) {
  TripleLattice M = m3_hat(named("M3"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_extension(M.diagonal()));
  }
}
BENCHMARK(BM_VerifyExtension_M3);

void BM_EnumerateLattices(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_lattices(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateLattices)->Arg(5)->Arg(6);

void BM_IsModular_M3HatFano(benchmark::State& state) {
  FiniteLattice K = m3_hat(named("Fano")).lattice();
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_semimodular(K));
  }
}
BENCHMARK(BM_IsModular_M3HatFano);

}  // namespace

BENCHMARK_MAIN();
