#include <benchmark/benchmark.h>

#include "esakia/constructions.hpp"
#include "esakia/duality.hpp"
#include "esakia/terms.hpp"
#include "esakia/variety.hpp"

using namespace esakia;

namespace {

void BM_AllUpsets(benchmark::State& state) {
  FinitePoset p = x_n_tower(3, (int)state.range(0), true).poset;
  for (auto _ : state) benchmark::DoNotOptimize(p.all_upsets());
}
BENCHMARK(BM_AllUpsets)->Arg(2)->Arg(4);

void BM_PosetIsomorphism(benchmark::State& state) {
  FinitePoset p = x_n_tower(2, 2, true).poset;
  // relabel by reversing point order
  int n = p.size();
  std::vector<PointSet> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(n - 1 - i, n - 1 - j)) up[i] |= bit(j);
  FinitePoset q = FinitePoset::from_up_rows(n, up);
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(p, q));
}
BENCHMARK(BM_PosetIsomorphism);

void BM_PrimeFilters(benchmark::State& state) {
  HeytingAlgebra a = dual_algebra(x_n_tower(2, 3, true).poset);
  for (auto _ : state) benchmark::DoNotOptimize(prime_filters(a));
}
BENCHMARK(BM_PrimeFilters);

void BM_Validates(benchmark::State& state) {
  HeytingAlgebra a = dual_algebra(x_n_tower(2, 2, true).poset);
  Equation eq{depth_term((int)state.range(0)), Term::one()};
  for (auto _ : state) benchmark::DoNotOptimize(validates(a, eq));
}
BENCHMARK(BM_Validates)->Arg(2)->Arg(3);

void BM_EnumeratePosets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets((int)state.range(0)));
}
BENCHMARK(BM_EnumeratePosets)->Arg(5)->Arg(6);

// the pair search behind epicness decisions is the hot path of the suite
void BM_EpicPairSearch(benchmark::State& state) {
  HeytingAlgebra g = alg_sum(diamond(), diamond());
  VarietyPresentation v{{g}};
  HeytingAlgebra b = dual_algebra(v.fsi_representatives().back());
  auto subs = enumerate_subalgebras(b);
  for (auto _ : state) {
    for (const auto& sub : subs)
      if (sub.proper()) benchmark::DoNotOptimize(is_epic(b, sub, v));
  }
}
BENCHMARK(BM_EpicPairSearch);

void BM_EsProperty(benchmark::State& state) {
  HeytingAlgebra g = alg_sum(diamond(), bool2());
  for (auto _ : state) {
    VarietyPresentation v{{g}};
    benchmark::DoNotOptimize(es_property(v));
  }
}
BENCHMARK(BM_EsProperty);

}  // namespace

BENCHMARK_MAIN();
