#include <benchmark/benchmark.h>

#include "coulomb/abelian.hpp"
#include "coulomb/higgs.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/rng.hpp"
#include "coulomb/theory.hpp"

namespace {

using namespace coulomb;

GaugeTheory u2_four_flavors() {
  GaugeTheory th;
  th.gl_factors = {2};
  for (int i = 0; i < 4; ++i) {
    th.weights.push_back({1, 0});
    th.weights.push_back({0, 1});
  }
  return validate_theory(std::move(th));
}

GaugeTheory rank2_torus() {
  GaugeTheory th;
  th.torus_rank = 2;
  th.weights = {{1, 0}, {0, 1}, {1, -1}};
  return validate_theory(std::move(th));
}

void bm_hilbert_nonabelian(benchmark::State& state) {
  const GaugeTheory th = u2_four_flavors();
  HilbertOptions opt;
  opt.order = static_cast<int>(state.range(0));
  opt.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_series(th, opt));
  }
}
BENCHMARK(bm_hilbert_nonabelian)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void bm_hilbert_refined(benchmark::State& state) {
  const GaugeTheory th = rank2_torus();
  HilbertOptions opt;
  opt.order = static_cast<int>(state.range(0));
  opt.refined = true;
  opt.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_series(th, opt));
  }
}
BENCHMARK(bm_hilbert_refined)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void bm_multiply_quantized(benchmark::State& state) {
  AbelianAlgebra alg = AbelianAlgebra::from_theory(rank2_torus());
  Rng rng(2024);
  std::vector<AbelianElement> elems;
  for (int i = 0; i < 32; ++i) {
    AbelianElement x = alg.zero();
    for (int t = 0; t < 3; ++t) {
      std::vector<Int> lam = {rng.uniform(-3, 3), rng.uniform(-3, 3)};
      CoefficientPoly p(2);
      std::vector<int> exps = {static_cast<int>(rng.uniform(0, 2)),
                               static_cast<int>(rng.uniform(0, 2)),
                               static_cast<int>(rng.uniform(0, 1))};
      p.add_term(std::move(exps), Rational(rng.uniform(1, 5)));
      x.add(lam, p);
    }
    elems.push_back(std::move(x));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const AbelianElement& a = elems[i % elems.size()];
    const AbelianElement& b = elems[(i + 7) % elems.size()];
    benchmark::DoNotOptimize(alg.multiply_quantized(a, b));
    ++i;
  }
}
BENCHMARK(bm_multiply_quantized);

void bm_higgs_dimensions(benchmark::State& state) {
  HiggsProblem hp;
  hp.torus_rank = 2;
  hp.charges = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
  const int cap = static_cast<int>(state.range(0));
  hp.degree_cap = cap;
  for (auto _ : state) {
    benchmark::DoNotOptimize(higgs_dimensions_up_to(hp, cap));
  }
}
BENCHMARK(bm_higgs_dimensions)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void bm_graded_dimensions(benchmark::State& state) {
  AbelianAlgebra alg = AbelianAlgebra::from_theory(rank2_torus());
  const int cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alg.graded_dimensions_up_to(cap));
  }
}
BENCHMARK(bm_graded_dimensions)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
