#include <benchmark/benchmark.h>

#include "efflevi/fixtures.hpp"
#include "efflevi/harness.hpp"
#include "efflevi/heights.hpp"
#include "efflevi/hnf.hpp"
#include "efflevi/lattice.hpp"
#include "efflevi/levi.hpp"
#include "efflevi/lie.hpp"
#include "efflevi/rng.hpp"
#include "efflevi/siegel.hpp"
#include "efflevi/unipotent.hpp"

using namespace efflevi;

namespace {

IntMat random_square(Rng& rng, int n, long bound) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Int(rng.uniform(-bound, bound));
  return m;
}

void bm_hnf(benchmark::State& state) {
  Rng rng(1);
  IntMat a = random_square(rng, static_cast<int>(state.range(0)), 50);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(a));
}
BENCHMARK(bm_hnf)->Arg(4)->Arg(8)->Arg(12);

void bm_snf(benchmark::State& state) {
  Rng rng(2);
  IntMat a = random_square(rng, static_cast<int>(state.range(0)), 20);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(bm_snf)->Arg(4)->Arg(6)->Arg(8);

void bm_lll(benchmark::State& state) {
  Rng rng(3);
  int n = static_cast<int>(state.range(0));
  std::vector<RatVec> basis(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) basis[i][j] = Rat(rng.uniform(-200, 200));
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(basis, Rat(1)));
}
BENCHMARK(bm_lll)->Arg(4)->Arg(6)->Arg(8);

void bm_siegel_kernel(benchmark::State& state) {
  Rng rng(4);
  int n = static_cast<int>(state.range(0));
  IntMat a(n - 1, n);
  do {
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = Int(rng.uniform(-3, 3));
  } while (rank(a) != n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(siegel_kernel_basis(a));
}
BENCHMARK(bm_siegel_kernel)->Arg(3)->Arg(4)->Arg(5);

void bm_levi(benchmark::State& state) {
  Fixture fx = fixture(state.range(0) == 0 ? "sl2_semidirect"
                                           : "sl2_plus_abelian_sl4");
  Rng rng(5);
  IntMat gamma = random_conjugator(fx.algebra.N, 10, rng);
  IntMat ginv = inverse_unimodular(gamma);
  std::vector<IntVec> cs;
  for (const IntMat& x : fx.algebra.basis)
    cs.push_back(sl_coords_int(gamma * x * ginv));
  LieSubalgebra g = lie_from_coord_span(fx.algebra.N, cs, false);
  for (auto _ : state) benchmark::DoNotOptimize(effective_levi(g));
}
BENCHMARK(bm_levi)->Arg(0)->Arg(1);

void bm_height_subspace(benchmark::State& state) {
  Fixture fx = fixture("nilradical_borel_sl4");
  Rng rng(6);
  IntMat gamma = random_conjugator(4, 100, rng);
  IntMat ginv = inverse_unimodular(gamma);
  std::vector<IntVec> cs;
  for (const IntMat& x : fx.algebra.basis)
    cs.push_back(sl_coords_int(gamma * x * ginv));
  LieSubalgebra g = lie_from_coord_span(4, cs, false);
  for (auto _ : state) benchmark::DoNotOptimize(height_subspace(g));
}
BENCHMARK(bm_height_subspace);

void bm_siegel_reduce(benchmark::State& state) {
  Rng rng(7);
  int n = static_cast<int>(state.range(0));
  RatMat g = to_rat(random_conjugator(n, 60, rng));
  for (auto _ : state) benchmark::DoNotOptimize(siegel_reduce(g));
}
BENCHMARK(bm_siegel_reduce)->Arg(3)->Arg(4);

void bm_height(benchmark::State& state) {
  Rng rng(8);
  int n = static_cast<int>(state.range(0));
  RatMat u = RatMat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) u(i, j) = Rat(rng.uniform(-40, 40));
  SElement g;
  g.places = {inf_place()};
  g.components = {u};
  for (auto _ : state) benchmark::DoNotOptimize(height_S(g));
}
BENCHMARK(bm_height)->Arg(3)->Arg(4);

void bm_eigenvalue_product(benchmark::State& state) {
  Rng rng(9);
  int n = static_cast<int>(state.range(0));
  IntMat w = random_square(rng, n, 30);
  Int s = 0;
  for (int i = 0; i + 1 < n; ++i) s += w(i, i);
  w(n - 1, n - 1) = -s;
  RatMat wr = to_rat(w);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalue_product(wr));
}
BENCHMARK(bm_eigenvalue_product)->Arg(4)->Arg(6);

void bm_exp_log(benchmark::State& state) {
  Rng rng(10);
  int n = static_cast<int>(state.range(0));
  RatMat x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      x(i, j) = rat(rng.uniform(-9, 9), rng.uniform(1, 4));
  for (auto _ : state)
    benchmark::DoNotOptimize(log_unipotent(exp_nilpotent(x)));
}
BENCHMARK(bm_exp_log)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
