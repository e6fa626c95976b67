#include <benchmark/benchmark.h>

#include "freeab/freeab.hpp"

using namespace freeab;

namespace {

ModularRing zmod(std::int64_t n) { return ModularRing(RingSpec::integers_mod(n)); }

void BM_SmithInteger(benchmark::State& state) {
  const IntegerRing zz;
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(kDefaultSeed);
  auto a = random_matrix(zz, n, n, rng, 9);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithInteger)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_SmithModular(benchmark::State& state) {
  ModularRing z12 = zmod(12);
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(kDefaultSeed);
  auto a = random_matrix(z12, n, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithModular)->Arg(4)->Arg(16)->Arg(32)->Arg(64);

void BM_HomotopySolve(benchmark::State& state) {
  ModularRing z4 = zmod(4);
  const auto r = static_cast<std::size_t>(state.range(0));
  Rng rng(kDefaultSeed);
  auto g1 = random_matrix(z4, r, r, rng), f2 = random_matrix(z4, r, r, rng);
  auto c = g1 * random_matrix(z4, r, r, rng) + random_matrix(z4, r, r, rng) * f2;
  for (auto _ : state) benchmark::DoNotOptimize(homotopy_solve(g1, f2, c));
}
BENCHMARK(BM_HomotopySolve)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_EvalObject(benchmark::State& state) {
  ModularRing z6 = zmod(6);
  const auto r = static_cast<std::size_t>(state.range(0));
  Rng rng(kDefaultSeed);
  auto x = random_object(z6, Side::Right, Ranks{r, r, r}, rng);
  auto m = FpModule<ModularRing>::diagonal(z6, Side::Right, {2, 6, 6});
  for (auto _ : state) benchmark::DoNotOptimize(eval_object(x, m));
}
BENCHMARK(BM_EvalObject)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_IntegerEval(benchmark::State& state) {
  const IntegerRing zz;
  const auto r = static_cast<std::size_t>(state.range(0));
  Rng rng(kDefaultSeed);
  auto x = random_object(zz, Side::Right, Ranks{r, r, r}, rng, 9);
  auto m = FpModule<IntegerRing>::diagonal(zz, Side::Right, {BigInt(0), BigInt(4), BigInt(12)});
  for (auto _ : state) benchmark::DoNotOptimize(eval_object(x, m));
}
BENCHMARK(BM_IntegerEval)->Arg(1)->Arg(2)->Arg(4);

void BM_KappaRoundTrip(benchmark::State& state) {
  const IntegerRing zz;
  const auto r = static_cast<std::size_t>(state.range(0));
  Rng rng(kDefaultSeed);
  auto x = random_object(zz, Side::Right, Ranks{r, r, r}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphism(kappa_comparison(x)));
}
BENCHMARK(BM_KappaRoundTrip)->Arg(1)->Arg(2)->Arg(3);

void BM_DefinableContains(benchmark::State& state) {
  ModularRing z6 = zmod(6);
  Rng rng(kDefaultSeed);
  DefinableSpec<ModularRing> spec(z6, Side::Right);
  spec.add(random_matrix(z6, 3, 3, rng), random_matrix(z6, 3, 3, rng));
  auto mods = finite_modules(z6, Side::Right, 36);
  for (auto _ : state)
    for (const auto& m : mods) benchmark::DoNotOptimize(definable_contains(spec, m));
}
BENCHMARK(BM_DefinableContains);

}  // namespace

BENCHMARK_MAIN();
