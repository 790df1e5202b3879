// Hot spots of the exact pipeline: row reduction over Q(zeta_n), the radical
// of H, projective covers, single decompositions and whole fusion tables.
//
//   ./bench_elimination --benchmark_filter=Rref

#include "hopfclass/green_ring.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <random>

using namespace hopfclass;

namespace {

/// Dense matrix with small random entries a + b q, rank-deficient by `defect`.
Mat random_matrix(int n, std::size_t size, std::size_t defect, std::uint64_t seed) {
  const CycloField& k = CycloField::get(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  Mat m = Mat::identity(k, size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m(r, c) = k.integer(coef(rng)) + k.integer(coef(rng)) * k.q();
  for (std::size_t r = 0; r < defect && r + 1 < size; ++r)
    for (std::size_t c = 0; c < size; ++c) m(size - 1 - r, c) = m(r, c) + m(r + 1, c);
  return m;
}

const AlgebraContext& context(int n, int p) {
  static std::map<std::pair<int, int>, std::unique_ptr<AlgebraContext>> cache;
  auto& slot = cache[{n, p}];
  if (!slot) {
    AlgebraSpec spec{p < 0 ? Family::TensorTaft : Family::Hpq, n, {}};
    if (p >= 0) spec.p = CycloField::get(n).integer(p);
    slot = std::make_unique<AlgebraContext>(spec);
  }
  return *slot;
}

// p = -1 selects the tensor-product algebra.
void args_families(benchmark::internal::Benchmark* b) {
  for (int p : {-1, 0, 1}) b->Args({3, p});
}

void BM_Rref(benchmark::State& state) {
  const Mat m = random_matrix(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)), 3, 7);
  for (auto _ : state) {
    Mat work = m;
    benchmark::DoNotOptimize(rref(work));
  }
}
BENCHMARK(BM_Rref)->Args({3, 27})->Args({3, 48})->Args({4, 32})->Args({5, 24})->Unit(benchmark::kMillisecond);

void BM_Inverse(benchmark::State& state) {
  const Mat m = random_matrix(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)), 0, 11);
  for (auto _ : state) benchmark::DoNotOptimize(inverse(m));
}
BENCHMARK(BM_Inverse)->Args({3, 27})->Args({4, 32})->Unit(benchmark::kMillisecond);

void BM_JacobsonRadical(benchmark::State& state) {
  const AlgebraContext& ctx = context(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobson_radical(ctx.algebra()));
}
BENCHMARK(BM_JacobsonRadical)->Apply(args_families)->Unit(benchmark::kMillisecond);

void BM_ModuleSystem(benchmark::State& state) {
  const AlgebraContext& ctx = context(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  (void)ctx.radical();
  for (auto _ : state) benchmark::DoNotOptimize(ModuleSystem::build(ctx));
}
BENCHMARK(BM_ModuleSystem)->Apply(args_families)->Unit(benchmark::kMillisecond);

void BM_DecomposeProjectiveSquare(benchmark::State& state) {
  const AlgebraContext& ctx = context(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const ModuleSystem sys = ModuleSystem::build(ctx);
  const Module& p = sys.pim(0);
  const Module m = tensor_module(p, p);
  state.counters["dim"] = static_cast<double>(m.dim());
  for (auto _ : state) benchmark::DoNotOptimize(sys.decompose(m));
}
BENCHMARK(BM_DecomposeProjectiveSquare)->Apply(args_families)->Unit(benchmark::kMillisecond);

void BM_ComputedTable(benchmark::State& state) {
  const AlgebraContext& ctx = context(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const ModuleSystem sys = ModuleSystem::build(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(computed_table(sys));
}
BENCHMARK(BM_ComputedTable)->Args({3, 1})->Unit(benchmark::kSecond)->Iterations(1);

void BM_ClassAlgebraRadical(benchmark::State& state) {
  const FusionTable t = closed_form_table(ClassFamily::TensorTaft, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(class_algebra_radical(t));
}
BENCHMARK(BM_ClassAlgebraRadical)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
