// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "qlpf/extension.hpp"
#include "qlpf/kernels.hpp"
#include "qlpf/random.hpp"
#include "qlpf/splitting.hpp"

using namespace qlpf;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

PolyMatrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PolyMatrix m(f, n, n + 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n + 2; ++j) m(i, j) = random_poly(f, rng, 3, 2);
  return m;
}

void BM_FractionFreeRref(benchmark::State& state) {
  auto f = make_field(3, {"x", "y", "z"});
  const PolyMatrix m = random_matrix(f, static_cast<std::size_t>(state.range(1)), 11);
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(fraction_free_rref(m, exec).rank);
}
BENCHMARK(BM_FractionFreeRref)->ArgsProduct({{0, 1}, {5, 8}})->Unit(benchmark::kMillisecond);

void BM_TensorResidueRank(benchmark::State& state) {
  const std::uint32_t p = 5;
  const std::size_t nvars = 6;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> r(0, p - 1);
  auto residue = [&] {
    Residue x{};
    for (std::size_t v = 0; v < nvars; ++v) x[v] = static_cast<std::uint16_t>(r(rng));
    return x;
  };
  std::vector<Residue> base(static_cast<std::size_t>(state.range(1))), gens(4);
  for (auto& b : base) b = residue();
  for (auto& g : gens) g = residue();
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_residue_rank(base, gens, p, nvars, exec));
}
BENCHMARK(BM_TensorResidueRank)->ArgsProduct({{0, 1}, {64, 640}})->Unit(benchmark::kMicrosecond);

void BM_PispSearch(benchmark::State& state) {
  auto f = make_field(2, {"a1", "a2", "a3", "d"});
  std::vector<RatFunc> a;
  for (std::size_t i = 0; i < 3; ++i) a.push_back(RatFunc::variable(f, i));
  const NeighborInput in(a, 2, RatFunc::variable(f, 3));
  const QuasiPForm phi = in.phi();
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(pisp_search(phi, {}, exec).dims.size());
}
BENCHMARK(BM_PispSearch)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

void BM_VerifyTable(benchmark::State& state) {
  const NeighborInput in = table1_input(5);
  const Exec exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(neighbor_cells(in, exec).size());
}
BENCHMARK(BM_VerifyTable)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
