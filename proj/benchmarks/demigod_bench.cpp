#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "demigod/beginner.hpp"
#include "demigod/cayley.hpp"
#include "demigod/certify.hpp"
#include "demigod/coords.hpp"
#include "demigod/sampler.hpp"
#include "demigod/tables.hpp"
#include "demigod/twophase.hpp"

using namespace demigod;

namespace {

const PhaseTables& tables() {
  static const PhaseTables t = PhaseTables::load_or_build(resolve_tables_dir("tables"));
  return t;
}

std::vector<CubieState> samples(std::size_t n) {
  std::vector<CubieState> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_uniform({12345, SamplerScheme::fix}, i));
  return out;
}

void BM_Compose(benchmark::State& state) {
  const auto s = samples(64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(s[i & 63], s[(i + 1) & 63]));
    ++i;
  }
}
BENCHMARK(BM_Compose);

void BM_SampleUniform(benchmark::State& state) {
  const auto scheme = static_cast<SamplerScheme>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_uniform({7, scheme}, i++));
  state.SetLabel(std::string(to_string(scheme)));
}
BENCHMARK(BM_SampleUniform)->Arg(0)->Arg(1);

void BM_Phase1Coords(benchmark::State& state) {
  const auto s = samples(64);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& c = s[i++ & 63];
    benchmark::DoNotOptimize(coord::flip(c) + coord::twist(c) + coord::slice_sorted(c));
  }
}
BENCHMARK(BM_Phase1Coords);

void BM_Phase1Lookup(benchmark::State& state) {
  const auto& t = tables();
  std::mt19937_64 rng(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(t.phase1_depth(static_cast<int>(rng() % coord::kFlip), static_cast<int>(rng() % coord::kTwist),
                                            static_cast<int>(rng() % coord::kSliceSorted)));
}
BENCHMARK(BM_Phase1Lookup);

void BM_LoadTables(benchmark::State& state) {
  const auto file = PhaseTables::cache_path(resolve_tables_dir("tables"));
  tables();
  for (auto _ : state) benchmark::DoNotOptimize(PhaseTables::load(file));
}
BENCHMARK(BM_LoadTables)->Unit(benchmark::kMillisecond)->Iterations(3);

// Time per state at a given node budget (in ms-equivalents); reports the mean length.
void BM_SolveTwoPhase(benchmark::State& state) {
  const auto& t = tables();
  const auto s = samples(32);
  const SolveBudget budget{24, static_cast<int>(state.range(0)), true};
  std::size_t i = 0, total = 0, solved = 0;
  for (auto _ : state) {
    total += solve_twophase(s[i++ % s.size()], budget, t).length();
    ++solved;
  }
  state.counters["mean_length"] = static_cast<double>(total) / static_cast<double>(solved);
}
BENCHMARK(BM_SolveTwoPhase)->Arg(5)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SolveTwoPhaseNodes(benchmark::State& state) {
  const auto& t = tables();
  const auto s = samples(8);
  std::size_t i = 0;
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    SolveStats st;
    solve_twophase(s[i++ % s.size()], {24, 50, true}, t, &st);
    nodes += st.nodes;
  }
  state.counters["nodes"] = benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_SolveTwoPhaseNodes)->Unit(benchmark::kMillisecond);

void BM_SolveBeginner(benchmark::State& state) {
  const auto s = samples(256);
  solve_beginner(s[0]);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_beginner(s[i++ & 255]));
}
BENCHMARK(BM_SolveBeginner)->Unit(benchmark::kMicrosecond);

void BM_VerifyCertificate(benchmark::State& state) {
  const auto s = samples(64);
  std::vector<MoveSequence> sols;
  for (const auto& c : s) sols.push_back(solve_beginner(c));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_certificate(s[i & 63], sols[i & 63]));
    ++i;
  }
}
BENCHMARK(BM_VerifyCertificate)->Unit(benchmark::kMicrosecond);

void BM_PocketCubeBfs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pocket_cube_bfs());
}
BENCHMARK(BM_PocketCubeBfs)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_HypercubeMean(benchmark::State& state) {
  const SmallGraph g = hypercube_graph(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mean_distance(g));
}
BENCHMARK(BM_HypercubeMean)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
