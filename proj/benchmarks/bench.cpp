// Micro-benchmarks for the hot paths: non-dominated sorting (fast vs the
// naive peel-off it replaces), one surrogate evaluation, and one full engine
// generation.
#include <benchmark/benchmark.h>

#include <vector>

#include "moga/dominance.hpp"
#include "moga/engines.hpp"
#include "moga/rng.hpp"
#include "moga/surrogate.hpp"

namespace {

using moga::Rng;

std::vector<std::vector<double>> random_population(std::size_t n,
                                                   std::size_t m,
                                                   std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<double>> objs(n, std::vector<double>(m));
  for (auto& row : objs)
    for (double& v : row) v = rng.uniform(0.0, 10.0);
  return objs;
}

bool naive_dominates(const std::vector<double>& a,
                     const std::vector<double>& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) strict = true;
  }
  return strict;
}

std::vector<std::vector<std::size_t>> naive_peel(
    const std::vector<std::vector<double>>& objs) {
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<bool> done(objs.size(), false);
  std::size_t left = objs.size();
  while (left > 0) {
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      if (done[i]) continue;
      bool dominated = false;
      for (std::size_t j = 0; j < objs.size(); ++j)
        if (!done[j] && j != i && naive_dominates(objs[j], objs[i]))
          dominated = true;
      if (!dominated) front.push_back(i);
    }
    for (std::size_t i : front) done[i] = true;
    left -= front.size();
    fronts.push_back(std::move(front));
  }
  return fronts;
}

void BM_FastNondominatedSort(benchmark::State& state) {
  const auto objs = random_population(state.range(0), 3, 42);
  for (auto _ : state)
    benchmark::DoNotOptimize(moga::fast_nondominated_sort(objs));
}
BENCHMARK(BM_FastNondominatedSort)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

void BM_NaivePeelOffSort(benchmark::State& state) {
  const auto objs = random_population(state.range(0), 3, 42);
  for (auto _ : state) benchmark::DoNotOptimize(naive_peel(objs));
}
BENCHMARK(BM_NaivePeelOffSort)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

void BM_CrowdingDistance(benchmark::State& state) {
  const auto objs = random_population(state.range(0), 3, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(moga::crowding_distance(objs));
}
BENCHMARK(BM_CrowdingDistance)->Arg(50)->Arg(200);

void BM_SurrogateResponse(benchmark::State& state) {
  const moga::AntennaGenome genome = moga::reference_genome();
  const moga::FixedDesign fixed;
  const moga::SurrogateConfig cfg = moga::SurrogateConfig::calibrated();
  for (auto _ : state)
    benchmark::DoNotOptimize(moga::surrogate_response(genome, fixed, cfg));
}
BENCHMARK(BM_SurrogateResponse);

void BM_SurrogateObjectives(benchmark::State& state) {
  const moga::SurrogateProblem problem;
  const auto x = moga::reference_genome().as_vector();
  for (auto _ : state) benchmark::DoNotOptimize(problem.evaluate(x));
}
BENCHMARK(BM_SurrogateObjectives);

void BM_EngineGeneration(benchmark::State& state) {
  // Whole short runs, reported per generation.
  const moga::SurrogateProblem problem;
  moga::RunConfig cfg;
  cfg.algorithm = static_cast<moga::Algorithm>(state.range(0));
  cfg.population_size = 20;
  cfg.generations = 10;
  cfg.seed = 5;
  cfg.archive_capacity = 20;
  for (auto _ : state) benchmark::DoNotOptimize(moga::run(cfg, problem));
  state.SetItemsProcessed(state.iterations() * cfg.generations);
}
BENCHMARK(BM_EngineGeneration)
    ->Arg(static_cast<int>(moga::Algorithm::scalar))
    ->Arg(static_cast<int>(moga::Algorithm::nsga2))
    ->Arg(static_cast<int>(moga::Algorithm::nsga3))
    ->Arg(static_cast<int>(moga::Algorithm::spea));

}  // namespace

BENCHMARK_MAIN();
