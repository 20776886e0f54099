#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "moga/diversity.hpp"
#include "moga/dominance.hpp"
#include "moga/problem.hpp"
#include "moga/rng.hpp"
#include "moga/variation.hpp"

namespace moga {

/// The six optimization engines.  All share initialization, variation
/// operators, and the generation loop; they differ in how fitness is
/// assigned and who survives.
enum class Algorithm { pga, nsga1, nsga2, nsga3, spea, scalar };

Algorithm algorithm_from_string(const std::string& name);
std::string to_string(Algorithm a);

/// Everything a run depends on besides the problem itself.  The defaults
/// reproduce the small reference experiment (population 10, 10
/// generations) on whichever problem they are pointed at.
struct RunConfig {
  Algorithm algorithm = Algorithm::scalar;
  std::size_t population_size = 10;
  std::size_t generations = 10;
  std::uint64_t seed = 0;

  /// Scalarization weights, one per objective; empty means all ones.
  std::vector<double> weights;

  VariationParams variation;
  SharingConfig sharing;

  /// SPEA external archive capacity.
  std::size_t archive_capacity = 10;

  /// Simplex-lattice divisions for the reference directions (nsga3).
  std::size_t reference_divisions = 4;

  /// Worker threads for population evaluation.  Results are stored by
  /// individual index, so the value changes wall-clock time only, never
  /// the outcome.
  std::size_t jobs = 1;

  /// Use fitness-proportionate selection instead of binary tournaments in
  /// the pure front-plus-sharing engine (nsga1).
  bool proportionate_selection = false;

  /// Throws std::invalid_argument when a field is out of range or the
  /// weights do not fit the problem's objective count.
  void validate(std::size_t objective_count) const;

  /// weights padded/validated to the objective count.
  std::vector<double> effective_weights(std::size_t objective_count) const;
};

/// One candidate solution: decision vector and its objectives.
struct Individual {
  std::vector<double> x;
  std::vector<double> f;
};

/// Weighted sum of objective magnitudes; every engine reports progress on
/// this scale, and the scalar engine optimizes it directly (maximized).
double scalar_fitness(const std::vector<double>& objectives,
                      const std::vector<double>& weights);

/// Per-generation record of a run.  gd/igd/convergence_speed are filled by
/// the caller once a reference front exists (it may only be known after
/// the run); the engine leaves them NaN.
struct GenerationTrace {
  std::size_t generation = 0;  ///< 1-based
  double best_fitness = 0.0;
  double diversity = 0.0;
  double gd = std::numeric_limits<double>::quiet_NaN();
  double igd = std::numeric_limits<double>::quiet_NaN();
  double convergence_speed = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<double>> front_objectives;
};

struct RunResult {
  std::vector<Individual> population;  ///< final population
  std::vector<Individual> front;       ///< final non-dominated set / archive
  Individual best;                     ///< highest scalar fitness found
  double best_fitness = 0.0;
  std::vector<GenerationTrace> trace;  ///< exactly `generations` entries
};

/// What an observer sees after each generation: the trace row plus views
/// of the population and the engine's current front or archive.
struct GenerationSnapshot {
  const GenerationTrace& trace;
  const std::vector<Individual>& population;
  const std::vector<Individual>& front;
};
using GenerationObserver = std::function<void(const GenerationSnapshot&)>;

/// Draws two members uniformly (independently, so the same index can come
/// up twice) and returns the better one under `better`; exact ties go to
/// the first one drawn.
std::size_t binary_tournament(
    std::size_t population_size,
    const std::function<bool(std::size_t, std::size_t)>& better, Rng& rng);

/// Elitist survivor selection used by nsga2: whole fronts in dominance
/// order, then the splitting front by descending crowding distance (ties
/// by index).  Returns the indices of the survivors, in admission order.
std::vector<std::size_t> crowded_survivor_select(
    const std::vector<std::vector<double>>& objectives,
    std::size_t target_size);

/// Strength-based fitness over a combined population+archive pool:
/// strength(i) = (#members i dominates) / (pool size + 1); fitness(i) =
/// 1 + sum of the strengths of i's dominators.  Lower is better;
/// non-dominated members score exactly 1.
std::vector<double> strength_fitness(
    const std::vector<std::vector<double>>& objectives);

/// Non-dominated members of the pool, truncated to `capacity` by keeping
/// the members with the largest crowding distance.  Returns indices into
/// the pool.
std::vector<std::size_t> archive_select(
    const std::vector<std::vector<double>>& objectives, std::size_t capacity);

/// Runs one engine for exactly config.generations generations.  The
/// initial population is uniform-random inside the bounds (repaired);
/// variation is SBX plus polynomial mutation for every engine.  With a
/// fixed (seed, config) the result is identical on every call, whatever
/// config.jobs says.  The observer, when given, fires once per generation
/// after that generation's bookkeeping is complete.
RunResult run(const RunConfig& config, const Problem& problem,
              const GenerationObserver& observer = {});

}  // namespace moga
