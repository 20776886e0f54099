#pragma once

#include <utility>
#include <vector>

#include "moga/genome.hpp"
#include "moga/rng.hpp"

namespace moga {

/// Operator settings shared by every engine.
struct VariationParams {
  double crossover_rate = 0.9;    ///< probability the pair is crossed at all
  double crossover_index = 15.0;  ///< SBX distribution index (eta_c)
  double mutation_rate = 0.1;     ///< per-gene mutation probability
  double mutation_index = 20.0;   ///< polynomial distribution index (eta_m)
};

/// Simulated binary crossover on raw vectors.  With probability
/// crossover_rate each gene is recombined (50% chance per gene) using the
/// spread factor beta drawn from the eta_c polynomial; otherwise the parents
/// are copied through.  Children are clamped to the bounds.  Identical
/// parents always produce identical children.
std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    const std::vector<double>& p1, const std::vector<double>& p2,
    const std::vector<double>& lower, const std::vector<double>& upper,
    const VariationParams& params, Rng& rng);

/// Polynomial mutation on a raw vector: each gene mutates independently
/// with probability mutation_rate, perturbed within its bounds by the
/// eta_m polynomial.  Result is clamped to the bounds.
std::vector<double> polynomial_mutation(const std::vector<double>& x,
                                        const std::vector<double>& lower,
                                        const std::vector<double>& upper,
                                        const VariationParams& params,
                                        Rng& rng);

/// Crossover for antenna genomes: SBX on the raw genes followed by repair,
/// so both children are feasible.
std::pair<AntennaGenome, AntennaGenome> crossover(const AntennaGenome& p1,
                                                  const AntennaGenome& p2,
                                                  const ParameterBounds& b,
                                                  const VariationParams& params,
                                                  Rng& rng);

/// Mutation for antenna genomes: polynomial mutation on the raw genes
/// followed by repair.  With mutation_rate == 0 the genome is returned
/// unchanged.
AntennaGenome mutate(const AntennaGenome& g, const ParameterBounds& b,
                     const VariationParams& params, Rng& rng);

}  // namespace moga
