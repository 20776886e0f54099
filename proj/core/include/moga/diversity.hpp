#pragma once

#include <cstddef>
#include <vector>

#include "moga/dominance.hpp"
#include "moga/rng.hpp"

namespace moga {

/// Fitness-sharing settings.  sigma_share is a distance in normalized
/// objective space (each objective scaled to [0, 1] over the population).
struct SharingConfig {
  double sigma_share = 0.1;
  double alpha = 1.0;

  /// Throws std::invalid_argument unless sigma_share > 0 and alpha > 0.
  void validate() const;
};

/// Sharing kernel: 1 - (d / sigma)^alpha for d < sigma, otherwise 0.
/// Monotone non-increasing in d, with sharing_value(0) = 1.
double sharing_value(double distance, const SharingConfig& cfg);

/// Rescales each objective to [0, 1] over the population.  Objectives with
/// zero range map to 0 so they do not contribute to distances.
std::vector<std::vector<double>> normalize_objectives(
    const std::vector<std::vector<double>>& objectives);

/// Niche count of member i: the sum of sharing_value over the distance from
/// i to every population member, i itself included, so the count is always
/// at least 1.  Distances are Euclidean in the normalized vectors.
double niche_count(std::size_t i,
                   const std::vector<std::vector<double>>& normalized,
                   const SharingConfig& cfg);

/// Front-wise shared fitness (higher is better).
///
/// Front 1 starts from dummy fitness initial_dummy (conventionally the
/// population size); each member's adjusted fitness is dummy / niche_count.
/// The next front's dummy is 0.9 x the smallest adjusted fitness of the
/// front before it, which keeps every front-k member below every front-(k-1)
/// member regardless of crowding.  Niche counts are taken over the whole
/// population in normalized objective space.
std::vector<double> shared_fitness(
    const std::vector<std::vector<double>>& objectives,
    const FrontPartition& partition, const SharingConfig& cfg,
    double initial_dummy);

/// All points of the simplex lattice with the given number of divisions per
/// objective: every vector of M non-negative multiples of 1/divisions that
/// sums to 1.  Contains C(M + divisions - 1, divisions) points.
std::vector<std::vector<double>> simplex_lattice(std::size_t objectives,
                                                 std::size_t divisions);

/// Reference-direction environmental selection.
///
/// admitted lists the indices (into `objectives`) of the fronts that fit
/// entirely in the next population; splitting lists the first front that
/// does not.  Selects exactly target_size members: all of admitted plus a
/// subset of splitting chosen by normalized perpendicular-distance
/// association to the reference directions, filling the emptiest niches
/// first.  Ties between equally empty niches and between equally good
/// candidates break by uniform draw from rng.
///
/// Normalization: translate by the per-objective minimum over
/// admitted+splitting, then divide by the intercepts of the hyperplane
/// through the per-axis extreme points (chosen with an achievement
/// scalarizing function); when that system is degenerate the per-objective
/// maxima serve as intercepts.
std::vector<std::size_t> reference_point_select(
    const std::vector<std::vector<double>>& objectives,
    const std::vector<std::size_t>& admitted,
    const std::vector<std::size_t>& splitting,
    const std::vector<std::vector<double>>& reference_directions,
    std::size_t target_size, Rng& rng);

}  // namespace moga
