#pragma once

#include <cstddef>
#include <vector>

#include "moga/genome.hpp"

namespace moga {

/// Average closeness of an attained set A to a reference set R:
///   (1/|A|) * sqrt( sum over a in A of min_{r in R} ||a - r||^2 ).
/// Zero when A is a subset of R.  Note the divisor sits outside the root,
/// so the indicator shrinks with |A|.
double generational_distance(const std::vector<std::vector<double>>& attained,
                             const std::vector<std::vector<double>>& reference);

/// Coverage of the reference set by the attained set: the same formula
/// with the roles of the two sets swapped, i.e. every reference point is
/// matched to its nearest attained point and the divisor is |reference|.
double inverted_generational_distance(
    const std::vector<std::vector<double>>& attained,
    const std::vector<std::vector<double>>& reference);

/// Relative change of the best scalar fitness between consecutive
/// generations: out[g] = |best[g] - best[g-1]| / max(1, |best[g-1]|) for
/// g >= 1; the result has best.size() - 1 entries (nothing is defined for
/// the first generation).
std::vector<double> convergence_speed(const std::vector<double>& best_fitness);

/// Mean over genes of the population standard deviation of that gene
/// (biased estimator, divide by N).  For antenna populations the unit is
/// mm.  Zero for a population of clones.
double population_diversity(const std::vector<std::vector<double>>& genomes);

/// Footprint shrink of a design against the reference outline, in percent:
/// 100 * (ref_area - Wg*Lg) / ref_area.  Negative when the design grew.
double size_reduction_percent(const AntennaGenome& g,
                              const FixedDesign& fixed = FixedDesign{});

/// Analytic front samples for the two benchmark problems.  zdt1: `count`
/// points with f1 uniform on [0, 1].  dtlz2: `count` deterministic
/// pseudo-uniform directions on the unit-sphere octant (fixed internal
/// seed, so the set is the same in every process).
std::vector<std::vector<double>> zdt1_front(std::size_t count = 1000);
std::vector<std::vector<double>> dtlz2_front(std::size_t count = 1000);

/// Union of several objective sets with every dominated point removed and
/// the survivors sorted lexicographically, so the result does not depend
/// on input order.
std::vector<std::vector<double>> pooled_front(
    const std::vector<std::vector<std::vector<double>>>& sets);

}  // namespace moga
