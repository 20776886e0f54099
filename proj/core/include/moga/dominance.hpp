#pragma once

#include <cstddef>
#include <vector>

namespace moga {

/// All objectives are minimized.  a dominates b when a is no worse in every
/// objective and strictly better in at least one.  Equal vectors do not
/// dominate each other.
bool dominates(const std::vector<double>& a, const std::vector<double>& b);

/// Dominance-depth partition of a population.
///
/// fronts[0] holds the indices of the non-dominated members; every member
/// of fronts[k] (k >= 1) is dominated by at least one member of
/// fronts[k-1].  rank[i] is the 1-based front number of individual i.
struct FrontPartition {
  std::vector<std::vector<std::size_t>> fronts;
  std::vector<std::size_t> rank;
};

/// Non-dominated sorting with the dominance-count/dominated-set bookkeeping
/// scheme: O(M N^2) comparisons instead of re-scanning the population per
/// front.  Duplicated objective vectors share a front.
FrontPartition fast_nondominated_sort(
    const std::vector<std::vector<double>>& objectives);

/// Dominance-count ranking: rank(i) = 1 + number of population members that
/// dominate i.  Non-dominated members get rank 1.  Unlike dominance-depth
/// ranks these can skip values.
std::vector<std::size_t> dominance_count_rank(
    const std::vector<std::vector<double>>& objectives);

/// Crowding distance of each member of one front (mutually non-dominated
/// set).  Per objective the extreme members receive infinity and interior
/// members accumulate the neighbour gap normalized by the objective range;
/// a zero range contributes nothing.  Members with identical objective
/// vectors receive identical distances (they are grouped before the
/// neighbour scan, so tie order cannot split them).  Fronts of one or two
/// members are all-infinite.
std::vector<double> crowding_distance(
    const std::vector<std::vector<double>>& front);

}  // namespace moga
