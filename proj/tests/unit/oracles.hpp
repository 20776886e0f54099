#pragma once

// Independent re-implementations used as test oracles.  Everything here is
// written the slow, obvious way on purpose: the value of these checks comes
// from the code path being different from the library's.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "moga/rng.hpp"

namespace oracle {

/// Componentwise minimization dominance, re-stated from scratch.
inline bool dominates(const std::vector<double>& a,
                      const std::vector<double>& b) {
  bool strictly_better_somewhere = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k]) strictly_better_somewhere = true;
  }
  return strictly_better_somewhere;
}

/// Peel-off non-dominated sorting: repeatedly remove the non-dominated
/// members of what is left.  O(M N^3), fine for test sizes.
inline std::vector<std::vector<std::size_t>> peel_off_fronts(
    const std::vector<std::vector<double>>& objectives) {
  std::vector<std::size_t> remaining(objectives.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::vector<std::vector<std::size_t>> fronts;
  while (!remaining.empty()) {
    std::vector<std::size_t> front;
    for (std::size_t i : remaining) {
      bool dominated = false;
      for (std::size_t j : remaining)
        if (j != i && dominates(objectives[j], objectives[i])) {
          dominated = true;
          break;
        }
      if (!dominated) front.push_back(i);
    }
    std::vector<std::size_t> next;
    for (std::size_t i : remaining)
      if (std::find(front.begin(), front.end(), i) == front.end())
        next.push_back(i);
    fronts.push_back(std::move(front));
    remaining = std::move(next);
  }
  return fronts;
}

/// 1 + number of members dominating i, counted by brute force.
inline std::vector<std::size_t> brute_rank(
    const std::vector<std::vector<double>>& objectives) {
  std::vector<std::size_t> rank(objectives.size(), 1);
  for (std::size_t i = 0; i < objectives.size(); ++i)
    for (std::size_t j = 0; j < objectives.size(); ++j)
      if (j != i && dominates(objectives[j], objectives[i])) ++rank[i];
  return rank;
}

/// Random objective set: n vectors of dimension m, components in [0, 1).
inline std::vector<std::vector<double>> random_objectives(std::size_t n,
                                                          std::size_t m,
                                                          moga::Rng& rng) {
  std::vector<std::vector<double>> out(n, std::vector<double>(m));
  for (auto& row : out)
    for (auto& v : row) v = rng.uniform01();
  return out;
}

/// Binomial coefficient, additive Pascal recurrence (no overflow at test
/// sizes).
inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i)
    for (std::uint64_t j = std::min(i, static_cast<std::uint64_t>(k)); j >= 1;
         --j)
      row[j] += row[j - 1];
  return row[k];
}

}  // namespace oracle
