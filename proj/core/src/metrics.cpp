#include "moga/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "moga/dominance.hpp"
#include "moga/rng.hpp"

namespace moga {
namespace {

double nearest_squared(const std::vector<double>& point,
                       const std::vector<std::vector<double>>& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& other : set) {
    double s = 0.0;
    for (std::size_t m = 0; m < point.size(); ++m) {
      const double d = point[m] - other[m];
      s += d * d;
    }
    best = std::min(best, s);
  }
  return best;
}

}  // namespace

double generational_distance(
    const std::vector<std::vector<double>>& attained,
    const std::vector<std::vector<double>>& reference) {
  if (attained.empty() || reference.empty())
    throw std::invalid_argument("distance indicators need non-empty sets");
  double sum_sq = 0.0;
  for (const auto& a : attained) sum_sq += nearest_squared(a, reference);
  return std::sqrt(sum_sq) / static_cast<double>(attained.size());
}

double inverted_generational_distance(
    const std::vector<std::vector<double>>& attained,
    const std::vector<std::vector<double>>& reference) {
  if (attained.empty() || reference.empty())
    throw std::invalid_argument("distance indicators need non-empty sets");
  double sum_sq = 0.0;
  for (const auto& r : reference) sum_sq += nearest_squared(r, attained);
  return std::sqrt(sum_sq) / static_cast<double>(reference.size());
}

std::vector<double> convergence_speed(
    const std::vector<double>& best_fitness) {
  std::vector<double> out;
  if (best_fitness.size() < 2) return out;
  out.reserve(best_fitness.size() - 1);
  for (std::size_t g = 1; g < best_fitness.size(); ++g) {
    const double prev = best_fitness[g - 1];
    out.push_back(std::abs(best_fitness[g] - prev) /
                  std::max(1.0, std::abs(prev)));
  }
  return out;
}

double population_diversity(const std::vector<std::vector<double>>& genomes) {
  if (genomes.empty()) return 0.0;
  const std::size_t n = genomes.size();
  const std::size_t genes = genomes[0].size();
  double total = 0.0;
  for (std::size_t j = 0; j < genes; ++j) {
    double mean = 0.0;
    for (const auto& g : genomes) mean += g[j];
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (const auto& g : genomes) {
      const double d = g[j] - mean;
      var += d * d;
    }
    total += std::sqrt(var / static_cast<double>(n));
  }
  return total / static_cast<double>(genes);
}

double size_reduction_percent(const AntennaGenome& g,
                              const FixedDesign& fixed) {
  const double ref_area = fixed.substrate_width * fixed.substrate_length;
  return 100.0 * (ref_area - g.wg * g.lg) / ref_area;
}

std::vector<std::vector<double>> zdt1_front(std::size_t count) {
  if (count < 2) throw std::invalid_argument("front needs at least 2 points");
  std::vector<std::vector<double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double f1 =
        static_cast<double>(i) / static_cast<double>(count - 1);
    out.push_back({f1, 1.0 - std::sqrt(f1)});
  }
  return out;
}

std::vector<std::vector<double>> dtlz2_front(std::size_t count) {
  if (count < 2) throw std::invalid_argument("front needs at least 2 points");
  // |N(0,1)| triples normalized to unit length are uniform on the octant.
  // The seed is a constant: the reference set is part of the metric's
  // definition and must be identical in every run.
  Rng rng(0x9e3779b97f4a7c15ull);
  std::vector<std::vector<double>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    double x = std::abs(rng.normal());
    double y = std::abs(rng.normal());
    double z = std::abs(rng.normal());
    double norm = std::sqrt(x * x + y * y + z * z);
    while (norm < 1e-12) {
      x = std::abs(rng.normal());
      y = std::abs(rng.normal());
      z = std::abs(rng.normal());
      norm = std::sqrt(x * x + y * y + z * z);
    }
    out.push_back({x / norm, y / norm, z / norm});
  }
  return out;
}

std::vector<std::vector<double>> pooled_front(
    const std::vector<std::vector<std::vector<double>>>& sets) {
  std::vector<std::vector<double>> pool;
  for (const auto& s : sets) pool.insert(pool.end(), s.begin(), s.end());
  std::vector<std::vector<double>> front;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pool.size() && !dominated; ++j)
      dominated = (j != i) && dominates(pool[j], pool[i]);
    if (!dominated) front.push_back(pool[i]);
  }
  std::sort(front.begin(), front.end());
  front.erase(std::unique(front.begin(), front.end()), front.end());
  return front;
}

}  // namespace moga
