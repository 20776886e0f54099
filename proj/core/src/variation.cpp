#include "moga/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moga {
namespace {

// Parents closer than this are treated as identical per gene; SBX would
// otherwise divide by their distance.
constexpr double kSbxEps = 1e-14;

void check_box(std::size_t n, const std::vector<double>& lower,
               const std::vector<double>& upper) {
  if (lower.size() != n || upper.size() != n)
    throw std::invalid_argument("bounds size does not match vector size");
}

}  // namespace

std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    const std::vector<double>& p1, const std::vector<double>& p2,
    const std::vector<double>& lower, const std::vector<double>& upper,
    const VariationParams& params, Rng& rng) {
  if (p1.size() != p2.size())
    throw std::invalid_argument("parents differ in size");
  check_box(p1.size(), lower, upper);

  std::vector<double> c1 = p1;
  std::vector<double> c2 = p2;
  if (rng.uniform01() >= params.crossover_rate) return {c1, c2};

  const double eta = params.crossover_index;
  for (std::size_t j = 0; j < p1.size(); ++j) {
    if (rng.uniform01() >= 0.5) continue;  // each gene recombines half the time
    const double y1 = p1[j];
    const double y2 = p2[j];
    if (std::abs(y1 - y2) <= kSbxEps) continue;

    const double u = rng.uniform01();
    double beta;
    if (u <= 0.5)
      beta = std::pow(2.0 * u, 1.0 / (eta + 1.0));
    else
      beta = std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));

    const double a = 0.5 * ((1.0 + beta) * y1 + (1.0 - beta) * y2);
    const double b = 0.5 * ((1.0 - beta) * y1 + (1.0 + beta) * y2);
    c1[j] = std::clamp(a, lower[j], upper[j]);
    c2[j] = std::clamp(b, lower[j], upper[j]);
  }
  return {c1, c2};
}

std::vector<double> polynomial_mutation(const std::vector<double>& x,
                                        const std::vector<double>& lower,
                                        const std::vector<double>& upper,
                                        const VariationParams& params,
                                        Rng& rng) {
  check_box(x.size(), lower, upper);
  std::vector<double> y = x;
  const double eta = params.mutation_index;
  const double mut_pow = 1.0 / (eta + 1.0);

  for (std::size_t j = 0; j < y.size(); ++j) {
    if (rng.uniform01() >= params.mutation_rate) continue;
    const double yl = lower[j];
    const double yu = upper[j];
    const double range = yu - yl;
    if (range <= 0.0) continue;  // pinned gene

    const double delta1 = (y[j] - yl) / range;
    const double delta2 = (yu - y[j]) / range;
    const double u = rng.uniform01();

    double deltaq;
    if (u <= 0.5) {
      const double xy = 1.0 - delta1;
      const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
      deltaq = std::pow(val, mut_pow) - 1.0;
    } else {
      const double xy = 1.0 - delta2;
      const double val =
          2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
      deltaq = 1.0 - std::pow(val, mut_pow);
    }
    y[j] = std::clamp(y[j] + deltaq * range, yl, yu);
  }
  return y;
}

std::pair<AntennaGenome, AntennaGenome> crossover(const AntennaGenome& p1,
                                                  const AntennaGenome& p2,
                                                  const ParameterBounds& b,
                                                  const VariationParams& params,
                                                  Rng& rng) {
  const std::vector<double> lower(b.lower.begin(), b.lower.end());
  const std::vector<double> upper(b.upper.begin(), b.upper.end());
  auto [c1, c2] =
      sbx_crossover(p1.as_vector(), p2.as_vector(), lower, upper, params, rng);
  auto to_genome = [&](const std::vector<double>& v) {
    std::array<double, kGenomeSize> a{};
    std::copy(v.begin(), v.end(), a.begin());
    return repair(a, b);
  };
  return {to_genome(c1), to_genome(c2)};
}

AntennaGenome mutate(const AntennaGenome& g, const ParameterBounds& b,
                     const VariationParams& params, Rng& rng) {
  const std::vector<double> lower(b.lower.begin(), b.lower.end());
  const std::vector<double> upper(b.upper.begin(), b.upper.end());
  auto y = polynomial_mutation(g.as_vector(), lower, upper, params, rng);
  std::array<double, kGenomeSize> a{};
  std::copy(y.begin(), y.end(), a.begin());
  return repair(a, b);
}

}  // namespace moga
