#include "moga/benchmarks.hpp"

#include <cmath>
#include <stdexcept>

namespace moga {
namespace {

constexpr double kHalfPi = 1.5707963267948966192313216916398;

}  // namespace

std::vector<double> zdt1(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("zdt1 needs at least 2 genes");
  double tail = 0.0;
  for (std::size_t i = 1; i < n; ++i) tail += x[i];
  const double g = 1.0 + 9.0 * tail / static_cast<double>(n - 1);
  const double f1 = x[0];
  const double f2 = g * (1.0 - std::sqrt(f1 / g));
  return {f1, f2};
}

std::vector<double> dtlz2(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 3) throw std::invalid_argument("dtlz2 needs at least 3 genes");
  double g = 0.0;
  for (std::size_t i = 2; i < n; ++i) {
    const double d = x[i] - 0.5;
    g += d * d;
  }
  const double scale = 1.0 + g;
  const double a0 = x[0] * kHalfPi;
  const double a1 = x[1] * kHalfPi;
  return {
      scale * std::cos(a0) * std::cos(a1),
      scale * std::cos(a0) * std::sin(a1),
      scale * std::sin(a0),
  };
}

Zdt1Problem::Zdt1Problem(std::size_t dimension)
    : lower_(dimension, 0.0), upper_(dimension, 1.0) {
  if (dimension < 2)
    throw std::invalid_argument("zdt1 needs at least 2 genes");
}

Dtlz2Problem::Dtlz2Problem(std::size_t dimension)
    : lower_(dimension, 0.0), upper_(dimension, 1.0) {
  if (dimension < 3)
    throw std::invalid_argument("dtlz2 needs at least 3 genes");
}

}  // namespace moga
