#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "moga/genome.hpp"
#include "moga/rng.hpp"
#include "moga/variation.hpp"

using namespace moga;

namespace {

const std::vector<double> kLower(10, 0.0);
const std::vector<double> kUpper(10, 1.0);

std::vector<double> random_point(Rng& rng) {
  std::vector<double> x(10);
  for (auto& v : x) v = rng.uniform01();
  return x;
}

}  // namespace

TEST_CASE("sbx_crossover: identical parents produce identical children") {
  Rng rng(5);
  const auto p = random_point(rng);
  VariationParams params;
  const auto [c1, c2] = sbx_crossover(p, p, kLower, kUpper, params, rng);
  CHECK(c1 == p);
  CHECK(c2 == p);
}

TEST_CASE("sbx_crossover: rate zero copies the parents through") {
  Rng rng(6);
  const auto p1 = random_point(rng);
  const auto p2 = random_point(rng);
  VariationParams params;
  params.crossover_rate = 0.0;
  const auto [c1, c2] = sbx_crossover(p1, p2, kLower, kUpper, params, rng);
  CHECK(c1 == p1);
  CHECK(c2 == p2);
}

TEST_CASE("sbx_crossover: children always inside the bounds") {
  Rng rng(7);
  VariationParams params;
  for (int t = 0; t < 2000; ++t) {
    const auto p1 = random_point(rng);
    const auto p2 = random_point(rng);
    const auto [c1, c2] = sbx_crossover(p1, p2, kLower, kUpper, params, rng);
    for (std::size_t i = 0; i < c1.size(); ++i) {
      REQUIRE(c1[i] >= kLower[i]);
      REQUIRE(c1[i] <= kUpper[i]);
      REQUIRE(c2[i] >= kLower[i]);
      REQUIRE(c2[i] <= kUpper[i]);
    }
  }
}

TEST_CASE("sbx_crossover: deterministic for a fixed seed") {
  VariationParams params;
  Rng a(123), b(123);
  const auto p1 = random_point(a);
  const auto p2 = random_point(a);
  const auto q1 = random_point(b);
  const auto q2 = random_point(b);
  const auto r1 = sbx_crossover(p1, p2, kLower, kUpper, params, a);
  const auto r2 = sbx_crossover(q1, q2, kLower, kUpper, params, b);
  CHECK(r1.first == r2.first);
  CHECK(r1.second == r2.second);
}

TEST_CASE("polynomial_mutation: rate zero is the identity") {
  Rng rng(8);
  const auto x = random_point(rng);
  VariationParams params;
  params.mutation_rate = 0.0;
  CHECK(polynomial_mutation(x, kLower, kUpper, params, rng) == x);
}

TEST_CASE("polynomial_mutation: rate one perturbs at least one gene") {
  Rng rng(9);
  VariationParams params;
  params.mutation_rate = 1.0;
  for (int t = 0; t < 200; ++t) {
    const auto x = random_point(rng);
    const auto y = polynomial_mutation(x, kLower, kUpper, params, rng);
    CHECK(y != x);
  }
}

TEST_CASE("polynomial_mutation: stays inside the bounds") {
  Rng rng(10);
  VariationParams params;
  params.mutation_rate = 1.0;
  for (int t = 0; t < 2000; ++t) {
    const auto x = random_point(rng);
    const auto y = polynomial_mutation(x, kLower, kUpper, params, rng);
    for (std::size_t i = 0; i < y.size(); ++i) {
      REQUIRE(y[i] >= kLower[i]);
      REQUIRE(y[i] <= kUpper[i]);
    }
  }
}

TEST_CASE("antenna crossover: repaired, feasible children") {
  const ParameterBounds b = ParameterBounds::defaults();
  VariationParams params;
  Rng rng(11);
  for (int t = 0; t < 10000; ++t) {
    const AntennaGenome p1 = random_genome(b, rng);
    const AntennaGenome p2 = random_genome(b, rng);
    const auto [c1, c2] = crossover(p1, p2, b, params, rng);
    REQUIRE(is_feasible(c1, b));
    REQUIRE(is_feasible(c2, b));
  }
}

TEST_CASE("antenna crossover: identical feasible parents pass through") {
  const ParameterBounds b = ParameterBounds::defaults();
  VariationParams params;
  Rng rng(12);
  const AntennaGenome g = random_genome(b, rng);
  const auto [c1, c2] = crossover(g, g, b, params, rng);
  CHECK(c1 == g);
  CHECK(c2 == g);
}

TEST_CASE("antenna mutate: feasible output, identity at rate zero") {
  const ParameterBounds b = ParameterBounds::defaults();
  Rng rng(13);
  VariationParams params;

  params.mutation_rate = 0.0;
  const AntennaGenome g = random_genome(b, rng);
  CHECK(mutate(g, b, params, rng) == g);

  params.mutation_rate = 0.5;
  for (int t = 0; t < 10000; ++t) {
    const AntennaGenome parent = random_genome(b, rng);
    REQUIRE(is_feasible(mutate(parent, b, params, rng), b));
  }
}

TEST_CASE("antenna mutate: full per-gene rate changes the genome") {
  const ParameterBounds b = ParameterBounds::defaults();
  Rng rng(14);
  VariationParams params;
  params.mutation_rate = 1.0;
  for (int t = 0; t < 100; ++t) {
    const AntennaGenome parent = random_genome(b, rng);
    CHECK(mutate(parent, b, params, rng) != parent);
  }
}
