#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "moga/genome.hpp"
#include "moga/metrics.hpp"
#include "moga/rng.hpp"
#include "oracles.hpp"

using namespace moga;

TEST_CASE("generational_distance: pinned unit examples") {
  CHECK(generational_distance({{0, 0}}, {{0, 0}}) == 0.0);
  CHECK(generational_distance({{3, 4}}, {{0, 0}}) ==
        doctest::Approx(5.0).epsilon(1e-12));
  // Nearest-neighbour distances 0 and sqrt(2); divisor outside the root.
  CHECK(generational_distance({{0, 0}, {1, 1}}, {{0, 0}, {2, 2}}) ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
}

TEST_CASE("generational_distance: zero iff attained is a subset") {
  CHECK(generational_distance({{1, 2}, {3, 4}},
                              {{3, 4}, {1, 2}, {9, 9}}) == 0.0);
  CHECK(generational_distance({{1, 2}, {3, 4.0001}}, {{1, 2}, {3, 4}}) > 0.0);
}

TEST_CASE("inverted_generational_distance: pinned unit examples") {
  // Attained covers the whole reference set.
  CHECK(inverted_generational_distance({{0, 0}, {2, 2}, {5, 5}},
                                       {{0, 0}, {2, 2}}) == 0.0);
  CHECK(inverted_generational_distance({{0, 0}}, {{3, 4}}) ==
        doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("gd/igd: role-swap identity on random set pairs") {
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const auto a = oracle::random_objectives(1 + rng.uniform_index(20), 3, rng);
    const auto b = oracle::random_objectives(1 + rng.uniform_index(20), 3, rng);
    const double igd = inverted_generational_distance(a, b);
    const double gd_swapped = generational_distance(b, a);
    CHECK(igd == doctest::Approx(gd_swapped).epsilon(1e-12));
  }
}

TEST_CASE("gd/igd: empty sets are rejected") {
  CHECK_THROWS_AS(generational_distance({}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(generational_distance({{0, 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(inverted_generational_distance({}, {{0, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(inverted_generational_distance({{0, 0}}, {}),
                  std::invalid_argument);
}

TEST_CASE("gd/igd: scaling all objectives scales the indicator") {
  Rng rng(43);
  const auto a = oracle::random_objectives(15, 2, rng);
  const auto b = oracle::random_objectives(10, 2, rng);
  const double c = 3.7;
  auto scale = [c](std::vector<std::vector<double>> s) {
    for (auto& row : s)
      for (auto& v : row) v *= c;
    return s;
  };
  CHECK(generational_distance(scale(a), scale(b)) ==
        doctest::Approx(c * generational_distance(a, b)).epsilon(1e-12));
  CHECK(inverted_generational_distance(scale(a), scale(b)) ==
        doctest::Approx(c * inverted_generational_distance(a, b))
            .epsilon(1e-12));
}

TEST_CASE("gd/igd: invariant under permutation of set members") {
  Rng rng(47);
  auto a = oracle::random_objectives(20, 3, rng);
  auto b = oracle::random_objectives(12, 3, rng);
  const double gd0 = generational_distance(a, b);
  const double igd0 = inverted_generational_distance(a, b);
  std::mt19937 shuffler(7);
  std::shuffle(a.begin(), a.end(), shuffler);
  std::shuffle(b.begin(), b.end(), shuffler);
  CHECK(generational_distance(a, b) == doctest::Approx(gd0).epsilon(1e-12));
  CHECK(inverted_generational_distance(a, b) ==
        doctest::Approx(igd0).epsilon(1e-12));
}

TEST_CASE("convergence_speed: relative change with unit floor") {
  // Constant series: no movement.
  CHECK(convergence_speed({5, 5, 5, 5}) ==
        std::vector<double>{0.0, 0.0, 0.0});
  // Doubling each generation: always 100% relative change.
  CHECK(convergence_speed({1, 2, 4, 8}) == std::vector<double>{1, 1, 1});
  // Below-one magnitudes use the floor of 1 as denominator.
  const auto s = convergence_speed({0.2, 0.5});
  REQUIRE(s.size() == 1);
  CHECK(s[0] == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("convergence_speed: one entry fewer than the series") {
  CHECK(convergence_speed({3.0, 4.0}).size() == 1);
  CHECK(convergence_speed({3.0, 4.0, 9.0, 9.5}).size() == 3);
}

TEST_CASE("population_diversity: clones have none") {
  CHECK(population_diversity({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}) == 0.0);
}

TEST_CASE("population_diversity: single differing gene, hand value") {
  // Two members differ by delta in one of ten genes.  That gene's
  // population standard deviation is delta/2; averaged over ten genes the
  // diversity is delta/20.
  const double delta = 0.8;
  std::vector<double> a(10, 2.0);
  std::vector<double> b(10, 2.0);
  b[4] += delta;
  CHECK(population_diversity({a, b}) ==
        doctest::Approx(delta / 20.0).epsilon(1e-12));
}

TEST_CASE("population_diversity: translation invariant") {
  Rng rng(53);
  std::vector<std::vector<double>> pop(8, std::vector<double>(10));
  for (auto& g : pop)
    for (auto& v : g) v = rng.uniform(0.0, 5.0);
  const double base = population_diversity(pop);
  for (auto& g : pop)
    for (auto& v : g) v += 13.25;
  CHECK(population_diversity(pop) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("size_reduction_percent: footprint arithmetic") {
  const FixedDesign fixed;
  AntennaGenome g = reference_genome();

  // Ground exactly the substrate outline: nothing saved.
  g.wg = fixed.substrate_width;
  g.lg = fixed.substrate_length;
  CHECK(size_reduction_percent(g, fixed) ==
        doctest::Approx(0.0).epsilon(1e-12));

  // Halving both ground sides keeps a quarter of the area.
  g.wg = fixed.substrate_width / 2.0;
  g.lg = fixed.substrate_length / 2.0;
  CHECK(size_reduction_percent(g, fixed) ==
        doctest::Approx(75.0).epsilon(1e-12));
}

TEST_CASE("size_reduction_percent: shrunken-design value") {
  // Independent arithmetic for a ground of 38.28 x 34.10 against the
  // 41.64 x 37.93 outline.
  const FixedDesign fixed;
  AntennaGenome g = reference_genome();
  g.wg = 38.28;
  g.lg = 34.10;
  const double expected =
      100.0 * (1.0 - (38.28 * 34.10) / (41.64 * 37.93));
  CHECK(size_reduction_percent(g, fixed) ==
        doctest::Approx(expected).epsilon(1e-12));
  CHECK(size_reduction_percent(g, fixed) > 17.3);
  CHECK(size_reduction_percent(g, fixed) < 17.4);
}

TEST_CASE("zdt1_front: analytic identity and coverage") {
  const auto front = zdt1_front(1000);
  REQUIRE(front.size() == 1000);
  double min_f1 = 1e9, max_f1 = -1e9;
  for (const auto& p : front) {
    REQUIRE(p.size() == 2);
    CHECK(p[1] == doctest::Approx(1.0 - std::sqrt(p[0])).epsilon(1e-12));
    min_f1 = std::min(min_f1, p[0]);
    max_f1 = std::max(max_f1, p[0]);
  }
  CHECK(min_f1 == 0.0);
  CHECK(max_f1 == 1.0);
}

TEST_CASE("dtlz2_front: points on the unit-sphere octant") {
  const auto front = dtlz2_front(1000);
  REQUIRE(front.size() == 1000);
  for (const auto& p : front) {
    REQUIRE(p.size() == 3);
    double norm_sq = 0.0;
    for (double v : p) {
      CHECK(v >= 0.0);
      norm_sq += v * v;
    }
    CHECK(std::abs(norm_sq - 1.0) < 1e-12);
  }
  // Deterministic: the same set in every process.
  CHECK(dtlz2_front(1000) == front);
}

TEST_CASE("pooled_front: dominated points removed, order-independent") {
  const std::vector<std::vector<double>> set_a = {{0, 2}, {1, 1}, {3, 3}};
  const std::vector<std::vector<double>> set_b = {{2, 0}, {1.5, 1.5}};
  const auto pooled = pooled_front({set_a, set_b});
  const auto swapped = pooled_front({set_b, set_a});
  CHECK(pooled == swapped);

  // {3,3} dominated by {1,1}; {1.5,1.5} dominated by {1,1}.
  const std::vector<std::vector<double>> expected = {{0, 2}, {1, 1}, {2, 0}};
  CHECK(pooled == expected);
}

TEST_CASE("pooled_front: duplicates collapse") {
  const auto pooled = pooled_front({{{1, 1}}, {{1, 1}}});
  CHECK(pooled == std::vector<std::vector<double>>{{1, 1}});
}
