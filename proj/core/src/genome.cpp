#include "moga/genome.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace moga {
namespace {

constexpr std::size_t kR1 = 0, kR2 = 1, kR3 = 2, kR4 = 3, kVr = 4, kUr = 5,
                      kWg = 6, kLg = 7, kWp = 8, kLp = 9;

/// Feasibility checks allow this much slack (mm).  The repair projection
/// lands exactly on constraint boundaries, so exact comparisons would be
/// hostage to the last rounding of each boundary expression; 1e-9 mm is far
/// below manufacturing tolerance and far above accumulated rounding error.
constexpr double kFeasTol = 1e-9;

double clamp_finite(double x, double lo, double hi) {
  if (std::isnan(x)) return lo;
  return std::clamp(x, lo, hi);
}

/// Smallest |v| reachable inside [lo, hi].
double min_abs_in(double lo, double hi) {
  if (lo > 0.0) return lo;
  if (hi < 0.0) return -hi;
  return 0.0;
}

struct ChainIntervals {
  std::array<double, 4> lo{};
  std::array<double, 4> hi{};
};

/// Tightest per-radius intervals consistent with the bounds and the
/// separation requirement r[k] >= r[k+1] + sep.
ChainIntervals chain_intervals(const ParameterBounds& b) {
  const double sep = b.radius_separation;
  ChainIntervals c;
  c.hi[0] = b.upper[kR1];
  for (std::size_t k = 1; k < 4; ++k)
    c.hi[k] = std::min(b.upper[kR1 + k], c.hi[k - 1] - sep);
  c.lo[3] = b.lower[kR4];
  for (std::size_t k = 3; k-- > 0;)
    c.lo[k] = std::max(b.lower[kR1 + k], c.lo[k + 1] + sep);
  return c;
}

/// Projects four radius values onto the ordered chain
///   r0 >= r1 + sep >= r2 + 2 sep >= r3 + 3 sep
/// inside the effective intervals, optionally capping the largest radius.
/// Values must already be sorted descending.
void project_chain(std::array<double, 4>& r, const ChainIntervals& c,
                   double sep, double r1_cap) {
  r[0] = std::clamp(std::min(r[0], r1_cap), c.lo[0], c.hi[0]);
  for (std::size_t k = 1; k < 4; ++k)
    r[k] = std::clamp(std::min(r[k], r[k - 1] - sep), c.lo[k], c.hi[k]);
}

}  // namespace

const std::array<std::string, kGenomeSize>& gene_names() {
  static const std::array<std::string, kGenomeSize> names = {
      "R1", "R2", "R3", "R4", "Vr", "Ur", "Wg", "Lg", "Wp", "Lp"};
  return names;
}

AntennaGenome AntennaGenome::from_vector(const std::vector<double>& v) {
  if (v.size() != kGenomeSize)
    throw std::invalid_argument("genome vector must have 10 entries, got " +
                                std::to_string(v.size()));
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8], v[9]};
}

AntennaGenome reference_genome() {
  AntennaGenome g;
  g.r1 = 12.38;
  g.r2 = 11.88;
  g.r3 = 8.25;
  g.r4 = 7.75;
  g.vr = 0.0;
  g.ur = 0.0;
  g.wg = 41.64;
  g.lg = 37.93;
  g.wp = 22.8;
  g.lp = 18.55;
  return g;
}

ParameterBounds ParameterBounds::defaults() {
  ParameterBounds b;
  const auto ref = reference_genome().as_array();
  for (std::size_t i = 0; i < kGenomeSize; ++i) {
    b.lower[i] = 0.70 * ref[i];
    b.upper[i] = 1.05 * ref[i];
  }
  // The centre offsets have a zero reference value; give them a symmetric
  // range instead.  +-3 mm moves the rings enough to matter for coupling
  // while staying representable on every ground size the box allows.
  b.lower[kVr] = -3.0;
  b.upper[kVr] = 3.0;
  b.lower[kUr] = -3.0;
  b.upper[kUr] = 3.0;
  return b;
}

void ParameterBounds::validate() const {
  const auto& names = gene_names();
  for (std::size_t i = 0; i < kGenomeSize; ++i) {
    if (!(std::isfinite(lower[i]) && std::isfinite(upper[i])))
      throw std::invalid_argument("bounds for " + names[i] + " must be finite");
    if (lower[i] > upper[i])
      throw std::invalid_argument("lower bound above upper bound for " +
                                  names[i]);
  }
  if (!(radius_separation > 0.0))
    throw std::invalid_argument("radius_separation must be positive");
  if (!(ring_margin > 0.0))
    throw std::invalid_argument("ring_margin must be positive");
  if (!(patch_clearance > 0.0))
    throw std::invalid_argument("patch_clearance must be positive");

  const ChainIntervals c = chain_intervals(*this);
  for (std::size_t k = 0; k < 4; ++k)
    if (c.lo[k] > c.hi[k])
      throw InfeasibleBoundsError(
          "radius bounds admit no ordered ring chain with the required "
          "separation");

  const double min_r1 = c.lo[0];
  const double min_abs_vr = min_abs_in(lower[kVr], upper[kVr]);
  const double min_abs_ur = min_abs_in(lower[kUr], upper[kUr]);
  if (min_abs_vr + min_r1 + ring_margin > upper[kWg] / 2.0)
    throw InfeasibleBoundsError(
        "no ground width inside bounds can host the smallest feasible ring "
        "chain");
  if (min_abs_ur + min_r1 + ring_margin > upper[kLg] / 2.0)
    throw InfeasibleBoundsError(
        "no ground length inside bounds can host the smallest feasible ring "
        "chain");
  if (lower[kWp] + patch_clearance > upper[kWg])
    throw InfeasibleBoundsError(
        "no ground width inside bounds can host the smallest feasible patch");
  if (lower[kLp] + patch_clearance > upper[kLg])
    throw InfeasibleBoundsError(
        "no ground length inside bounds can host the smallest feasible patch");
}

std::vector<std::string> feasibility_violations(const AntennaGenome& g,
                                                const ParameterBounds& b) {
  std::vector<std::string> out;
  const auto x = g.as_array();
  const auto& names = gene_names();
  for (std::size_t i = 0; i < kGenomeSize; ++i) {
    if (x[i] < b.lower[i] - kFeasTol || x[i] > b.upper[i] + kFeasTol ||
        !std::isfinite(x[i])) {
      std::ostringstream os;
      os << names[i] << "=" << x[i] << " outside bounds [" << b.lower[i]
         << ", " << b.upper[i] << "]";
      out.push_back(os.str());
    }
  }
  const double sep = b.radius_separation;
  if (g.r1 - g.r2 < sep - kFeasTol)
    out.push_back("r1 - r2 below radius separation");
  if (g.r2 - g.r3 < sep - kFeasTol)
    out.push_back("r2 - r3 below radius separation");
  if (g.r3 - g.r4 < sep - kFeasTol)
    out.push_back("r3 - r4 below radius separation");
  if (std::abs(g.vr) + g.r1 > g.wg / 2.0 - b.ring_margin + kFeasTol)
    out.push_back("ring chain exceeds ground width margin");
  if (std::abs(g.ur) + g.r1 > g.lg / 2.0 - b.ring_margin + kFeasTol)
    out.push_back("ring chain exceeds ground length margin");
  if (g.wp > g.wg - b.patch_clearance + kFeasTol)
    out.push_back("patch width exceeds ground clearance");
  if (g.lp > g.lg - b.patch_clearance + kFeasTol)
    out.push_back("patch length exceeds ground clearance");
  return out;
}

bool is_feasible(const AntennaGenome& g, const ParameterBounds& b) {
  return feasibility_violations(g, b).empty();
}

AntennaGenome repair(const std::array<double, kGenomeSize>& raw,
                     const ParameterBounds& b) {
  b.validate();
  const double sep = b.radius_separation;
  const double margin = b.ring_margin;
  const double clearance = b.patch_clearance;

  std::array<double, kGenomeSize> x{};
  for (std::size_t i = 0; i < kGenomeSize; ++i)
    x[i] = clamp_finite(raw[i], b.lower[i], b.upper[i]);

  // Ring radius chain: swap into descending order, then shrink onto the
  // separated chain inside the effective intervals.
  const ChainIntervals c = chain_intervals(b);
  std::array<double, 4> r = {x[kR1], x[kR2], x[kR3], x[kR4]};
  std::sort(r.begin(), r.end(), std::greater<double>());
  project_chain(r, c, sep, c.hi[0]);

  // Ground must be able to host the smallest feasible chain even with the
  // ring pair centred; grow it (within bounds) when it cannot.
  const double min_r1 = c.lo[0];
  auto grow_ground = [&](std::size_t idx, double needed_half) {
    const double needed = 2.0 * needed_half;
    if (needed > b.upper[idx] + kFeasTol)
      throw InfeasibleBoundsError("ground cannot grow enough to host rings");
    x[idx] = std::min(std::max(x[idx], needed), b.upper[idx]);
  };
  if (x[kWg] / 2.0 - margin < min_r1) grow_ground(kWg, min_r1 + margin);
  if (x[kLg] / 2.0 - margin < min_r1) grow_ground(kLg, min_r1 + margin);

  // Shrink the chain when even a centred ring pair would cross the margin.
  const double centred_cap =
      std::min(x[kWg], x[kLg]) / 2.0 - margin;
  if (r[0] > centred_cap) project_chain(r, c, sep, centred_cap);

  // Pull the ring centre inward until both rings clear the ground edge.
  auto shrink_offset = [&](std::size_t idx, double half_extent) {
    const double max_abs = half_extent - margin - r[0];
    double target = x[idx];
    if (std::abs(target) > max_abs)
      target = std::copysign(std::max(max_abs, 0.0), target);
    x[idx] = std::clamp(target, b.lower[idx], b.upper[idx]);
  };
  shrink_offset(kVr, x[kWg] / 2.0);
  shrink_offset(kUr, x[kLg] / 2.0);

  // The offset bounds may forbid shrinking all the way to centre; recover
  // by capping the chain against the remaining room, growing the ground as
  // a last resort.
  double cap_w = x[kWg] / 2.0 - margin - std::abs(x[kVr]);
  double cap_l = x[kLg] / 2.0 - margin - std::abs(x[kUr]);
  if (r[0] > std::min(cap_w, cap_l)) {
    if (cap_w < min_r1) {
      grow_ground(kWg, std::abs(x[kVr]) + min_r1 + margin);
      cap_w = x[kWg] / 2.0 - margin - std::abs(x[kVr]);
    }
    if (cap_l < min_r1) {
      grow_ground(kLg, std::abs(x[kUr]) + min_r1 + margin);
      cap_l = x[kLg] / 2.0 - margin - std::abs(x[kUr]);
    }
    project_chain(r, c, sep, std::min(cap_w, cap_l));
  }
  x[kR1] = r[0];
  x[kR2] = r[1];
  x[kR3] = r[2];
  x[kR4] = r[3];

  // Patch fits on the ground with clearance; shrink it first, grow the
  // ground only when the patch lower bound blocks shrinking.  Growing the
  // ground never tightens any ring constraint.
  auto fit_patch = [&](std::size_t patch_idx, std::size_t ground_idx) {
    double target = std::min(x[patch_idx], x[ground_idx] - clearance);
    x[patch_idx] =
        std::clamp(target, b.lower[patch_idx], b.upper[patch_idx]);
    if (x[patch_idx] > x[ground_idx] - clearance)
      grow_ground(ground_idx, (x[patch_idx] + clearance) / 2.0);
  };
  fit_patch(kWp, kWg);
  fit_patch(kLp, kLg);

  AntennaGenome out = AntennaGenome::from_array(x);
  const auto violations = feasibility_violations(out, b);
  if (!violations.empty())
    throw InfeasibleBoundsError("repair could not reach a feasible genome: " +
                                violations.front());
  return out;
}

AntennaGenome random_genome(const ParameterBounds& b, Rng& rng) {
  std::array<double, kGenomeSize> raw{};
  for (std::size_t i = 0; i < kGenomeSize; ++i)
    raw[i] = rng.uniform(b.lower[i], b.upper[i]);
  return repair(raw, b);
}

AntennaGenome random_genome(const ParameterBounds& b, std::uint64_t seed) {
  Rng rng(seed);
  return random_genome(b, rng);
}

}  // namespace moga
