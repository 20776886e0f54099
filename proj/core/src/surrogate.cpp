#include "moga/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace moga {
namespace {

/// Speed of light in mm * GHz (i.e. mm/ns).
constexpr double kC = 299.792458;
constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

BandObjectives BandObjectives::from_vector(const std::vector<double>& v) {
  if (v.size() != 3)
    throw std::invalid_argument("band objectives need exactly 3 values");
  return {v[0], v[1], v[2]};
}

void FrequencyResponse::validate() const {
  if (frequency_ghz.size() != s11_db.size())
    throw std::invalid_argument(
        "frequency and S11 columns differ in length");
  if (frequency_ghz.empty())
    throw std::invalid_argument("response is empty");
  for (std::size_t k = 0; k < frequency_ghz.size(); ++k) {
    if (!std::isfinite(frequency_ghz[k]) || !std::isfinite(s11_db[k]))
      throw std::invalid_argument("response contains a non-finite value");
    if (k > 0 && frequency_ghz[k] <= frequency_ghz[k - 1])
      throw std::invalid_argument(
          "frequencies must be strictly increasing");
  }
}

SurrogateConfig SurrogateConfig::calibrated(const FixedDesign& fixed) {
  SurrogateConfig cfg;
  cfg.ring_constant = calibrate_ring_constant(fixed);
  return cfg;
}

void SurrogateConfig::validate() const {
  if (!(ring_constant > 0.0))
    throw std::invalid_argument("ring_constant must be positive");
  if (baseline_db < -3.0 || baseline_db > 0.0)
    throw std::invalid_argument("baseline_db must lie in [-3, 0]");
  // Zero depth switches a resonance off (useful for ablation); only
  // negative depths are nonsense.
  if (depth_patch_db < 0.0 || depth_outer_db < 0.0 || depth_inner_db < 0.0)
    throw std::invalid_argument("dip depths must be non-negative");
  if (!(width_patch_ghz > 0.0) || !(width_ring_ghz > 0.0))
    throw std::invalid_argument("dip widths must be positive");
  if (!(sigma_position_mm > 0.0))
    throw std::invalid_argument("sigma_position_mm must be positive");
  if (!(sweep_step_ghz > 0.0) || sweep_stop_ghz <= sweep_start_ghz)
    throw std::invalid_argument("sweep must cover a positive span");
}

double effective_permittivity(double width_mm, const FixedDesign& fixed) {
  if (!(width_mm > 0.0))
    throw std::invalid_argument("strip width must be positive");
  const double er = fixed.eps_r;
  const double h = fixed.substrate_height;
  return (er + 1.0) / 2.0 +
         (er - 1.0) / 2.0 * std::pow(1.0 + 12.0 * h / width_mm, -0.5);
}

double patch_resonance_ghz(const AntennaGenome& g, const FixedDesign& fixed) {
  const double eps_eff = effective_permittivity(g.wp, fixed);
  const double h = fixed.substrate_height;
  const double w_over_h = g.wp / h;
  const double delta_l = 0.412 * h * (eps_eff + 0.3) * (w_over_h + 0.264) /
                         ((eps_eff - 0.258) * (w_over_h + 0.8));
  const double effective_length = g.lp + 2.0 * delta_l;
  return kC / (2.0 * effective_length * std::sqrt(eps_eff));
}

double ring_resonance_ghz(double mean_radius_mm, double eps_eff,
                          double ring_constant) {
  if (!(mean_radius_mm > 0.0))
    throw std::invalid_argument("ring radius must be positive");
  return ring_constant * kC /
         (kTwoPi * mean_radius_mm * std::sqrt(eps_eff));
}

double calibrate_ring_constant(const FixedDesign& fixed) {
  const AntennaGenome ref = reference_genome();
  const double eps_eff = effective_permittivity(ref.wp, fixed);
  const double mean_outer = (ref.r1 + ref.r2) / 2.0;
  const double uncalibrated = kC / (kTwoPi * mean_outer * std::sqrt(eps_eff));
  return kTargetFrequenciesGhz[0] / uncalibrated;
}

FrequencyResponse surrogate_response(const AntennaGenome& g,
                                     const FixedDesign& fixed,
                                     const SurrogateConfig& cfg) {
  cfg.validate();
  const double eps_eff = effective_permittivity(g.wp, fixed);

  struct Dip {
    double centre_ghz;
    double depth_db;
    double width_ghz;
  };
  const double offset_sq = g.vr * g.vr + g.ur * g.ur;
  const double coupling = std::exp(
      -offset_sq / (2.0 * cfg.sigma_position_mm * cfg.sigma_position_mm));
  const std::array<Dip, 3> dips = {{
      {patch_resonance_ghz(g, fixed), cfg.depth_patch_db, cfg.width_patch_ghz},
      {ring_resonance_ghz((g.r1 + g.r2) / 2.0, eps_eff, cfg.ring_constant),
       cfg.depth_outer_db * coupling, cfg.width_ring_ghz},
      {ring_resonance_ghz((g.r3 + g.r4) / 2.0, eps_eff, cfg.ring_constant),
       cfg.depth_inner_db * coupling, cfg.width_ring_ghz},
  }};

  const std::size_t samples = static_cast<std::size_t>(
      std::floor((cfg.sweep_stop_ghz - cfg.sweep_start_ghz) /
                     cfg.sweep_step_ghz +
                 0.5)) +
      1;
  FrequencyResponse out;
  out.frequency_ghz.resize(samples);
  out.s11_db.resize(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    // Index arithmetic, not accumulation: sample k is always the same
    // double no matter how the loop is scheduled.
    const double f =
        cfg.sweep_start_ghz + static_cast<double>(k) * cfg.sweep_step_ghz;
    double s11 = cfg.baseline_db;
    for (const Dip& dip : dips) {
      const double detune = (f - dip.centre_ghz) / dip.width_ghz;
      s11 -= dip.depth_db / (1.0 + detune * detune);
    }
    out.frequency_ghz[k] = f;
    out.s11_db[k] = s11;
  }
  return out;
}

BandObjectives objectives_from_response(const FrequencyResponse& response) {
  response.validate();
  const auto& freq = response.frequency_ghz;
  const auto& s11 = response.s11_db;

  auto value_at = [&](double target) {
    if (target < freq.front() || target > freq.back())
      throw std::out_of_range("target frequency " + std::to_string(target) +
                              " GHz outside sampled range");
    const auto it = std::lower_bound(freq.begin(), freq.end(), target);
    const std::size_t hi = static_cast<std::size_t>(it - freq.begin());
    if (freq[hi] == target) return s11[hi];
    const std::size_t lo = hi - 1;
    const double t = (target - freq[lo]) / (freq[hi] - freq[lo]);
    return s11[lo] + t * (s11[hi] - s11[lo]);
  };

  BandObjectives out;
  out.s11_2g4 = value_at(kTargetFrequenciesGhz[0]);
  out.s11_3g6 = value_at(kTargetFrequenciesGhz[1]);
  out.s11_5g2 = value_at(kTargetFrequenciesGhz[2]);
  return out;
}

SurrogateProblem::SurrogateProblem(ParameterBounds bounds, FixedDesign fixed,
                                   SurrogateConfig cfg)
    : bounds_(bounds),
      fixed_(fixed),
      cfg_(cfg),
      lower_(bounds.lower.begin(), bounds.lower.end()),
      upper_(bounds.upper.begin(), bounds.upper.end()) {
  bounds_.validate();
  cfg_.validate();
}

std::vector<double> SurrogateProblem::repair(std::vector<double> x) const {
  std::array<double, kGenomeSize> raw{};
  if (x.size() != kGenomeSize)
    throw std::invalid_argument("surrogate genome must have 10 genes");
  std::copy(x.begin(), x.end(), raw.begin());
  return moga::repair(raw, bounds_).as_vector();
}

std::vector<double> SurrogateProblem::evaluate(
    const std::vector<double>& x) const {
  const AntennaGenome g = AntennaGenome::from_vector(x);
  return objectives_from_response(surrogate_response(g, fixed_, cfg_))
      .as_vector();
}

}  // namespace moga
