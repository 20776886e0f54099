#pragma once

#include <array>
#include <vector>

#include "moga/genome.hpp"
#include "moga/problem.hpp"

namespace moga {

/// The three service frequencies the antenna must cover (GHz).
inline constexpr std::array<double, 3> kTargetFrequenciesGhz = {2.4, 3.6, 5.2};

/// Reflection coefficient at the three target frequencies (dB).  All
/// values are <= 0 for a passive structure; lower is better everywhere.
struct BandObjectives {
  double s11_2g4 = 0.0;
  double s11_3g6 = 0.0;
  double s11_5g2 = 0.0;

  std::vector<double> as_vector() const { return {s11_2g4, s11_3g6, s11_5g2}; }
  static BandObjectives from_vector(const std::vector<double>& v);
};

/// A sampled |S11| curve: strictly increasing frequencies (GHz) with one
/// reflection value (dB) per sample.
struct FrequencyResponse {
  std::vector<double> frequency_ghz;
  std::vector<double> s11_db;

  /// Throws std::invalid_argument on size mismatch, empty data,
  /// non-finite values, or non-increasing frequencies.
  void validate() const;
};

/// Closed-form stand-in for a full-wave solver.  It reproduces the three
/// resonances of the reference design — patch near 5.2 GHz, outer ring
/// near 2.4 GHz, inner ring near 3.6 GHz — and responds smoothly to every
/// gene, which is what an optimizer needs from a fitness landscape.
///
/// The dip depths and half-widths are model tuning, not physics: they set
/// how forgiving each resonance is to detuning.  The defaults were chosen
/// so that a small optimizer budget (population 10, ten generations) can
/// reliably pull all three dips below -10 dB: half-widths of 0.5 GHz give
/// usable gradient at typical detunings within the search box, and the
/// deepest dip sits on the inner ring because its alignment window is the
/// narrowest of the three.  Narrower dips (say 0.1-0.2 GHz) make the
/// landscape near-flat almost everywhere and random initial populations
/// rarely see all three bands at once.
struct SurrogateConfig {
  double ring_constant = 0.0;   ///< calibrated ring resonance factor (kappa)
  double baseline_db = -0.5;    ///< |S11| far from any resonance
  double depth_patch_db = 30.0; ///< dip depth at the patch resonance
  double depth_outer_db = 30.0; ///< dip depth at the outer ring resonance
  double depth_inner_db = 40.0; ///< dip depth at the inner ring resonance
  double width_patch_ghz = 0.50; ///< half-width of the patch dip
  double width_ring_ghz = 0.50;  ///< half-width of both ring dips
  double sigma_position_mm = 6.0; ///< ring-offset coupling roll-off
  double sweep_start_ghz = 1.0;
  double sweep_stop_ghz = 7.0;
  double sweep_step_ghz = 0.005;

  /// Config with ring_constant calibrated so the reference outer ring
  /// lands exactly on 2.4 GHz (see calibrate_ring_constant).
  static SurrogateConfig calibrated(const FixedDesign& fixed = FixedDesign{});

  /// Throws std::invalid_argument when a depth is negative, a width or
  /// step is non-positive, the baseline is outside [-3, 0], or the sweep
  /// is empty.  Depth zero is allowed: it switches that resonance off.
  void validate() const;
};

/// Effective relative permittivity of a microstrip line of width w_mm on
/// this substrate (quasi-static closed form, valid for w/h >= 1).
double effective_permittivity(double width_mm, const FixedDesign& fixed);

/// Dominant-mode resonance of the rectangular patch (GHz): half-wave
/// resonance of the patch length extended by the fringing-field length on
/// both edges.
double patch_resonance_ghz(const AntennaGenome& g, const FixedDesign& fixed);

/// Resonance of a ring of the given mean radius (GHz): one guided
/// wavelength around the mean circumference, scaled by the calibrated
/// ring constant.  Strictly decreasing in the radius.
double ring_resonance_ghz(double mean_radius_mm, double eps_eff,
                          double ring_constant);

/// Ring constant that puts a ring of the reference outer-ring mean radius
/// exactly at 2.4 GHz on the reference substrate.  The same constant then
/// places the reference inner ring near 3.6 GHz, which is the model's
/// built-in accuracy check.
double calibrate_ring_constant(const FixedDesign& fixed = FixedDesign{});

/// Superposes one resonance dip per radiator on the baseline and samples
/// the sweep.  Ring dips scale with a Gaussian coupling factor in the ring
/// centre offset; the patch couples fully.  Deterministic: the same genome
/// and config produce the bitwise-same response.
FrequencyResponse surrogate_response(const AntennaGenome& g,
                                     const FixedDesign& fixed,
                                     const SurrogateConfig& cfg);

/// Reads the response at the three target frequencies, linearly
/// interpolating between samples; an exact sample point returns the sample
/// value.  Throws std::out_of_range when a target lies outside the sweep.
BandObjectives objectives_from_response(const FrequencyResponse& response);

/// Problem adapter: 10 antenna genes -> 3 reflection objectives.
class SurrogateProblem final : public Problem {
 public:
  SurrogateProblem(ParameterBounds bounds = ParameterBounds::defaults(),
                   FixedDesign fixed = FixedDesign{},
                   SurrogateConfig cfg = SurrogateConfig::calibrated());

  std::size_t dimension() const override { return kGenomeSize; }
  std::size_t objective_count() const override { return 3; }
  const std::vector<double>& lower_bounds() const override { return lower_; }
  const std::vector<double>& upper_bounds() const override { return upper_; }
  std::string name() const override { return "surrogate"; }
  std::vector<double> repair(std::vector<double> x) const override;
  std::vector<double> evaluate(const std::vector<double>& x) const override;

  const ParameterBounds& bounds() const { return bounds_; }
  const FixedDesign& fixed() const { return fixed_; }
  const SurrogateConfig& config() const { return cfg_; }

 private:
  ParameterBounds bounds_;
  FixedDesign fixed_;
  SurrogateConfig cfg_;
  std::vector<double> lower_;
  std::vector<double> upper_;
};

}  // namespace moga
