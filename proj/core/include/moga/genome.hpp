#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "moga/rng.hpp"

namespace moga {

inline constexpr std::size_t kGenomeSize = 10;

/// Gene order used by every array/vector view of a genome.
enum class Gene : std::size_t {
  r1 = 0,  ///< outer ring, outer radius (mm)
  r2 = 1,  ///< outer ring, inner radius (mm)
  r3 = 2,  ///< inner ring, outer radius (mm)
  r4 = 3,  ///< inner ring, inner radius (mm)
  vr = 4,  ///< ring-pair centre offset along the width axis (mm, signed)
  ur = 5,  ///< ring-pair centre offset along the length axis (mm, signed)
  wg = 6,  ///< ground width (mm)
  lg = 7,  ///< ground length (mm)
  wp = 8,  ///< patch width (mm)
  lp = 9,  ///< patch length (mm)
};

/// Names of the ten genes in array order, as used in parameter files.
const std::array<std::string, kGenomeSize>& gene_names();

/// The ten geometry values a run is allowed to change.  All lengths in mm.
struct AntennaGenome {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;
  double r4 = 0.0;
  double vr = 0.0;
  double ur = 0.0;
  double wg = 0.0;
  double lg = 0.0;
  double wp = 0.0;
  double lp = 0.0;

  std::array<double, kGenomeSize> as_array() const {
    return {r1, r2, r3, r4, vr, ur, wg, lg, wp, lp};
  }
  std::vector<double> as_vector() const {
    return {r1, r2, r3, r4, vr, ur, wg, lg, wp, lp};
  }
  static AntennaGenome from_array(const std::array<double, kGenomeSize>& a) {
    return {a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7], a[8], a[9]};
  }
  static AntennaGenome from_vector(const std::vector<double>& v);

  bool operator==(const AntennaGenome&) const = default;
};

/// Geometry that stays fixed during optimization (substrate, feed line,
/// slot widths).  Defaults are the reference design this library is
/// calibrated against.
struct FixedDesign {
  double substrate_width = 41.64;   ///< Ws (mm)
  double substrate_length = 37.93;  ///< Ls (mm)
  double substrate_height = 1.57;   ///< h (mm)
  double feed_length = 14.3;        ///< Lf (mm)
  double feed_width = 4.85;         ///< Wf (mm)
  double inset_depth = 5.02;        ///< D (mm)
  double inset_gap = 3.1;           ///< S (mm)
  double slot_width_outer = 0.5;    ///< d1 (mm)
  double slot_width_inner = 0.5;    ///< d2 (mm)
  double ring_spacing = 5.0;        ///< s (mm)
  double split_gap = 1.5;           ///< gap (mm)
  double eps_r = 2.2;               ///< substrate relative permittivity
  double tan_delta = 0.0009;        ///< substrate loss tangent
};

/// Reference geometry expressed as a genome: nominal radii and patch/ground
/// sizes, ring pair centred (vr = ur = 0).  Feasible under default bounds.
AntennaGenome reference_genome();

/// Box bounds for the ten genes plus the geometric slack the repair step
/// enforces between them.
struct ParameterBounds {
  std::array<double, kGenomeSize> lower{};
  std::array<double, kGenomeSize> upper{};

  /// Minimum radial separation between consecutive ring radii (mm).
  double radius_separation = 0.5;
  /// Clearance kept between any ring edge and the ground edge (mm).
  double ring_margin = 1.0;
  /// Clearance kept between patch edge and ground edge (mm).
  double patch_clearance = 1.0;

  /// Default search box: [0.70, 1.05] x the reference value for each size
  /// gene; the ring-centre offsets vr, ur range over [-3, 3] mm.
  static ParameterBounds defaults();

  /// Throws std::invalid_argument when lower > upper somewhere, a slack
  /// value is non-positive, or the box provably contains no feasible
  /// genome (so repair could never succeed).  Zero-width intervals are
  /// allowed; they pin a gene to one value.
  void validate() const;

  double low(Gene g) const { return lower[static_cast<std::size_t>(g)]; }
  double high(Gene g) const { return upper[static_cast<std::size_t>(g)]; }
};

/// Thrown when a bounds box admits no feasible genome.
class InfeasibleBoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lists every violated genome constraint (empty result = feasible):
/// per-gene bounds, the ring radius chain r1 > r2 > r3 > r4 with the
/// configured separation, both rings inside the ground outline with the
/// configured margin, and the patch inside the ground outline.  Checks
/// carry a 1e-9 mm slack so values sitting exactly on a repaired boundary
/// always count as feasible.
std::vector<std::string> feasibility_violations(const AntennaGenome& g,
                                                const ParameterBounds& b);

/// True when feasibility_violations(g, b) is empty.
bool is_feasible(const AntennaGenome& g, const ParameterBounds& b);

/// Deterministically projects an arbitrary 10-vector into the feasible set:
/// clamp to bounds, restore the radius ordering (swap, then shrink with the
/// configured separation), pull the ring centre inward until both rings fit
/// on the ground with the margin, and shrink the patch to fit with the
/// clearance.  Growing the ground within its bounds is used as a last
/// resort when shrinking alone cannot restore feasibility.
///
/// The result is feasible, repair is idempotent, and a feasible input is
/// returned unchanged.  Throws InfeasibleBoundsError when the bounds admit
/// no feasible genome.
AntennaGenome repair(const std::array<double, kGenomeSize>& raw,
                     const ParameterBounds& b);

/// Uniformly samples a raw vector inside the bounds box and repairs it.
AntennaGenome random_genome(const ParameterBounds& b, Rng& rng);
AntennaGenome random_genome(const ParameterBounds& b, std::uint64_t seed);

}  // namespace moga
