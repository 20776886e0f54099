#include "moga/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace moga {
namespace {

double squared_distance(const std::vector<double>& a,
                        const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    const double d = a[m] - b[m];
    s += d * d;
  }
  return s;
}

/// Perpendicular distance from point v to the ray through the origin along
/// direction r (r need not be normalized).
double perpendicular_distance(const std::vector<double>& v,
                              const std::vector<double>& r) {
  double rr = 0.0;
  double vr = 0.0;
  for (std::size_t m = 0; m < v.size(); ++m) {
    rr += r[m] * r[m];
    vr += v[m] * r[m];
  }
  const double t = vr / rr;
  double s = 0.0;
  for (std::size_t m = 0; m < v.size(); ++m) {
    const double d = v[m] - t * r[m];
    s += d * d;
  }
  return std::sqrt(s);
}

/// Solves A x = b by Gaussian elimination with partial pivoting.  Returns
/// false when a pivot is (numerically) zero.
bool solve_linear(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
    if (std::abs(a[pivot][col]) < 1e-12) return false;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const double f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t row = n; row-- > 0;) {
    double s = b[row];
    for (std::size_t k = row + 1; k < n; ++k) s -= a[row][k] * x[k];
    x[row] = s / a[row][row];
  }
  return true;
}

void lattice_recurse(std::size_t remaining_axes, std::size_t remaining_units,
                     std::size_t divisions, std::vector<double>& point,
                     std::vector<std::vector<double>>& out) {
  if (remaining_axes == 1) {
    point.push_back(static_cast<double>(remaining_units) /
                    static_cast<double>(divisions));
    out.push_back(point);
    point.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= remaining_units; ++k) {
    point.push_back(static_cast<double>(k) / static_cast<double>(divisions));
    lattice_recurse(remaining_axes - 1, remaining_units - k, divisions, point,
                    out);
    point.pop_back();
  }
}

}  // namespace

void SharingConfig::validate() const {
  if (!(sigma_share > 0.0))
    throw std::invalid_argument("sigma_share must be positive");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
}

double sharing_value(double distance, const SharingConfig& cfg) {
  if (distance >= cfg.sigma_share) return 0.0;
  return 1.0 - std::pow(distance / cfg.sigma_share, cfg.alpha);
}

std::vector<std::vector<double>> normalize_objectives(
    const std::vector<std::vector<double>>& objectives) {
  std::vector<std::vector<double>> out(objectives.size());
  if (objectives.empty()) return out;
  const std::size_t m_count = objectives[0].size();
  std::vector<double> lo(m_count, std::numeric_limits<double>::infinity());
  std::vector<double> hi(m_count, -std::numeric_limits<double>::infinity());
  for (const auto& f : objectives) {
    for (std::size_t m = 0; m < m_count; ++m) {
      lo[m] = std::min(lo[m], f[m]);
      hi[m] = std::max(hi[m], f[m]);
    }
  }
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    out[i].resize(m_count);
    for (std::size_t m = 0; m < m_count; ++m) {
      const double range = hi[m] - lo[m];
      out[i][m] = range > 0.0 ? (objectives[i][m] - lo[m]) / range : 0.0;
    }
  }
  return out;
}

double niche_count(std::size_t i,
                   const std::vector<std::vector<double>>& normalized,
                   const SharingConfig& cfg) {
  cfg.validate();
  double total = 0.0;
  for (const auto& other : normalized)
    total += sharing_value(
        std::sqrt(squared_distance(normalized[i], other)), cfg);
  return total;
}

std::vector<double> shared_fitness(
    const std::vector<std::vector<double>>& objectives,
    const FrontPartition& partition, const SharingConfig& cfg,
    double initial_dummy) {
  cfg.validate();
  if (!(initial_dummy > 0.0))
    throw std::invalid_argument("initial dummy fitness must be positive");

  const auto normalized = normalize_objectives(objectives);
  std::vector<double> fitness(objectives.size(), 0.0);

  double dummy = initial_dummy;
  for (const auto& front : partition.fronts) {
    double front_min = std::numeric_limits<double>::infinity();
    for (std::size_t i : front) {
      const double adjusted = dummy / niche_count(i, normalized, cfg);
      fitness[i] = adjusted;
      front_min = std::min(front_min, adjusted);
    }
    dummy = 0.9 * front_min;
  }
  return fitness;
}

std::vector<std::vector<double>> simplex_lattice(std::size_t objectives,
                                                 std::size_t divisions) {
  if (objectives == 0)
    throw std::invalid_argument("need at least one objective");
  if (divisions == 0)
    throw std::invalid_argument("need at least one division");
  std::vector<std::vector<double>> out;
  std::vector<double> point;
  point.reserve(objectives);
  lattice_recurse(objectives, divisions, divisions, point, out);
  return out;
}

std::vector<std::size_t> reference_point_select(
    const std::vector<std::vector<double>>& objectives,
    const std::vector<std::size_t>& admitted,
    const std::vector<std::size_t>& splitting,
    const std::vector<std::vector<double>>& reference_directions,
    std::size_t target_size, Rng& rng) {
  if (admitted.size() > target_size)
    throw std::invalid_argument("admitted fronts already exceed target size");
  if (admitted.size() + splitting.size() < target_size)
    throw std::invalid_argument("not enough candidates to reach target size");
  std::vector<std::size_t> selected = admitted;
  if (selected.size() == target_size) return selected;

  // Pool everybody that takes part in normalization.
  std::vector<std::size_t> pool = admitted;
  pool.insert(pool.end(), splitting.begin(), splitting.end());
  const std::size_t m_count = objectives[pool.front()].size();

  // Ideal point over the pool.
  std::vector<double> ideal(m_count,
                            std::numeric_limits<double>::infinity());
  for (std::size_t i : pool)
    for (std::size_t m = 0; m < m_count; ++m)
      ideal[m] = std::min(ideal[m], objectives[i][m]);

  auto translated = [&](std::size_t i, std::size_t m) {
    return objectives[i][m] - ideal[m];
  };

  // Extreme point per axis: the pool member minimizing the achievement
  // scalarizing function for that axis' weight vector.
  std::vector<std::size_t> extreme(m_count, pool.front());
  for (std::size_t axis = 0; axis < m_count; ++axis) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i : pool) {
      double asf = 0.0;
      for (std::size_t m = 0; m < m_count; ++m) {
        const double w = (m == axis) ? 1.0 : 1e-6;
        asf = std::max(asf, translated(i, m) / w);
      }
      if (asf < best) {
        best = asf;
        extreme[axis] = i;
      }
    }
  }

  // Intercepts of the plane through the extreme points; fall back to the
  // per-objective maxima when the system is degenerate.
  std::vector<double> intercepts(m_count, 0.0);
  bool ok = true;
  {
    std::vector<std::vector<double>> a(m_count, std::vector<double>(m_count));
    for (std::size_t row = 0; row < m_count; ++row)
      for (std::size_t m = 0; m < m_count; ++m)
        a[row][m] = translated(extreme[row], m);
    std::vector<double> plane;
    ok = solve_linear(a, std::vector<double>(m_count, 1.0), plane);
    if (ok)
      for (std::size_t m = 0; m < m_count; ++m) {
        const double intercept = 1.0 / plane[m];
        if (!std::isfinite(intercept) || intercept <= 1e-12) {
          ok = false;
          break;
        }
        intercepts[m] = intercept;
      }
  }
  if (!ok) {
    for (std::size_t m = 0; m < m_count; ++m) {
      double hi = 0.0;
      for (std::size_t i : pool) hi = std::max(hi, translated(i, m));
      intercepts[m] = hi > 1e-12 ? hi : 1.0;
    }
  }

  // Associate every pool member with its nearest reference direction.
  std::vector<std::size_t> nearest(objectives.size(), 0);
  std::vector<double> nearest_distance(objectives.size(), 0.0);
  std::vector<double> normalized(m_count);
  for (std::size_t i : pool) {
    for (std::size_t m = 0; m < m_count; ++m)
      normalized[m] = translated(i, m) / intercepts[m];
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_ref = 0;
    for (std::size_t r = 0; r < reference_directions.size(); ++r) {
      const double d =
          perpendicular_distance(normalized, reference_directions[r]);
      if (d < best) {
        best = d;
        best_ref = r;
      }
    }
    nearest[i] = best_ref;
    nearest_distance[i] = best;
  }

  // Niche counts from the members already admitted.
  std::vector<std::size_t> niche(reference_directions.size(), 0);
  for (std::size_t i : admitted) ++niche[nearest[i]];

  // Candidates per niche from the splitting front.
  std::vector<std::vector<std::size_t>> candidates(
      reference_directions.size());
  for (std::size_t i : splitting) candidates[nearest[i]].push_back(i);

  std::vector<bool> active(reference_directions.size(), true);
  while (selected.size() < target_size) {
    // Emptiest active niche, ties broken uniformly at random.
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> tied;
    for (std::size_t r = 0; r < reference_directions.size(); ++r) {
      if (!active[r]) continue;
      if (niche[r] < best_count) {
        best_count = niche[r];
        tied.assign(1, r);
      } else if (niche[r] == best_count) {
        tied.push_back(r);
      }
    }
    const std::size_t r = tied[rng.uniform_index(tied.size())];

    auto& cand = candidates[r];
    if (cand.empty()) {
      active[r] = false;  // nothing left for this direction
      continue;
    }

    std::size_t pick_pos;
    if (niche[r] == 0) {
      // Empty niche: take the candidate hugging the direction closest.
      pick_pos = 0;
      for (std::size_t k = 1; k < cand.size(); ++k)
        if (nearest_distance[cand[k]] < nearest_distance[cand[pick_pos]])
          pick_pos = k;
    } else {
      pick_pos = rng.uniform_index(cand.size());
    }
    selected.push_back(cand[pick_pos]);
    cand.erase(cand.begin() + static_cast<std::ptrdiff_t>(pick_pos));
    ++niche[r];
  }
  return selected;
}

}  // namespace moga
