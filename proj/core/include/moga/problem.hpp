#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace moga {

/// A box-bounded real-parameter minimization problem.
///
/// evaluate() must be pure and safe to call from several threads at once;
/// the engines exploit that for parallel population evaluation and rely on
/// purity for reproducible runs.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::size_t dimension() const = 0;
  virtual std::size_t objective_count() const = 0;
  virtual const std::vector<double>& lower_bounds() const = 0;
  virtual const std::vector<double>& upper_bounds() const = 0;
  virtual std::string name() const = 0;

  /// Projects an arbitrary vector into the feasible set.  The default
  /// clamps to the bounds, which is all the benchmark problems need.
  virtual std::vector<double> repair(std::vector<double> x) const {
    const auto& lo = lower_bounds();
    const auto& hi = upper_bounds();
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = std::clamp(x[i], lo[i], hi[i]);
    return x;
  }

  virtual std::vector<double> evaluate(const std::vector<double>& x) const = 0;

  /// Evaluation entry point that also carries a stable per-call id.  The
  /// id is derived from generation and population index, so it identifies
  /// the same evaluation regardless of worker-thread scheduling.  Only
  /// evaluators with out-of-process state (the directory-exchange one)
  /// need the id; everything else forwards to evaluate().
  virtual std::vector<double> evaluate_at(const std::vector<double>& x,
                                          std::uint64_t /*eval_id*/) const {
    return evaluate(x);
  }
};

using ProblemPtr = std::shared_ptr<const Problem>;

}  // namespace moga
