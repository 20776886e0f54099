#pragma once

#include <vector>

#include "moga/problem.hpp"

namespace moga {

/// Two-objective benchmark with a convex analytic front: f1 = x1 and
/// f2 = g (1 - sqrt(f1/g)) where g = 1 + 9 * mean of the remaining genes.
/// The front is f2 = 1 - sqrt(f1) at g = 1.  x must lie in [0,1]^n, n >= 2.
std::vector<double> zdt1(const std::vector<double>& x);

/// Three-objective benchmark on the unit sphere octant:
/// f = (1+g) * (cos, cos*sin, sin) cascade of the first two genes, with
/// g the squared distance of the remaining genes from 0.5.  On the front
/// the objective vector has unit Euclidean norm.  x in [0,1]^n, n >= 3.
std::vector<double> dtlz2(const std::vector<double>& x);

class Zdt1Problem final : public Problem {
 public:
  explicit Zdt1Problem(std::size_t dimension = 30);
  std::size_t dimension() const override { return lower_.size(); }
  std::size_t objective_count() const override { return 2; }
  const std::vector<double>& lower_bounds() const override { return lower_; }
  const std::vector<double>& upper_bounds() const override { return upper_; }
  std::string name() const override { return "zdt1"; }
  std::vector<double> evaluate(const std::vector<double>& x) const override {
    return zdt1(x);
  }

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

class Dtlz2Problem final : public Problem {
 public:
  explicit Dtlz2Problem(std::size_t dimension = 12);
  std::size_t dimension() const override { return lower_.size(); }
  std::size_t objective_count() const override { return 3; }
  const std::vector<double>& lower_bounds() const override { return lower_; }
  const std::vector<double>& upper_bounds() const override { return upper_; }
  std::string name() const override { return "dtlz2"; }
  std::vector<double> evaluate(const std::vector<double>& x) const override {
    return dtlz2(x);
  }

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

}  // namespace moga
