// Copyright 2026 The qig authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "qig/types.hpp"

namespace qig {

/// Finite sample space: ordered, pairwise-distinct real labels x_i with
/// positive quadrature weights w_i. Integrals over the space are realized
/// as sum_i w_i f(x_i).
class SampleSpace {
 public:
  SampleSpace(std::vector<double> points, std::vector<double> weights);

  /// Uniform grid on [lo, hi] with the given step and trapezoidal weights.
  static SampleSpace uniform_grid(double lo, double hi, double step);

  /// Discrete labels with unit weights (counting measure).
  static SampleSpace labeled(std::vector<double> points);

  Eigen::Index size() const { return points_.size(); }
  const Eigen::VectorXd& points() const { return points_; }
  const Eigen::VectorXd& weights() const { return weights_; }

  /// sum_i w_i f_i
  double integrate(const Eigen::VectorXd& f) const;

 private:
  Eigen::VectorXd points_;
  Eigen::VectorXd weights_;
};

}  // namespace qig
