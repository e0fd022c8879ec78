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

#include "qig/sample_space.hpp"

#include <algorithm>
#include <cmath>

#include "qig/errors.hpp"

namespace qig {

SampleSpace::SampleSpace(std::vector<double> points,
                         std::vector<double> weights) {
  if (points.empty()) {
    throw ValidationError("sample space needs at least one point");
  }
  if (points.size() != weights.size()) {
    throw ValidationError("sample space points/weights length mismatch: " +
                          std::to_string(points.size()) + " vs " +
                          std::to_string(weights.size()));
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw ValidationError("sample space weights must be positive and finite");
    }
  }
  for (double x : points) {
    if (!std::isfinite(x)) {
      throw ValidationError("sample space points must be finite");
    }
  }
  std::vector<double> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("sample space points must be pairwise distinct");
  }
  points_ = Eigen::Map<const Eigen::VectorXd>(points.data(),
                                              static_cast<Eigen::Index>(points.size()));
  weights_ = Eigen::Map<const Eigen::VectorXd>(weights.data(),
                                               static_cast<Eigen::Index>(weights.size()));
}

SampleSpace SampleSpace::uniform_grid(double lo, double hi, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw ValidationError("grid step must be positive");
  }
  if (!(hi > lo)) {
    throw ValidationError("grid needs hi > lo");
  }
  const auto count = static_cast<Eigen::Index>(std::llround((hi - lo) / step)) + 1;
  if (count < 2) {
    throw ValidationError("grid needs at least two points");
  }
  std::vector<double> pts(static_cast<std::size_t>(count));
  std::vector<double> wts(static_cast<std::size_t>(count), step);
  for (Eigen::Index i = 0; i < count; ++i) {
    pts[static_cast<std::size_t>(i)] = lo + static_cast<double>(i) * step;
  }
  // trapezoid: half weight at the two ends
  wts.front() = 0.5 * step;
  wts.back() = 0.5 * step;
  return SampleSpace(std::move(pts), std::move(wts));
}

SampleSpace SampleSpace::labeled(std::vector<double> points) {
  std::vector<double> weights(points.size(), 1.0);
  return SampleSpace(std::move(points), std::move(weights));
}

double SampleSpace::integrate(const Eigen::VectorXd& f) const {
  if (f.size() != weights_.size()) {
    throw ValidationError("integrate: array length does not match the space");
  }
  return weights_.dot(f);
}

}  // namespace qig
