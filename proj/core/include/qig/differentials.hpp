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

#include <string>
#include <vector>

#include "qig/models.hpp"

namespace qig {

// Parameter differentials evaluated in the coordinate basis d/dtheta_j:
// a value and one partial per parameter. Warnings carry stencil-quality
// diagnostics (left/right disagreement, support boundaries); they never
// abort the computation.

struct AmplitudeJet {
  Eigen::VectorXcd value;
  std::vector<Eigen::VectorXcd> partials;
  std::vector<std::string> warnings;
};

struct ProbabilityJet {
  Eigen::VectorXd value;
  std::vector<Eigen::VectorXd> partials;
  std::vector<std::string> warnings;
};

struct DensityMatrixJet {
  Eigen::MatrixXcd value;
  std::vector<Eigen::MatrixXcd> partials;
  std::vector<std::string> warnings;
};

/// Central-difference step for one parameter component:
/// cbrt(machine epsilon) * max(1, |t|).
double fd_step(double t);

AmplitudeJet differentiate(const PureStateModel& model,
                           const ParameterVector& theta);
ProbabilityJet differentiate(const ProbabilityModel& model,
                             const ParameterVector& theta);
DensityMatrixJet differentiate(const DensityModel& model,
                               const ParameterVector& theta);

/// Logarithmic differentials of the polar representation
/// psi = sqrt(p) e^{i alpha}:
///   dlnp_j  = 2 Re(d_j psi / psi),   dalpha_j = Im(d_j psi / psi),
/// defined on the support mask p_i >= support_rel * max_k p_k and zero off
/// it. Phase derivatives never touch arg(psi), so there are no branch-cut
/// artifacts.
struct LogDifferentialPair {
  std::vector<Eigen::VectorXd> dlnp;
  std::vector<Eigen::VectorXd> dalpha;
  Eigen::Array<bool, Eigen::Dynamic, 1> support;
  std::vector<std::string> warnings;
};

LogDifferentialPair log_differentials(const PureStateModel& model,
                                      const ParameterVector& theta);
LogDifferentialPair log_differentials(const SampleSpace& space,
                                      const AmplitudeJet& jet);

/// Residual of the normalization identity <psi|d psi> + <d psi|psi> = 0:
/// returns max_j |Re sum_i w_i conj(psi_i) d_j psi_i|.
double check_normalization_differential(const PureStateModel& model,
                                        const ParameterVector& theta);
double check_normalization_differential(const SampleSpace& space,
                                        const AmplitudeJet& jet);

}  // namespace qig
