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

#include <functional>
#include <string>
#include <vector>

#include "qig/differentials.hpp"
#include "qig/models.hpp"
#include "qig/tensor.hpp"

namespace qig {

// Pullback of the Fubini-Study structure to parameter space.
//
// The direct evaluation
//
//   H_jk = sum_i w_i d_j psi_i conj(d_k psi_i) / N
//        - [sum_i w_i d_j psi_i conj(psi_i)] [sum_i w_i psi_i conj(d_k psi_i)] / N^2
//
// with N = sum_i w_i |psi_i|^2 is the ground truth; the polar-representation
// route (quarter Fisher + covariance of dalpha) is computed as a cross-check
// of the derivative quality, never as the primary path. Sign conventions:
// H = G - i*Omega with Omega_jk = (1/2) E_p[dlnp_j dalpha_k - dlnp_k dalpha_j],
// and the wedge is dt_j ^ dt_k = dt_j x dt_k - dt_k x dt_j (no 1/2).

/// Direct evaluation of the pullback tensor. Throws ValidationError for a
/// zero state vector.
HermitianTensor hermitian_tensor(const PureStateModel& model,
                                 const ParameterVector& theta);
HermitianTensor hermitian_tensor(const SampleSpace& space,
                                 const AmplitudeJet& jet);

struct PullbackDecomposition {
  HermitianTensor h;
  RealMatrix g;                   ///< Re H
  RealMatrix omega;               ///< -Im H
  RealMatrix quarter_classical;   ///< (1/4) E_p[dlnp_j dlnp_k]
  RealMatrix alpha_covariance;    ///< Cov_p(dalpha_j, dalpha_k)
  RealMatrix omega_from_logdiffs; ///< (1/2) E_p[dlnp_j dalpha_k - dlnp_k dalpha_j]
  Eigen::VectorXd mean_dalpha;    ///< E_p[dalpha_j]
  double assembly_defect_real = 0;  ///< ||Re H - quarter_classical - Cov||_max
  double assembly_defect_imag = 0;  ///< ||Im H + omega_from_logdiffs||_max
  /// max deviation of the reconstruction d_j psi = (dlnp_j/2 + i dalpha_j) psi
  /// on the support.
  double cross_defect = 0;
  /// largest |dalpha| over support and parameters; zero means the classical
  /// recovery h = F/4 applies.
  double max_dalpha = 0;
  std::vector<std::string> warnings;
};

struct DecomposeOptions {
  double assembly_tol = tol::assembly_analytic;
  /// Throw ConsistencyError when the defect exceeds assembly_tol (unless a
  /// support boundary explains it). Reports disable this and record the
  /// defect as a check instead.
  bool enforce = true;

  static DecomposeOptions for_mode(DerivativeMode mode);
};

PullbackDecomposition decompose(const PureStateModel& model,
                                const ParameterVector& theta,
                                const DecomposeOptions& options);
PullbackDecomposition decompose(const PureStateModel& model,
                                const ParameterVector& theta);

/// Model with amplitudes e^{i beta(theta)} psi(x; theta). The pullback
/// tensor is invariant under such transformations; this is the test harness
/// for ray-space well-definedness. Analytic derivatives are kept when
/// beta_gradient is supplied and the base model is analytic.
PureStateModel gauge_transform(
    const PureStateModel& model,
    std::function<double(const ParameterVector&)> beta,
    std::function<Eigen::VectorXd(const ParameterVector&)> beta_gradient =
        nullptr);

/// g - quarter_classical (equals the covariance of dalpha by the assembly
/// identity); positive semidefinite, and zero exactly when dalpha = 0.
RealMatrix dominance_gap(const PureStateModel& model,
                         const ParameterVector& theta);

}  // namespace qig
