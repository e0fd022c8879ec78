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

#include "qig/models.hpp"
#include "qig/pure_geometry.hpp"
#include "qig/tolerances.hpp"
#include "qig/types.hpp"

namespace qig {

// Symmetric logarithmic derivative and the quantum Fisher information
// tensor. The SLD solve works in the eigenbasis of rho: components with
// lambda_a + lambda_b below the kernel cut are set to zero (the defining
// equation does not determine them; this choice minimizes ||L|| and matches
// the support-restricted QFI).

struct SLDSet {
  /// One Hermitian matrix L_j per parameter, in the original basis.
  std::vector<Eigen::MatrixXcd> matrices;
  /// Number of eigenvalues of rho above the kernel cut.
  int support_rank = 0;
  /// ||(rho L_j + L_j rho)/2 - drho_j||_max restricted to the support block,
  /// evaluated by honest reconstruction in the original basis.
  std::vector<double> residuals;
};

struct SldOptions {
  double herm_tol = tol::herm;
  double trace_tol = tol::trace;
  double norm_tol = tol::norm_analytic;
  double psd_rel = tol::psd_rel;
  double sld_tol = tol::sld;
  double rank_cut_rel = tol::rank_cut_rel;

  static SldOptions for_mode(DerivativeMode mode);
};

/// Solve drho_j = (rho L_j + L_j rho)/2 for all parameters. Validates the
/// density-state invariants of rho and Hermiticity/tracelessness of each
/// drho_j; throws SolverError when a support-block residual exceeds sld_tol.
SLDSet sld_solve(const Eigen::MatrixXcd& rho,
                 const std::vector<Eigen::MatrixXcd>& drho,
                 const SldOptions& options = {});

/// Q_jk = Tr[rho L_j L_k], the coordinate expansion of Tr[rho (dL)^2].
/// metric_part is the real symmetric part (the QFI matrix); asym_part the
/// imaginary part, reported separately.
struct QFITensor {
  Eigen::MatrixXcd entries;
  RealMatrix metric_part;
  RealMatrix asym_part;
};

QFITensor qfi_tensor(const Eigen::MatrixXcd& rho, const SLDSet& slds);

/// Max-norm residuals of the pure-state identities, maximized over
/// parameters:
///   i) rho drho + drho rho = drho, ii) Tr drho = 0, iii) Tr(rho drho) = 0.
struct PureIdentityResiduals {
  double projector;       ///< identity i)
  double trace_drho;      ///< identity ii)
  double trace_rho_drho;  ///< identity iii)

  double max() const;
};

/// Residuals only, no purity gate (negative controls use this on mixed
/// states, where identity i) genuinely fails).
PureIdentityResiduals identity_residuals(
    const Eigen::MatrixXcd& rho, const std::vector<Eigen::MatrixXcd>& drho);

/// Same, but requires ||rho^2 - rho||_max <= purity_tol first; throws
/// PreconditionError otherwise.
PureIdentityResiduals pure_state_identities(
    const Eigen::MatrixXcd& rho, const std::vector<Eigen::MatrixXcd>& drho,
    double purity_tol = tol::purity);

/// ||rho^2 - rho||_max.
double purity_check(const Eigen::MatrixXcd& rho);

/// Pure-state shortcut Q = 4 H with H the pullback tensor; no density
/// matrix is materialized.
QFITensor qfi_pure_fast(const PureStateModel& model,
                        const ParameterVector& theta);

/// Pure-state QFI through the density route, Q_jk = 4 Tr[rho drho_j drho_k],
/// still without an SLD solve. Used as the middle leg of the three-way
/// agreement check.
QFITensor qfi_pure_from_density(const Eigen::MatrixXcd& rho,
                                const std::vector<Eigen::MatrixXcd>& drho);

}  // namespace qig
