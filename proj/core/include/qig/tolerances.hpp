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

#include "qig/types.hpp"

namespace qig {

// Centralized numeric thresholds. Analytic derivative callbacks are held to
// the tight values; central-difference and user-tabulated inputs get the
// relaxed ones. Report runs may override individual values, but never relax
// them implicitly.
namespace tol {

// Model normalization defect |sum_i w_i p_i - 1|.
inline constexpr double norm_analytic = 1e-10;
inline constexpr double norm_tabulated = 1e-8;

// Hermiticity / trace / purity of density matrices.
inline constexpr double herm = 1e-10;
inline constexpr double herm_fd = 1e-8;
inline constexpr double trace = 1e-10;
inline constexpr double trace_fd = 1e-8;
inline constexpr double purity = 1e-10;
inline constexpr double purity_fd = 1e-8;

// Positive semidefiniteness, relative to the matrix scale:
// lambda_min >= -psd_rel * ||A||.
inline constexpr double psd_rel = 1e-9;

// Support mask: a sample point belongs to the support of p when
// p_i >= support_rel * max_k p_k.
inline constexpr double support_rel = 1e-12;

// Off-support points whose density derivative still exceeds this magnitude
// sit on the boundary of the support; log-derivative quantities may diverge
// there and reports carry a warning.
inline constexpr double boundary = 1e-8;

// Log-differential cross identity: reconstruct d_psi from (dlnp, dalpha).
inline constexpr double cross_analytic = 1e-8;
inline constexpr double cross_fd = 1e-6;

// Polar re-assembly of the pullback tensor against its direct evaluation.
inline constexpr double assembly_analytic = 1e-8;
inline constexpr double assembly_fd = 1e-5;

// Hermiticity defect of the assembled pullback tensor.
inline constexpr double hermiticity_analytic = 1e-12;
inline constexpr double hermiticity_fd = 1e-8;

// Normalization differential residual max_j |Re <psi|d_j psi>|.
inline constexpr double norm_diff_analytic = 1e-10;
inline constexpr double norm_diff_fd = 1e-7;

// Zero-mean score |E_p[d_j ln p]|. Violations downgrade a report to
// "warn", they are a discretization-quality signal rather than an error.
inline constexpr double score_mean_analytic = 1e-8;
inline constexpr double score_mean_fd = 1e-6;

// SLD support-block residual ||(rho L + L rho)/2 - drho||.
inline constexpr double sld = 1e-10;
inline constexpr double sld_fd = 1e-8;

// SLD kernel cut: components with lambda_a + lambda_b <= rank_cut_rel *
// lambda_max are set to zero.
inline constexpr double rank_cut_rel = 1e-12;

// Pure-state identity residuals.
inline constexpr double identities_analytic = 1e-8;
inline constexpr double identities_fd = 1e-6;

// Classical recovery ||4 Re H - F|| for real nonnegative amplitudes.
inline constexpr double classical_recovery_analytic = 1e-8;
inline constexpr double classical_recovery_fd = 1e-5;

// Pairwise disagreement of the three QFI routes on pure states.
inline constexpr double qfi_agreement_analytic = 1e-7;
inline constexpr double qfi_agreement_fd = 1e-5;

// Gauge invariance: max entry change of H under a global phase in theta.
inline constexpr double gauge = 1e-7;

// A model counts as having dalpha == 0 (classical recovery applicable)
// below this.
inline constexpr double dalpha_zero = 1e-9;

}  // namespace tol

/// Per-run tolerance set used by report checks. Defaults depend on the
/// derivative quality of the model; spec files may override single entries
/// explicitly.
struct Tolerances {
  double norm = tol::norm_analytic;
  double norm_diff = tol::norm_diff_analytic;
  double hermiticity = tol::hermiticity_analytic;
  double cross = tol::cross_analytic;
  double assembly = tol::assembly_analytic;
  double score_mean = tol::score_mean_analytic;
  double sld = tol::sld;
  double identities = tol::identities_analytic;
  double classical_recovery = tol::classical_recovery_analytic;
  double qfi_agreement = tol::qfi_agreement_analytic;
  double gauge = tol::gauge;
  double psd_rel = tol::psd_rel;
  double herm = tol::herm;
  double trace = tol::trace;
  double purity = tol::purity;

  /// Defaults for a model: `tabulated` marks user-tabulated value tables,
  /// which are differentiated centrally and held to the relaxed thresholds.
  static Tolerances defaults(DerivativeMode mode, bool tabulated);

  /// Named override, e.g. set("assembly", 1e-6). Unknown names throw
  /// ValidationError.
  void set(const std::string& name, double value);
};

}  // namespace qig
