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

#include "qig/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <utility>

#include <json.hpp>

#include "qig/classical_fisher.hpp"
#include "qig/differentials.hpp"
#include "qig/pure_geometry.hpp"
#include "qig/sld_qfi.hpp"

namespace qig {

namespace {

using nlohmann::json;

constexpr double kNonnegTol = 1e-12;

const char* kMutationOmegaSign = "omega-sign";

void check_mutation_name(const std::string& mutate) {
  if (!mutate.empty() && mutate != kMutationOmegaSign) {
    throw ValidationError("unknown mutation '" + mutate +
                          "' (supported: omega-sign)");
  }
}

CheckStatus status_for(double residual, double tolerance, bool warn_only) {
  if (residual <= tolerance) return CheckStatus::Pass;
  return warn_only ? CheckStatus::Warn : CheckStatus::Fail;
}

CheckResult& add_check(Report& report, std::string name, double residual,
                       double tolerance, bool warn_only = false,
                       std::string note = {}) {
  report.checks.push_back(CheckResult{std::move(name), residual, tolerance,
                                      status_for(residual, tolerance, warn_only),
                                      std::move(note)});
  return report.checks.back();
}

void add_failed_check(Report& report, std::string name, double tolerance,
                      std::string note) {
  report.checks.push_back(CheckResult{std::move(name),
                                      std::numeric_limits<double>::infinity(),
                                      tolerance, CheckStatus::Fail,
                                      std::move(note)});
}

void add_not_applicable(Report& report, std::string name, std::string note) {
  report.checks.push_back(CheckResult{std::move(name), 0.0, 0.0,
                                      CheckStatus::NotApplicable,
                                      std::move(note)});
}

void absorb_warnings(Report& report, const std::vector<std::string>& warnings) {
  // the same jet can reach the report through several routes
  for (const auto& w : warnings) {
    if (std::find(report.warnings.begin(), report.warnings.end(), w) ==
        report.warnings.end()) {
      report.warnings.push_back(w);
    }
  }
}

double complex_psd_defect(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian,
                                                     Eigen::EigenvaluesOnly);
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return std::max(0.0, -es.eigenvalues().minCoeff() / scale);
}

// Deterministic gauge fixture used by the per-model report check (the wide
// random sweep lives in verify/acceptance).
double gauge_check_residual(const PureStateModel& model,
                            const ParameterVector& theta,
                            const Eigen::MatrixXcd& h_reference) {
  auto beta = [](const ParameterVector& t) {
    return 0.55 * t[0] + 0.15 * std::sin(t.sum());
  };
  auto beta_grad = [](const ParameterVector& t) {
    Eigen::VectorXd g = Eigen::VectorXd::Constant(t.size(), 0.15 * std::cos(t.sum()));
    g[0] += 0.55;
    return g;
  };
  const PureStateModel transformed = gauge_transform(model, beta, beta_grad);
  const HermitianTensor h2 = hermitian_tensor(transformed, theta);
  return (h2.entries() - h_reference).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// classical block (probability models, and |psi|^2 of pure-state models)

void run_classical_block(Report& report, const SampleSpace& space,
                         const ProbabilityJet& jet, const Tolerances& tols) {
  report.has_classical = true;

  add_check(report, "normalization",
            std::abs(space.integrate(jet.value) - 1.0), tols.norm);
  add_check(report, "nonnegativity", std::max(0.0, -jet.value.minCoeff()),
            kNonnegTol);

  const ScoreSet scores = score_functions(space, jet);
  absorb_warnings(report, scores.warnings);
  report.score_mean = scores.mean;
  report.support_size = scores.support.count();
  add_check(report, "score-zero-mean", scores.mean.cwiseAbs().maxCoeff(),
            tols.score_mean, /*warn_only=*/true);

  report.fisher = classical_fisher_matrix(space, jet);
  add_check(report, "fisher-psd", psd_defect(report.fisher), tols.psd_rel);
}

// ---------------------------------------------------------------------------
// pure-state geometry and QFI blocks

ProbabilityJet probability_jet_from_amplitudes(const AmplitudeJet& jet) {
  ProbabilityJet out;
  out.value = jet.value.cwiseAbs2();
  for (const auto& dpsi : jet.partials) {
    out.partials.push_back(
        2.0 * jet.value.conjugate().cwiseProduct(dpsi).real());
  }
  return out;
}

void run_pure_state_checks(Report& report, const PureStateModel& model,
                           const ParameterVector& theta, const Tolerances& tols,
                           const RunOptions& options) {
  const SampleSpace& space = model.space();
  const AmplitudeJet jet = differentiate(model, theta);
  absorb_warnings(report, jet.warnings);

  // classical block on p = |psi|^2, from the same partials
  run_classical_block(report, space, probability_jet_from_amplitudes(jet),
                      tols);

  add_check(report, "norm-differential",
            check_normalization_differential(space, jet), tols.norm_diff);

  DecomposeOptions dopt;
  dopt.assembly_tol = tols.assembly;
  dopt.enforce = false;
  PullbackDecomposition d = decompose(model, theta, dopt);
  absorb_warnings(report, d.warnings);

  if (options.mutate == kMutationOmegaSign) {
    d.omega = (-d.omega).eval();
  }

  report.has_pure = true;
  report.h = d.h.entries();
  report.g = d.g;
  report.omega = d.omega;
  report.quarter_classical = d.quarter_classical;
  report.alpha_covariance = d.alpha_covariance;
  report.mean_dalpha = d.mean_dalpha;

  add_check(report, "hermiticity", d.h.hermiticity_defect(), tols.hermiticity);
  add_check(report, "cross-identity", d.cross_defect, tols.cross);
  // recomputed against the *reported* fields so that a corrupted report
  // cannot pass
  add_check(report, "assembly-real",
            (report.g - report.quarter_classical - report.alpha_covariance)
                .cwiseAbs()
                .maxCoeff(),
            tols.assembly);
  add_check(report, "assembly-imag",
            (report.omega - d.omega_from_logdiffs).cwiseAbs().maxCoeff(),
            tols.assembly);
  const double g_scale = report.g.cwiseAbs().maxCoeff();
  add_check(report, "g-psd", psd_defect(report.g, g_scale), tols.psd_rel);
  add_check(report, "dominance-psd",
            psd_defect(report.g - report.quarter_classical, g_scale),
            tols.psd_rel);

  if (d.max_dalpha <= tol::dalpha_zero) {
    add_check(report, "classical-recovery",
              (4.0 * report.g - report.fisher).cwiseAbs().maxCoeff(),
              tols.classical_recovery);
  } else {
    add_not_applicable(report, "classical-recovery",
                       "dalpha != 0 (max |dalpha| = " +
                           format_scientific(d.max_dalpha) + ")");
  }

  add_check(report, "gauge-invariance",
            gauge_check_residual(model, theta, d.h.entries()), tols.gauge);

  // three QFI routes: SLD solve on rho = |psi><psi|, the 4 Tr[rho (drho)^2]
  // shortcut on the same rho, and 4 H
  const QFITensor fast = qfi_pure_fast(model, theta);
  const DensityModel density = pure_to_density(model);
  const DensityMatrixJet rho_jet = differentiate(density, theta);

  add_check(report, "pure-identities",
            identity_residuals(rho_jet.value, rho_jet.partials).max(),
            tols.identities);

  const QFITensor direct = qfi_pure_from_density(rho_jet.value, rho_jet.partials);

  SldOptions sopt;
  sopt.herm_tol = tols.herm;
  sopt.trace_tol = tols.trace;
  sopt.norm_tol = tols.norm;
  sopt.psd_rel = tols.psd_rel;
  sopt.sld_tol = tols.sld;
  try {
    const SLDSet slds = sld_solve(rho_jet.value, rho_jet.partials, sopt);
    const QFITensor via_sld = qfi_tensor(rho_jet.value, slds);

    report.has_qfi = true;
    report.q = via_sld.entries;
    report.metric_part = via_sld.metric_part;
    report.asym_part = via_sld.asym_part;
    report.sld_residuals = slds.residuals;
    report.support_rank = slds.support_rank;

    double worst_residual = 0.0;
    for (double r : slds.residuals) worst_residual = std::max(worst_residual, r);
    add_check(report, "sld-residual", worst_residual, tols.sld);

    const double pairwise = std::max(
        {(via_sld.metric_part - direct.metric_part).cwiseAbs().maxCoeff(),
         (via_sld.metric_part - fast.metric_part).cwiseAbs().maxCoeff(),
         (direct.metric_part - fast.metric_part).cwiseAbs().maxCoeff()});
    add_check(report, "qfi-three-way", pairwise, tols.qfi_agreement);
  } catch (const Error& e) {
    add_failed_check(report, "sld-residual", tols.sld, e.what());
    add_failed_check(report, "qfi-three-way", tols.qfi_agreement,
                     "SLD route unavailable");
  }
}

// ---------------------------------------------------------------------------
// density-model checks

void run_density_checks(Report& report, const DensityModel& model,
                        const ParameterVector& theta, const Tolerances& tols) {
  const DensityMatrixJet jet = differentiate(model, theta);
  absorb_warnings(report, jet.warnings);
  const Eigen::MatrixXcd& rho = jet.value;

  add_check(report, "rho-hermitian",
            (rho - rho.adjoint()).cwiseAbs().maxCoeff(), tols.herm);
  add_check(report, "rho-trace", std::abs(rho.trace() - Complex(1.0, 0.0)),
            tols.norm);
  add_check(report, "rho-psd",
            complex_psd_defect(0.5 * (rho + rho.adjoint())), tols.psd_rel);

  double drho_herm = 0.0, drho_trace = 0.0;
  for (const auto& d : jet.partials) {
    drho_herm = std::max(drho_herm, (d - d.adjoint()).cwiseAbs().maxCoeff());
    drho_trace = std::max(drho_trace, std::abs(d.trace()));
  }
  add_check(report, "drho-hermitian", drho_herm, tols.herm);
  add_check(report, "drho-traceless", drho_trace, tols.trace);

  SldOptions sopt;
  sopt.herm_tol = tols.herm;
  sopt.trace_tol = tols.trace;
  sopt.norm_tol = tols.norm;
  sopt.psd_rel = tols.psd_rel;
  sopt.sld_tol = tols.sld;
  try {
    const SLDSet slds = sld_solve(rho, jet.partials, sopt);
    const QFITensor q = qfi_tensor(rho, slds);

    report.has_qfi = true;
    report.q = q.entries;
    report.metric_part = q.metric_part;
    report.asym_part = q.asym_part;
    report.sld_residuals = slds.residuals;
    report.support_rank = slds.support_rank;

    double worst_residual = 0.0;
    for (double r : slds.residuals) worst_residual = std::max(worst_residual, r);
    add_check(report, "sld-residual", worst_residual, tols.sld);
    add_check(report, "qfi-hermitian",
              (q.entries - q.entries.adjoint()).cwiseAbs().maxCoeff() /
                  std::max(1.0, q.entries.cwiseAbs().maxCoeff()),
              tols.hermiticity);
    add_check(report, "qfi-psd", psd_defect(q.metric_part), tols.psd_rel);
  } catch (const Error& e) {
    add_failed_check(report, "sld-residual", tols.sld, e.what());
    add_failed_check(report, "qfi-hermitian", tols.hermiticity,
                     "SLD route unavailable");
    add_failed_check(report, "qfi-psd", tols.psd_rel, "SLD route unavailable");
  }
}

// ---------------------------------------------------------------------------
// JSON rendering

json matrix_to_json(const RealMatrix& a) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

}  // namespace

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Warn:
      return "warn";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::NotApplicable:
      return "n/a";
  }
  return "unknown";
}

CheckStatus Report::overall() const {
  CheckStatus out = CheckStatus::Pass;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
    if (c.status == CheckStatus::Warn) out = CheckStatus::Warn;
  }
  return out;
}

Report run_report(const LoadedModel& loaded, const RunOptions& options) {
  check_mutation_name(options.mutate);

  Report report;
  report.kind = loaded.kind;
  report.theta = loaded.theta;

  std::visit(
      [&](const auto& model) {
        report.model_name = model.name();
        report.derivative_mode = to_string(model.mode());
        report.tabulated = model.tabulated();
        report.dim_params = model.dim_params();
      },
      loaded.model);

  if (const auto* prob = std::get_if<ProbabilityModel>(&loaded.model)) {
    const ProbabilityJet jet = differentiate(*prob, loaded.theta);
    absorb_warnings(report, jet.warnings);
    run_classical_block(report, prob->space(), jet, loaded.tolerances);
  } else if (const auto* pure = std::get_if<PureStateModel>(&loaded.model)) {
    run_pure_state_checks(report, *pure, loaded.theta, loaded.tolerances,
                          options);
  } else {
    run_density_checks(report, std::get<DensityModel>(loaded.model),
                       loaded.theta, loaded.tolerances);
  }
  return report;
}

std::string render_report_json(const Report& report, bool include_timestamp) {
  json doc;
  doc["qig_report_version"] = 1;
  if (include_timestamp) doc["timestamp"] = utc_timestamp();

  doc["model"] = {
      {"kind", report.kind},
      {"name", report.model_name},
      {"theta", vector_to_json(report.theta)},
      {"dim_params", report.dim_params},
      {"derivative_mode", report.derivative_mode},
      {"tabulated", report.tabulated},
  };

  doc["conventions"] = {
      {"hermitian_tensor", "h = g - i*omega"},
      {"omega",
       "omega_jk = 0.5*E_p[dlnp_j*dalpha_k - dlnp_k*dalpha_j]; equal to "
       "-Im h_jk"},
      {"wedge", "dt_j ^ dt_k = dt_j (x) dt_k - dt_k (x) dt_j (no 1/2)"},
      {"qfi",
       "Q_jk = Tr[rho L_j L_k]; metric_part = Re(Q+Q^dag)/2; on pure states "
       "Im Q = +4*omega while Im(4h) = -4*omega"},
  };

  if (report.has_classical) {
    doc["classical"] = {
        {"fisher", matrix_to_json(report.fisher)},
        {"score_mean", vector_to_json(report.score_mean)},
        {"support_size", report.support_size},
    };
  }
  if (report.has_pure) {
    doc["pure_geometry"] = {
        {"h_re", matrix_to_json(report.h.real())},
        {"h_im", matrix_to_json(report.h.imag())},
        {"g", matrix_to_json(report.g)},
        {"omega", matrix_to_json(report.omega)},
        {"quarter_classical", matrix_to_json(report.quarter_classical)},
        {"alpha_covariance", matrix_to_json(report.alpha_covariance)},
        {"mean_dalpha", vector_to_json(report.mean_dalpha)},
    };
  }
  if (report.has_qfi) {
    json residuals = json::array();
    for (double r : report.sld_residuals) residuals.push_back(r);
    doc["qfi"] = {
        {"q_re", matrix_to_json(report.q.real())},
        {"q_im", matrix_to_json(report.q.imag())},
        {"metric_part", matrix_to_json(report.metric_part)},
        {"asym_part", matrix_to_json(report.asym_part)},
        {"sld_residuals", std::move(residuals)},
        {"support_rank", report.support_rank},
    };
  }

  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = {
        {"name", c.name},
        {"residual", c.residual},
        {"tolerance", c.tolerance},
        {"status", to_string(c.status)},
    };
    if (!c.note.empty()) entry["note"] = c.note;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);

  json warnings = json::array();
  for (const auto& w : report.warnings) warnings.push_back(w);
  doc["warnings"] = std::move(warnings);
  doc["status"] = to_string(report.overall());

  return doc.dump(2) + "\n";
}

int exit_code_for(const Report& report) {
  switch (report.overall()) {
    case CheckStatus::Fail:
      return 2;
    case CheckStatus::Warn:
      return 1;
    default:
      return 0;
  }
}

}  // namespace qig
