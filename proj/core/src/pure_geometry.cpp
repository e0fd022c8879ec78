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

#include "qig/pure_geometry.hpp"

#include <cmath>
#include <utility>

#include "qig/classical_fisher.hpp"

namespace qig {

namespace {

constexpr Complex kI{0.0, 1.0};

/// <a|b> = sum_i w_i conj(a_i) b_i
Complex weighted_inner(const Eigen::VectorXd& w, const Eigen::VectorXcd& a,
                       const Eigen::VectorXcd& b) {
  Complex acc = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    acc += w[i] * std::conj(a(i)) * b(i);
  }
  return acc;
}

}  // namespace

HermitianTensor::HermitianTensor(const Eigen::MatrixXcd& raw) {
  if (raw.rows() != raw.cols()) {
    throw ValidationError("HermitianTensor: matrix must be square");
  }
  if (!raw.allFinite()) {
    throw ValidationError("HermitianTensor: entries must be finite");
  }
  hermiticity_defect_ = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  entries_ = 0.5 * (raw + raw.adjoint());
}

double psd_defect(const RealMatrix& symmetric, double scale) {
  if (symmetric.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(symmetric,
                                               Eigen::EigenvaluesOnly);
  const double negative = std::max(0.0, -es.eigenvalues().minCoeff());
  if (negative == 0.0) return 0.0;
  return negative / std::max(scale, 1e-300);
}

double psd_defect(const RealMatrix& symmetric) {
  if (symmetric.size() == 0) return 0.0;
  return psd_defect(symmetric, symmetric.cwiseAbs().maxCoeff());
}

HermitianTensor hermitian_tensor(const SampleSpace& space,
                                 const AmplitudeJet& jet) {
  const auto m = static_cast<Eigen::Index>(jet.partials.size());
  const Eigen::VectorXd& w = space.weights();

  const double norm2 = weighted_inner(w, jet.value, jet.value).real();
  if (!(norm2 > 1e-150)) {
    throw ValidationError("hermitian_tensor: zero state vector");
  }

  // a_j = <psi|d_j psi>
  Eigen::VectorXcd a(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    a(j) = weighted_inner(w, jet.value, jet.partials[static_cast<std::size_t>(j)]);
  }

  // H_jk = <d_k psi|d_j psi>/N - <psi|d_j psi><d_k psi|psi>/N^2. The row
  // index sits in the holomorphic slot; this is the sign convention that
  // makes Im H = -Omega with Omega_jk = (1/2)E_p[dlnp_j dalpha_k -
  // dlnp_k dalpha_j].
  Eigen::MatrixXcd h(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      const Complex overlap =
          weighted_inner(w, jet.partials[static_cast<std::size_t>(k)],
                         jet.partials[static_cast<std::size_t>(j)]);
      h(j, k) = overlap / norm2 - a(j) * std::conj(a(k)) / (norm2 * norm2);
    }
  }
  return HermitianTensor(h);
}

HermitianTensor hermitian_tensor(const PureStateModel& model,
                                 const ParameterVector& theta) {
  return hermitian_tensor(model.space(), differentiate(model, theta));
}

DecomposeOptions DecomposeOptions::for_mode(DerivativeMode mode) {
  DecomposeOptions options;
  options.assembly_tol = mode == DerivativeMode::Analytic
                             ? tol::assembly_analytic
                             : tol::assembly_fd;
  return options;
}

PullbackDecomposition decompose(const PureStateModel& model,
                                const ParameterVector& theta,
                                const DecomposeOptions& options) {
  const SampleSpace& space = model.space();
  const Eigen::VectorXd& w = space.weights();
  const AmplitudeJet jet = differentiate(model, theta);
  const auto m = static_cast<Eigen::Index>(jet.partials.size());

  HermitianTensor h = hermitian_tensor(space, jet);
  const LogDifferentialPair ld = log_differentials(space, jet);

  const double norm2 = weighted_inner(w, jet.value, jet.value).real();
  const Eigen::VectorXd p = jet.value.cwiseAbs2() / norm2;

  auto mean = [&](const Eigen::VectorXd& f) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < space.size(); ++i) {
      if (ld.support[i]) acc += w[i] * p[i] * f[i];
    }
    return acc;
  };
  auto mean2 = [&](const Eigen::VectorXd& f, const Eigen::VectorXd& g) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < space.size(); ++i) {
      if (ld.support[i]) acc += w[i] * p[i] * f[i] * g[i];
    }
    return acc;
  };

  PullbackDecomposition out{std::move(h),
                            RealMatrix(m, m),
                            RealMatrix(m, m),
                            RealMatrix(m, m),
                            RealMatrix(m, m),
                            RealMatrix(m, m),
                            Eigen::VectorXd(m),
                            0.0,
                            0.0,
                            0.0,
                            0.0,
                            ld.warnings};
  out.g = out.h.real_part();
  out.omega = out.h.imag_part_negated();

  for (Eigen::Index j = 0; j < m; ++j) {
    out.mean_dalpha(j) = mean(ld.dalpha[static_cast<std::size_t>(j)]);
  }

  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      const auto uj = static_cast<std::size_t>(j);
      const auto uk = static_cast<std::size_t>(k);
      out.quarter_classical(j, k) = 0.25 * mean2(ld.dlnp[uj], ld.dlnp[uk]);
      out.alpha_covariance(j, k) = mean2(ld.dalpha[uj], ld.dalpha[uk]) -
                                   out.mean_dalpha(j) * out.mean_dalpha(k);
      out.omega_from_logdiffs(j, k) =
          0.5 * (mean2(ld.dlnp[uj], ld.dalpha[uk]) -
                 mean2(ld.dlnp[uk], ld.dalpha[uj]));
    }
  }
  out.quarter_classical = 0.5 * (out.quarter_classical +
                                 out.quarter_classical.transpose()).eval();
  out.alpha_covariance =
      0.5 * (out.alpha_covariance + out.alpha_covariance.transpose()).eval();

  out.assembly_defect_real =
      (out.g - out.quarter_classical - out.alpha_covariance)
          .cwiseAbs()
          .maxCoeff();
  out.assembly_defect_imag =
      (out.h.entries().imag() + out.omega_from_logdiffs).cwiseAbs().maxCoeff();

  // reconstruction of the partials from the log differentials, and the
  // largest |dalpha|, both on the support
  for (Eigen::Index i = 0; i < space.size(); ++i) {
    if (!ld.support[i]) continue;
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const Complex u{0.5 * ld.dlnp[uj][i], ld.dalpha[uj][i]};
      out.cross_defect = std::max(
          out.cross_defect,
          std::abs(u * jet.value(i) - jet.partials[uj](i)));
      out.max_dalpha = std::max(out.max_dalpha, std::abs(ld.dalpha[uj][i]));
    }
  }

  // Off-support amplitude derivatives mean the polar route cannot see part
  // of the tensor; in that case the mismatch is a support-boundary issue,
  // not a differentiation failure.
  double leak = 0.0;
  for (Eigen::Index i = 0; i < space.size(); ++i) {
    if (ld.support[i]) continue;
    for (const auto& dpsi : jet.partials) {
      leak = std::max(leak, w[i] * std::norm(dpsi(i)));
    }
  }
  const bool boundary_leak = leak > tol::boundary;
  if (boundary_leak) {
    out.warnings.push_back(
        "support boundary: masked points carry amplitude derivatives (w|dpsi|^2 up to " +
        format_scientific(leak) + "); polar decomposition is incomplete there");
  }

  const double defect =
      std::max(out.assembly_defect_real, out.assembly_defect_imag);
  if (options.enforce && defect > options.assembly_tol && !boundary_leak) {
    throw ConsistencyError(
        "decompose: polar assembly disagrees with the direct tensor (defect " +
        format_scientific(defect) + " > " + format_scientific(options.assembly_tol) +
        "); derivative callbacks are likely inconsistent with the evaluator");
  }
  return out;
}

PullbackDecomposition decompose(const PureStateModel& model,
                                const ParameterVector& theta) {
  return decompose(model, theta, DecomposeOptions::for_mode(model.mode()));
}

PureStateModel gauge_transform(
    const PureStateModel& model,
    std::function<double(const ParameterVector&)> beta,
    std::function<Eigen::VectorXd(const ParameterVector&)> beta_gradient) {
  if (!beta) {
    throw ValidationError("gauge_transform: beta must be callable");
  }
  PureStateModel::Init init;
  init.space = model.space();
  init.dim_params = model.dim_params();
  init.norm_tol = model.norm_tol();
  init.tabulated = model.tabulated();
  init.name = model.name() + "+gauge";
  init.admissible = [model](const ParameterVector& t) {
    return model.admissible(t);
  };
  init.amplitudes = [model, beta](const ParameterVector& t) -> Eigen::VectorXcd {
    return std::exp(kI * beta(t)) * model.amplitudes(t);
  };
  const bool analytic =
      model.mode() == DerivativeMode::Analytic && beta_gradient != nullptr;
  init.mode = analytic ? DerivativeMode::Analytic
                       : DerivativeMode::FiniteDifference;
  if (analytic) {
    init.amplitude_partial =
        [model, beta, beta_gradient](int j, const ParameterVector& t)
        -> Eigen::VectorXcd {
      const Complex phase = std::exp(kI * beta(t));
      const double dbeta = beta_gradient(t)[j];
      return phase * (model.amplitude_partial(j, t) +
                      kI * dbeta * model.amplitudes(t));
    };
  }
  return PureStateModel(std::move(init));
}

RealMatrix dominance_gap(const PureStateModel& model,
                         const ParameterVector& theta) {
  const PullbackDecomposition d = decompose(model, theta);
  return d.g - d.quarter_classical;
}

}  // namespace qig
