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

#include "qig/sld_qfi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qig {

namespace {

double max_abs(const Eigen::MatrixXcd& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

void validate_density_state(const Eigen::MatrixXcd& rho,
                            const SldOptions& options) {
  if (rho.rows() != rho.cols()) {
    throw ValidationError("sld_solve: rho must be square");
  }
  const double herm_defect = max_abs(rho - rho.adjoint());
  if (herm_defect > options.herm_tol) {
    throw ValidationError("sld_solve: rho not Hermitian (defect " +
                          format_scientific(herm_defect) + ")");
  }
  const double trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_defect > options.norm_tol) {
    throw ValidationError("sld_solve: Tr rho != 1 (defect " +
                          format_scientific(trace_defect) + ")");
  }
}

QFITensor tensor_from_entries(Eigen::MatrixXcd q) {
  QFITensor out;
  out.entries = std::move(q);
  const Eigen::MatrixXcd herm = 0.5 * (out.entries + out.entries.adjoint());
  out.metric_part = herm.real();
  out.asym_part = herm.imag();
  return out;
}

}  // namespace

SldOptions SldOptions::for_mode(DerivativeMode mode) {
  SldOptions options;
  if (mode == DerivativeMode::FiniteDifference) {
    options.herm_tol = tol::herm_fd;
    options.trace_tol = tol::trace_fd;
    options.norm_tol = tol::norm_tabulated;
    options.sld_tol = tol::sld_fd;
  }
  return options;
}

SLDSet sld_solve(const Eigen::MatrixXcd& rho,
                 const std::vector<Eigen::MatrixXcd>& drho,
                 const SldOptions& options) {
  validate_density_state(rho, options);
  const Eigen::Index n = rho.rows();

  for (std::size_t j = 0; j < drho.size(); ++j) {
    if (drho[j].rows() != n || drho[j].cols() != n) {
      throw ValidationError("sld_solve: drho_" + std::to_string(j) +
                            " has the wrong shape");
    }
    const double herm_defect = max_abs(drho[j] - drho[j].adjoint());
    if (herm_defect > options.herm_tol) {
      throw ValidationError("sld_solve: drho_" + std::to_string(j) +
                            " not Hermitian (defect " +
                            format_scientific(herm_defect) + ")");
    }
    const double trace_defect = std::abs(drho[j].trace());
    if (trace_defect > options.trace_tol) {
      throw ValidationError("sld_solve: drho_" + std::to_string(j) +
                            " not traceless (|Tr| = " +
                            format_scientific(trace_defect) + ")");
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 *
                                                     (rho + rho.adjoint()));
  const Eigen::VectorXd lambda = es.eigenvalues();
  const Eigen::MatrixXcd& vecs = es.eigenvectors();
  const double lambda_max = lambda.maxCoeff();
  if (lambda.minCoeff() < -options.psd_rel * lambda_max) {
    throw ValidationError("sld_solve: rho not positive semidefinite (min "
                          "eigenvalue " +
                          format_scientific(lambda.minCoeff()) + ")");
  }
  const double cut = options.rank_cut_rel * lambda_max;

  SLDSet out;
  out.support_rank =
      static_cast<int>((lambda.array() > cut).count());

  for (std::size_t j = 0; j < drho.size(); ++j) {
    const Eigen::MatrixXcd d = vecs.adjoint() * drho[j] * vecs;
    Eigen::MatrixXcd l_eig = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        const double denom = lambda(a) + lambda(b);
        if (denom > cut) {
          l_eig(a, b) = 2.0 * d(a, b) / denom;
        }
      }
    }
    Eigen::MatrixXcd l = vecs * l_eig * vecs.adjoint();
    l = 0.5 * (l + l.adjoint());

    // honest residual: reconstruct in the original basis, then restrict to
    // the support block
    const Eigen::MatrixXcd recon = 0.5 * (rho * l + l * rho) - drho[j];
    const Eigen::MatrixXcd recon_eig = vecs.adjoint() * recon * vecs;
    double residual = 0.0;
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        if (lambda(a) + lambda(b) > cut) {
          residual = std::max(residual, std::abs(recon_eig(a, b)));
        }
      }
    }
    if (residual > options.sld_tol) {
      throw SolverError("sld_solve: support-block residual " +
                        format_scientific(residual) + " exceeds " +
                        format_scientific(options.sld_tol) + " for parameter " +
                        std::to_string(j));
    }
    out.residuals.push_back(residual);
    out.matrices.push_back(std::move(l));
  }
  return out;
}

QFITensor qfi_tensor(const Eigen::MatrixXcd& rho, const SLDSet& slds) {
  const Eigen::Index n = rho.rows();
  const auto m = static_cast<Eigen::Index>(slds.matrices.size());
  for (const auto& l : slds.matrices) {
    if (l.rows() != n || l.cols() != n) {
      throw ValidationError("qfi_tensor: SLD dimension mismatch with rho");
    }
  }
  std::vector<Eigen::MatrixXcd> rho_l;
  rho_l.reserve(static_cast<std::size_t>(m));
  for (const auto& l : slds.matrices) rho_l.push_back(rho * l);

  Eigen::MatrixXcd q(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      q(j, k) = (rho_l[static_cast<std::size_t>(j)] *
                 slds.matrices[static_cast<std::size_t>(k)])
                    .trace();
    }
  }
  return tensor_from_entries(std::move(q));
}

double PureIdentityResiduals::max() const {
  return std::max({projector, trace_drho, trace_rho_drho});
}

PureIdentityResiduals identity_residuals(
    const Eigen::MatrixXcd& rho, const std::vector<Eigen::MatrixXcd>& drho) {
  PureIdentityResiduals out{0.0, 0.0, 0.0};
  for (const auto& d : drho) {
    if (d.rows() != rho.rows() || d.cols() != rho.cols()) {
      throw ValidationError("identity_residuals: drho shape mismatch");
    }
    out.projector = std::max(out.projector, max_abs(rho * d + d * rho - d));
    out.trace_drho = std::max(out.trace_drho, std::abs(d.trace()));
    out.trace_rho_drho =
        std::max(out.trace_rho_drho, std::abs((rho * d).trace()));
  }
  return out;
}

PureIdentityResiduals pure_state_identities(
    const Eigen::MatrixXcd& rho, const std::vector<Eigen::MatrixXcd>& drho,
    double purity_tol) {
  const double purity = purity_check(rho);
  if (purity > purity_tol) {
    throw PreconditionError("pure_state_identities: state is not pure "
                            "(||rho^2 - rho|| = " +
                            format_scientific(purity) + ")");
  }
  return identity_residuals(rho, drho);
}

double purity_check(const Eigen::MatrixXcd& rho) {
  if (rho.rows() != rho.cols()) {
    throw ValidationError("purity_check: rho must be square");
  }
  return max_abs(rho * rho - rho);
}

QFITensor qfi_pure_fast(const PureStateModel& model,
                        const ParameterVector& theta) {
  const HermitianTensor h = hermitian_tensor(model, theta);
  return tensor_from_entries(4.0 * h.entries());
}

QFITensor qfi_pure_from_density(const Eigen::MatrixXcd& rho,
                                const std::vector<Eigen::MatrixXcd>& drho) {
  const auto m = static_cast<Eigen::Index>(drho.size());
  Eigen::MatrixXcd q(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      q(j, k) = 4.0 * (rho * drho[static_cast<std::size_t>(j)] *
                       drho[static_cast<std::size_t>(k)])
                          .trace();
    }
  }
  return tensor_from_entries(std::move(q));
}

}  // namespace qig
