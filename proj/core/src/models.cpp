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

#include "qig/models.hpp"

#include <cmath>
#include <utility>

namespace qig {

namespace {

bool all_finite(const ParameterVector& theta) {
  return theta.allFinite();
}

void check_partial_index(int j, int dim_params) {
  if (j < 0 || j >= dim_params) {
    throw ValidationError("partial-derivative index " + std::to_string(j) +
                          " out of range for " + std::to_string(dim_params) +
                          " parameters");
  }
}

[[noreturn]] void throw_domain(const std::string& name,
                               const ParameterVector& theta) {
  std::string msg = "model '" + name + "': theta = (";
  for (Eigen::Index k = 0; k < theta.size(); ++k) {
    msg += std::to_string(theta[k]);
    if (k + 1 < theta.size()) msg += ", ";
  }
  msg += ") outside the admissible domain";
  throw DomainError(msg);
}

}  // namespace

void validate_parameter_vector(const ParameterVector& theta, int dim_params) {
  if (theta.size() != dim_params) {
    throw ValidationError("parameter vector has " + std::to_string(theta.size()) +
                          " entries, model expects " + std::to_string(dim_params));
  }
  if (!all_finite(theta)) {
    throw ValidationError("parameter vector must be finite");
  }
}

// ---------------------------------------------------------------------------
// ProbabilityModel

ProbabilityModel::ProbabilityModel(Init init)
    : space_(std::move(init.space)),
      dim_params_(init.dim_params),
      density_(std::move(init.density)),
      density_partial_(std::move(init.density_partial)),
      mode_(init.mode),
      admissible_(std::move(init.admissible)),
      norm_tol_(init.norm_tol),
      tabulated_(init.tabulated),
      name_(std::move(init.name)) {
  if (dim_params_ < 1) {
    throw ValidationError("model needs at least one parameter");
  }
  if (!density_) {
    throw ValidationError("probability model needs a density evaluator");
  }
  if (mode_ == DerivativeMode::Analytic && !density_partial_) {
    throw ValidationError(
        "analytic probability model needs a density_partial callback");
  }
}

bool ProbabilityModel::admissible(const ParameterVector& theta) const {
  if (theta.size() != dim_params_ || !all_finite(theta)) return false;
  return admissible_ ? admissible_(theta) : true;
}

Eigen::VectorXd ProbabilityModel::density(const ParameterVector& theta) const {
  if (!admissible(theta)) throw_domain(name_, theta);
  Eigen::VectorXd p = density_(theta);
  if (p.size() != space_.size()) {
    throw ValidationError("model '" + name_ +
                          "': evaluator returned wrong-length density");
  }
  return p;
}

double ProbabilityModel::density_at(Eigen::Index i,
                                    const ParameterVector& theta) const {
  return density(theta)(i);
}

Eigen::VectorXd ProbabilityModel::density_partial(
    int j, const ParameterVector& theta) const {
  check_partial_index(j, dim_params_);
  if (mode_ != DerivativeMode::Analytic) {
    throw PreconditionError("model '" + name_ +
                            "' has no analytic density partials");
  }
  if (!admissible(theta)) throw_domain(name_, theta);
  return density_partial_(j, theta);
}

ProbabilityModel ProbabilityModel::with_mode(DerivativeMode mode) const {
  if (mode == DerivativeMode::Analytic && !density_partial_) {
    throw ValidationError("model '" + name_ +
                          "' cannot be promoted to analytic derivatives");
  }
  ProbabilityModel copy = *this;
  copy.mode_ = mode;
  return copy;
}

// ---------------------------------------------------------------------------
// PureStateModel

PureStateModel::PureStateModel(Init init)
    : space_(std::move(init.space)),
      dim_params_(init.dim_params),
      amplitudes_(std::move(init.amplitudes)),
      amplitude_partial_(std::move(init.amplitude_partial)),
      mode_(init.mode),
      admissible_(std::move(init.admissible)),
      norm_tol_(init.norm_tol),
      tabulated_(init.tabulated),
      name_(std::move(init.name)) {
  if (dim_params_ < 1) {
    throw ValidationError("model needs at least one parameter");
  }
  if (!amplitudes_) {
    throw ValidationError("pure-state model needs an amplitude evaluator");
  }
  if (mode_ == DerivativeMode::Analytic && !amplitude_partial_) {
    throw ValidationError(
        "analytic pure-state model needs an amplitude_partial callback");
  }
}

bool PureStateModel::admissible(const ParameterVector& theta) const {
  if (theta.size() != dim_params_ || !all_finite(theta)) return false;
  return admissible_ ? admissible_(theta) : true;
}

Eigen::VectorXcd PureStateModel::amplitudes(const ParameterVector& theta) const {
  if (!admissible(theta)) throw_domain(name_, theta);
  Eigen::VectorXcd psi = amplitudes_(theta);
  if (psi.size() != space_.size()) {
    throw ValidationError("model '" + name_ +
                          "': evaluator returned wrong-length amplitudes");
  }
  return psi;
}

Complex PureStateModel::amplitude_at(Eigen::Index i,
                                     const ParameterVector& theta) const {
  return amplitudes(theta)(i);
}

Eigen::VectorXcd PureStateModel::amplitude_partial(
    int j, const ParameterVector& theta) const {
  check_partial_index(j, dim_params_);
  if (mode_ != DerivativeMode::Analytic) {
    throw PreconditionError("model '" + name_ +
                            "' has no analytic amplitude partials");
  }
  if (!admissible(theta)) throw_domain(name_, theta);
  return amplitude_partial_(j, theta);
}

PureStateModel PureStateModel::with_mode(DerivativeMode mode) const {
  if (mode == DerivativeMode::Analytic && !amplitude_partial_) {
    throw ValidationError("model '" + name_ +
                          "' cannot be promoted to analytic derivatives");
  }
  PureStateModel copy = *this;
  copy.mode_ = mode;
  return copy;
}

// ---------------------------------------------------------------------------
// DensityModel

DensityModel::DensityModel(Init init)
    : dim_hilbert_(init.dim_hilbert),
      dim_params_(init.dim_params),
      density_matrix_(std::move(init.density_matrix)),
      density_matrix_partial_(std::move(init.density_matrix_partial)),
      mode_(init.mode),
      admissible_(std::move(init.admissible)),
      norm_tol_(init.norm_tol),
      tabulated_(init.tabulated),
      name_(std::move(init.name)) {
  if (dim_hilbert_ < 1) {
    throw ValidationError("density model needs dim_hilbert >= 1");
  }
  if (dim_params_ < 1) {
    throw ValidationError("model needs at least one parameter");
  }
  if (!density_matrix_) {
    throw ValidationError("density model needs an evaluator");
  }
  if (mode_ == DerivativeMode::Analytic && !density_matrix_partial_) {
    throw ValidationError(
        "analytic density model needs a density_matrix_partial callback");
  }
}

bool DensityModel::admissible(const ParameterVector& theta) const {
  if (theta.size() != dim_params_ || !all_finite(theta)) return false;
  return admissible_ ? admissible_(theta) : true;
}

Eigen::MatrixXcd DensityModel::density_matrix(const ParameterVector& theta) const {
  if (!admissible(theta)) throw_domain(name_, theta);
  Eigen::MatrixXcd rho = density_matrix_(theta);
  if (rho.rows() != dim_hilbert_ || rho.cols() != dim_hilbert_) {
    throw ValidationError("model '" + name_ +
                          "': evaluator returned wrong-shape density matrix");
  }
  return rho;
}

Eigen::MatrixXcd DensityModel::density_matrix_partial(
    int j, const ParameterVector& theta) const {
  check_partial_index(j, dim_params_);
  if (mode_ != DerivativeMode::Analytic) {
    throw PreconditionError("model '" + name_ +
                            "' has no analytic density-matrix partials");
  }
  if (!admissible(theta)) throw_domain(name_, theta);
  return density_matrix_partial_(j, theta);
}

DensityModel DensityModel::with_mode(DerivativeMode mode) const {
  if (mode == DerivativeMode::Analytic && !density_matrix_partial_) {
    throw ValidationError("model '" + name_ +
                          "' cannot be promoted to analytic derivatives");
  }
  DensityModel copy = *this;
  copy.mode_ = mode;
  return copy;
}

// ---------------------------------------------------------------------------
// conversions

ProbabilityModel pure_to_probability(const PureStateModel& model) {
  ProbabilityModel::Init init;
  init.space = model.space();
  init.dim_params = model.dim_params();
  init.mode = model.mode();
  init.norm_tol = model.norm_tol();
  init.tabulated = model.tabulated();
  init.name = model.name() + "|psi|^2";
  init.admissible = [model](const ParameterVector& t) {
    return model.admissible(t);
  };
  init.density = [model](const ParameterVector& t) -> Eigen::VectorXd {
    return model.amplitudes(t).cwiseAbs2();
  };
  if (model.mode() == DerivativeMode::Analytic) {
    init.density_partial = [model](int j,
                                   const ParameterVector& t) -> Eigen::VectorXd {
      const Eigen::VectorXcd psi = model.amplitudes(t);
      const Eigen::VectorXcd dpsi = model.amplitude_partial(j, t);
      return 2.0 * (psi.conjugate().cwiseProduct(dpsi)).real();
    };
  }
  return ProbabilityModel(std::move(init));
}

DensityModel pure_to_density(const PureStateModel& model) {
  const Eigen::VectorXd sqrt_w = model.space().weights().cwiseSqrt();
  DensityModel::Init init;
  init.dim_hilbert = static_cast<int>(model.space().size());
  init.dim_params = model.dim_params();
  init.mode = model.mode();
  init.norm_tol = model.norm_tol();
  init.tabulated = model.tabulated();
  init.name = model.name() + "->rho";
  init.admissible = [model](const ParameterVector& t) {
    return model.admissible(t);
  };
  init.density_matrix = [model, sqrt_w](const ParameterVector& t) -> Eigen::MatrixXcd {
    const Eigen::VectorXcd v =
        model.amplitudes(t).cwiseProduct(sqrt_w.cast<Complex>());
    return v * v.adjoint();
  };
  if (model.mode() == DerivativeMode::Analytic) {
    init.density_matrix_partial =
        [model, sqrt_w](int j, const ParameterVector& t) -> Eigen::MatrixXcd {
      const Eigen::VectorXcd v =
          model.amplitudes(t).cwiseProduct(sqrt_w.cast<Complex>());
      const Eigen::VectorXcd dv =
          model.amplitude_partial(j, t).cwiseProduct(sqrt_w.cast<Complex>());
      return dv * v.adjoint() + v * dv.adjoint();
    };
  }
  return DensityModel(std::move(init));
}

DensityModel probability_to_density(const ProbabilityModel& model) {
  const Eigen::VectorXd w = model.space().weights();
  DensityModel::Init init;
  init.dim_hilbert = static_cast<int>(model.space().size());
  init.dim_params = model.dim_params();
  init.mode = model.mode();
  init.norm_tol = model.norm_tol();
  init.tabulated = model.tabulated();
  init.name = model.name() + "->diag";
  init.admissible = [model](const ParameterVector& t) {
    return model.admissible(t);
  };
  init.density_matrix = [model, w](const ParameterVector& t) -> Eigen::MatrixXcd {
    return w.cwiseProduct(model.density(t)).cast<Complex>().asDiagonal();
  };
  if (model.mode() == DerivativeMode::Analytic) {
    init.density_matrix_partial =
        [model, w](int j, const ParameterVector& t) -> Eigen::MatrixXcd {
      return w.cwiseProduct(model.density_partial(j, t)).cast<Complex>().asDiagonal();
    };
  }
  return DensityModel(std::move(init));
}

double normalization_defect(const ProbabilityModel& model,
                            const ParameterVector& theta) {
  return std::abs(model.space().integrate(model.density(theta)) - 1.0);
}

double normalization_defect(const PureStateModel& model,
                            const ParameterVector& theta) {
  return std::abs(
      model.space().integrate(model.amplitudes(theta).cwiseAbs2()) - 1.0);
}

}  // namespace qig
