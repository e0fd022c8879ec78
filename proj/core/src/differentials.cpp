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

#include "qig/differentials.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qig {

namespace {

// Left/right stencils disagreeing beyond this (relative to the central
// value) flags a possible kink; surfaced as a warning, never an error.
constexpr double kStencilAgreement = 1e-3;

template <typename Value>
double max_abs(const Value& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

// Central differences with the per-parameter steps h_j. `evaluate` maps an
// admissible theta to the model value; admissibility of every stencil point
// is checked up front so the error can name the parameter.
template <typename Value, typename Model, typename Evaluate>
void central_differences(const Model& model, const ParameterVector& theta,
                         const Evaluate& evaluate, Value& value,
                         std::vector<Value>& partials,
                         std::vector<std::string>& warnings) {
  const int m = model.dim_params();
  value = evaluate(theta);
  partials.resize(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double h = fd_step(theta[j]);
    ParameterVector plus = theta, minus = theta;
    plus[j] += h;
    minus[j] -= h;
    if (!model.admissible(plus) || !model.admissible(minus)) {
      throw DomainError("model '" + model.name() +
                        "': finite-difference stencil for parameter " +
                        std::to_string(j) +
                        " leaves the admissible domain (step " +
                        format_scientific(h) + ")");
    }
    const Value fp = evaluate(plus);
    const Value fm = evaluate(minus);
    Value central = (fp - fm) / (2.0 * h);
    // one-sided stencils around the already-computed center
    const Value right = (fp - value) / h;
    const Value left = (value - fm) / h;
    const double disagreement = max_abs<Value>(right - left);
    const double scale = std::max(1.0, max_abs<Value>(central));
    if (disagreement > kStencilAgreement * scale) {
      warnings.push_back(
          "model '" + model.name() + "': left/right stencils for parameter " +
          std::to_string(j) + " disagree (|r-l| = " +
          format_scientific(disagreement) +
          "); the model may not be C1 at this theta");
    }
    partials[static_cast<std::size_t>(j)] = std::move(central);
  }
}

}  // namespace

double fd_step(double t) {
  static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  return h0 * std::max(1.0, std::abs(t));
}

AmplitudeJet differentiate(const PureStateModel& model,
                           const ParameterVector& theta) {
  validate_parameter_vector(theta, model.dim_params());
  AmplitudeJet jet;
  if (model.mode() == DerivativeMode::Analytic) {
    jet.value = model.amplitudes(theta);
    for (int j = 0; j < model.dim_params(); ++j) {
      jet.partials.push_back(model.amplitude_partial(j, theta));
    }
    return jet;
  }
  central_differences<Eigen::VectorXcd>(
      model, theta,
      [&model](const ParameterVector& t) { return model.amplitudes(t); },
      jet.value, jet.partials, jet.warnings);
  return jet;
}

ProbabilityJet differentiate(const ProbabilityModel& model,
                             const ParameterVector& theta) {
  validate_parameter_vector(theta, model.dim_params());
  ProbabilityJet jet;
  if (model.mode() == DerivativeMode::Analytic) {
    jet.value = model.density(theta);
    for (int j = 0; j < model.dim_params(); ++j) {
      jet.partials.push_back(model.density_partial(j, theta));
    }
    return jet;
  }
  central_differences<Eigen::VectorXd>(
      model, theta,
      [&model](const ParameterVector& t) { return model.density(t); },
      jet.value, jet.partials, jet.warnings);
  return jet;
}

DensityMatrixJet differentiate(const DensityModel& model,
                               const ParameterVector& theta) {
  validate_parameter_vector(theta, model.dim_params());
  DensityMatrixJet jet;
  if (model.mode() == DerivativeMode::Analytic) {
    jet.value = model.density_matrix(theta);
    for (int j = 0; j < model.dim_params(); ++j) {
      jet.partials.push_back(model.density_matrix_partial(j, theta));
    }
    return jet;
  }
  central_differences<Eigen::MatrixXcd>(
      model, theta,
      [&model](const ParameterVector& t) { return model.density_matrix(t); },
      jet.value, jet.partials, jet.warnings);
  return jet;
}

LogDifferentialPair log_differentials(const SampleSpace& space,
                                      const AmplitudeJet& jet) {
  const Eigen::Index n = space.size();
  if (jet.value.size() != n) {
    throw ValidationError("log_differentials: jet does not match the space");
  }
  const auto m = jet.partials.size();

  const Eigen::VectorXd p = jet.value.cwiseAbs2();
  const double pmax = p.maxCoeff();
  if (!(pmax > 0.0)) {
    throw ValidationError("log_differentials: zero state vector");
  }

  LogDifferentialPair out;
  out.support.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.support[i] = p[i] >= tol::support_rel * pmax;
  }
  out.warnings = jet.warnings;

  for (std::size_t j = 0; j < m; ++j) {
    Eigen::VectorXd dlnp = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd dalpha = Eigen::VectorXd::Zero(n);
    double worst_boundary = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (out.support[i]) {
        const Complex ratio = jet.partials[j](i) / jet.value(i);
        dlnp[i] = 2.0 * ratio.real();
        dalpha[i] = ratio.imag();
      } else {
        // d_j p = 2 Re(conj(psi) d_j psi); nonzero here means the support
        // boundary moves with theta and log-derivatives blow up nearby
        const double dp =
            2.0 * (std::conj(jet.value(i)) * jet.partials[j](i)).real();
        worst_boundary = std::max(worst_boundary, std::abs(dp));
      }
    }
    if (worst_boundary > tol::boundary) {
      out.warnings.push_back(
          "support boundary: off-support density derivative up to " +
          format_scientific(worst_boundary) + " for parameter " +
          std::to_string(j) +
          "; Fisher information may diverge at the boundary");
    }
    out.dlnp.push_back(std::move(dlnp));
    out.dalpha.push_back(std::move(dalpha));
  }
  return out;
}

LogDifferentialPair log_differentials(const PureStateModel& model,
                                      const ParameterVector& theta) {
  return log_differentials(model.space(), differentiate(model, theta));
}

double check_normalization_differential(const SampleSpace& space,
                                        const AmplitudeJet& jet) {
  const Eigen::VectorXd& w = space.weights();
  double worst = 0.0;
  for (const auto& dpsi : jet.partials) {
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      acc += w[i] * std::conj(jet.value(i)) * dpsi(i);
    }
    worst = std::max(worst, std::abs(acc.real()));
  }
  return worst;
}

double check_normalization_differential(const PureStateModel& model,
                                        const ParameterVector& theta) {
  return check_normalization_differential(model.space(),
                                          differentiate(model, theta));
}

}  // namespace qig
