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
#include <utility>

#include "qig/errors.hpp"
#include "qig/sample_space.hpp"
#include "qig/tolerances.hpp"
#include "qig/types.hpp"

namespace qig {

using DomainPredicate = std::function<bool(const ParameterVector&)>;

/// Parametrized probability density p(x; theta) on a finite sample space,
/// normalized as sum_i w_i p_i = 1. Instances are immutable after
/// construction and safe for concurrent read-only use.
class ProbabilityModel {
 public:
  using Evaluator = std::function<Eigen::VectorXd(const ParameterVector&)>;
  using PartialEvaluator =
      std::function<Eigen::VectorXd(int, const ParameterVector&)>;

  struct Init {
    SampleSpace space = SampleSpace::labeled({0.0});
    int dim_params = 1;
    Evaluator density;
    PartialEvaluator density_partial{};  // required iff mode == Analytic
    DerivativeMode mode = DerivativeMode::FiniteDifference;
    DomainPredicate admissible{};  // default: all finite theta
    double norm_tol = tol::norm_analytic;
    bool tabulated = false;
    std::string name = "probability";
  };

  explicit ProbabilityModel(Init init);

  const SampleSpace& space() const { return space_; }
  int dim_params() const { return dim_params_; }
  DerivativeMode mode() const { return mode_; }
  double norm_tol() const { return norm_tol_; }
  bool tabulated() const { return tabulated_; }
  const std::string& name() const { return name_; }

  bool admissible(const ParameterVector& theta) const;

  /// Density values over the whole space. Throws DomainError outside the
  /// admissible domain.
  Eigen::VectorXd density(const ParameterVector& theta) const;
  double density_at(Eigen::Index i, const ParameterVector& theta) const;

  /// Analytic partial d p / d theta_j over the space. Throws
  /// PreconditionError in FiniteDifference mode.
  Eigen::VectorXd density_partial(int j, const ParameterVector& theta) const;

  /// Copy with the derivative mode switched (an Analytic model demoted to
  /// FiniteDifference keeps its evaluator and ignores the callbacks).
  ProbabilityModel with_mode(DerivativeMode mode) const;

 private:
  SampleSpace space_;
  int dim_params_;
  Evaluator density_;
  PartialEvaluator density_partial_;
  DerivativeMode mode_;
  DomainPredicate admissible_;
  double norm_tol_;
  bool tabulated_;
  std::string name_;
};

/// Parametrized pure state psi(x; theta) on a finite sample space, normalized
/// as sum_i w_i |psi_i|^2 = 1.
class PureStateModel {
 public:
  using Evaluator = std::function<Eigen::VectorXcd(const ParameterVector&)>;
  using PartialEvaluator =
      std::function<Eigen::VectorXcd(int, const ParameterVector&)>;

  struct Init {
    SampleSpace space = SampleSpace::labeled({0.0});
    int dim_params = 1;
    Evaluator amplitudes;
    PartialEvaluator amplitude_partial{};
    DerivativeMode mode = DerivativeMode::FiniteDifference;
    DomainPredicate admissible{};
    double norm_tol = tol::norm_analytic;
    bool tabulated = false;
    std::string name = "pure_state";
  };

  explicit PureStateModel(Init init);

  const SampleSpace& space() const { return space_; }
  int dim_params() const { return dim_params_; }
  DerivativeMode mode() const { return mode_; }
  double norm_tol() const { return norm_tol_; }
  bool tabulated() const { return tabulated_; }
  const std::string& name() const { return name_; }

  bool admissible(const ParameterVector& theta) const;

  Eigen::VectorXcd amplitudes(const ParameterVector& theta) const;
  Complex amplitude_at(Eigen::Index i, const ParameterVector& theta) const;
  Eigen::VectorXcd amplitude_partial(int j, const ParameterVector& theta) const;

  PureStateModel with_mode(DerivativeMode mode) const;

 private:
  SampleSpace space_;
  int dim_params_;
  Evaluator amplitudes_;
  PartialEvaluator amplitude_partial_;
  DerivativeMode mode_;
  DomainPredicate admissible_;
  double norm_tol_;
  bool tabulated_;
  std::string name_;
};

/// Parametrized density state theta -> rho(theta): Hermitian, positive
/// semidefinite, unit trace.
class DensityModel {
 public:
  using Evaluator = std::function<Eigen::MatrixXcd(const ParameterVector&)>;
  using PartialEvaluator =
      std::function<Eigen::MatrixXcd(int, const ParameterVector&)>;

  struct Init {
    int dim_hilbert = 2;
    int dim_params = 1;
    Evaluator density_matrix;
    PartialEvaluator density_matrix_partial{};
    DerivativeMode mode = DerivativeMode::FiniteDifference;
    DomainPredicate admissible{};
    double norm_tol = tol::norm_analytic;
    bool tabulated = false;
    std::string name = "density";
  };

  explicit DensityModel(Init init);

  int dim_hilbert() const { return dim_hilbert_; }
  int dim_params() const { return dim_params_; }
  DerivativeMode mode() const { return mode_; }
  double norm_tol() const { return norm_tol_; }
  bool tabulated() const { return tabulated_; }
  const std::string& name() const { return name_; }

  bool admissible(const ParameterVector& theta) const;

  Eigen::MatrixXcd density_matrix(const ParameterVector& theta) const;
  Eigen::MatrixXcd density_matrix_partial(int j,
                                          const ParameterVector& theta) const;

  DensityModel with_mode(DerivativeMode mode) const;

 private:
  int dim_hilbert_;
  int dim_params_;
  Evaluator density_matrix_;
  PartialEvaluator density_matrix_partial_;
  DerivativeMode mode_;
  DomainPredicate admissible_;
  double norm_tol_;
  bool tabulated_;
  std::string name_;
};

/// p = |psi|^2 as a ProbabilityModel. Analytic models keep analytic partials
/// (d p = 2 Re(conj(psi) d psi)).
ProbabilityModel pure_to_probability(const PureStateModel& model);

/// rho = |psi><psi| as a DensityModel on dim_hilbert = |X|. Quadrature
/// weights are absorbed isometrically, v_i = sqrt(w_i) psi_i, so that matrix
/// traces reproduce the weighted integrals.
DensityModel pure_to_density(const PureStateModel& model);

/// Diagonal embedding rho = diag(w_i p_i) of a probability model.
DensityModel probability_to_density(const ProbabilityModel& model);

/// |sum w p - 1| at theta.
double normalization_defect(const ProbabilityModel& model,
                            const ParameterVector& theta);
double normalization_defect(const PureStateModel& model,
                            const ParameterVector& theta);

void validate_parameter_vector(const ParameterVector& theta, int dim_params);

}  // namespace qig
