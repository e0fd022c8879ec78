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

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace qig {

using Complex = std::complex<double>;

/// Parameter point theta in R^m.
using ParameterVector = Eigen::VectorXd;

/// Real m x m matrix over parameter indices (Fisher matrices, metric parts).
using RealMatrix = Eigen::MatrixXd;

/// How a model supplies parameter derivatives.
enum class DerivativeMode {
  Analytic,          ///< user-supplied partial derivative callbacks
  FiniteDifference,  ///< central differences on the evaluator
};

const char* to_string(DerivativeMode mode);

/// Compact scientific rendering for residuals in messages ("3.2e-11").
std::string format_scientific(double value);

}  // namespace qig
