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

#include <cstdint>
#include <string>
#include <vector>

#include "qig/models.hpp"

namespace qig {

// Built-in model catalog. All catalog models ship analytic derivative
// callbacks; call with_mode(DerivativeMode::FiniteDifference) to exercise
// the central-difference path against them.

/// Two-point coin: p(0) = 1 - theta, p(1) = theta, admissible theta in (0,1).
ProbabilityModel make_bernoulli();

/// Bloch-sphere qubit: psi(0) = cos(theta/2), psi(1) = sin(theta/2) e^{i phi},
/// parameters (theta, phi).
PureStateModel make_qubit();

/// One-parameter phase family psi = sqrt(p(x)) e^{i alpha(x) phi} with a
/// theta-independent base density: d ln p = 0 and d alpha = alpha(x) d phi.
/// Throws ValidationError when base_density is unnormalized on the space.
PureStateModel make_phase_encoding(const SampleSpace& space,
                                   std::vector<double> base_density,
                                   std::vector<double> alphas);

/// The 3-point phase-encoding fixture: X = {-1, 0, 1}, unit weights,
/// p = (1/4, 1/2, 1/4), alpha(x) = x.
PureStateModel make_phase_encoding();

/// Gaussian with mean parameter mu, renormalized on the grid so that
/// sum w p = 1 holds exactly. Throws ValidationError for sigma <= 0.
ProbabilityModel make_gaussian_grid(double sigma, const SampleSpace& grid);

/// Smooth random pure-state model: a chain of parameter-dependent unitary
/// rotations exp(i theta_j A_j) applied to a fixed random normalized vector.
/// Deterministic per seed. Requires n >= 2, m >= 1.
PureStateModel make_random_pure(int n, int m, std::uint64_t seed);

/// Random strictly positive probability model (softmax of affine logits),
/// normalized exactly on its space. Deterministic per seed.
ProbabilityModel make_random_probability(int n, int m, std::uint64_t seed);

/// Real nonnegative random pure state psi = sqrt(p) with p from
/// make_random_probability; d alpha vanishes identically.
PureStateModel make_random_real_pure(int n, int m, std::uint64_t seed);

/// Random full-rank density model rho = (M M^dag + delta I) / normalization
/// with M affine in theta. Deterministic per seed.
DensityModel make_random_density(int n, int m, std::uint64_t seed);

/// Names understood by the spec-file catalog kind, with one-line summaries.
std::vector<std::pair<std::string, std::string>> catalog_listing();

}  // namespace qig
