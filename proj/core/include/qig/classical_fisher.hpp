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
#include <vector>

#include "qig/differentials.hpp"
#include "qig/models.hpp"

namespace qig {

/// E_p(f) = sum_i w_i f_i p_i. Throws ValidationError on length mismatch.
double expectation(const SampleSpace& space, const Eigen::VectorXd& density,
                   const Eigen::VectorXd& f);

/// Score functions d_j ln p = d_j p / p on the support mask (zero off it),
/// with their means E_p[d_j ln p]. The means vanish for exact derivatives;
/// a violation beyond score_mean tolerance is a discretization-quality
/// warning, recorded in `warnings`.
struct ScoreSet {
  std::vector<Eigen::VectorXd> scores;
  Eigen::Array<bool, Eigen::Dynamic, 1> support;
  Eigen::VectorXd mean;
  std::vector<std::string> warnings;
};

ScoreSet score_functions(const ProbabilityModel& model,
                         const ParameterVector& theta);
ScoreSet score_functions(const SampleSpace& space, const ProbabilityJet& jet);

/// Classical Fisher information matrix F_jk = E_p[d_j ln p d_k ln p],
/// assembled on the support and explicitly symmetrized.
RealMatrix classical_fisher_matrix(const ProbabilityModel& model,
                                   const ParameterVector& theta);
RealMatrix classical_fisher_matrix(const SampleSpace& space,
                                   const ProbabilityJet& jet);

}  // namespace qig
