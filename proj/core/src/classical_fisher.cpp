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

#include "qig/classical_fisher.hpp"

#include <cmath>

namespace qig {

double expectation(const SampleSpace& space, const Eigen::VectorXd& density,
                   const Eigen::VectorXd& f) {
  if (density.size() != space.size() || f.size() != space.size()) {
    throw ValidationError("expectation: array lengths do not match the space");
  }
  return space.weights().cwiseProduct(density).dot(f);
}

ScoreSet score_functions(const SampleSpace& space, const ProbabilityJet& jet) {
  const Eigen::Index n = space.size();
  if (jet.value.size() != n) {
    throw ValidationError("score_functions: jet does not match the space");
  }
  const auto m = jet.partials.size();
  const Eigen::VectorXd& w = space.weights();
  const Eigen::VectorXd& p = jet.value;
  const double pmax = p.maxCoeff();
  if (!(pmax > 0.0)) {
    throw ValidationError("score_functions: density vanishes everywhere");
  }

  ScoreSet out;
  out.support.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.support[i] = p[i] >= tol::support_rel * pmax;
  }
  out.mean.resize(static_cast<Eigen::Index>(m));
  out.warnings = jet.warnings;

  for (std::size_t j = 0; j < m; ++j) {
    Eigen::VectorXd score = Eigen::VectorXd::Zero(n);
    double mean = 0.0;
    double worst_boundary = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (out.support[i]) {
        score[i] = jet.partials[j](i) / p[i];
        mean += w[i] * p[i] * score[i];
      } else if (std::abs(jet.partials[j](i)) > tol::boundary) {
        worst_boundary =
            std::max(worst_boundary, std::abs(jet.partials[j](i)));
      }
    }
    if (worst_boundary > 0.0) {
      out.warnings.push_back(
          "support boundary: off-support density derivative up to " +
          format_scientific(worst_boundary) + " for parameter " +
          std::to_string(j) +
          "; Fisher information may diverge at the boundary");
    }
    out.mean[static_cast<Eigen::Index>(j)] = mean;
    out.scores.push_back(std::move(score));
  }
  return out;
}

ScoreSet score_functions(const ProbabilityModel& model,
                         const ParameterVector& theta) {
  return score_functions(model.space(), differentiate(model, theta));
}

RealMatrix classical_fisher_matrix(const SampleSpace& space,
                                   const ProbabilityJet& jet) {
  const ScoreSet scores = score_functions(space, jet);
  const auto m = static_cast<Eigen::Index>(scores.scores.size());
  const Eigen::VectorXd& w = space.weights();
  const Eigen::VectorXd& p = jet.value;

  RealMatrix fisher(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = j; k < m; ++k) {
      double acc = 0.0;
      for (Eigen::Index i = 0; i < space.size(); ++i) {
        if (scores.support[i]) {
          acc += w[i] * p[i] * scores.scores[static_cast<std::size_t>(j)][i] *
                 scores.scores[static_cast<std::size_t>(k)][i];
        }
      }
      fisher(j, k) = acc;
      fisher(k, j) = acc;
    }
  }
  // downstream PSD checks rely on exact symmetry
  return 0.5 * (fisher + fisher.transpose()).eval();
}

RealMatrix classical_fisher_matrix(const ProbabilityModel& model,
                                   const ParameterVector& theta) {
  return classical_fisher_matrix(model.space(), differentiate(model, theta));
}

}  // namespace qig
