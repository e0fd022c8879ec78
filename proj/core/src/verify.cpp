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

#include <cmath>
#include <sstream>
#include <utility>

#include "qig/catalog.hpp"
#include "qig/classical_fisher.hpp"
#include "qig/pure_geometry.hpp"
#include "qig/random.hpp"
#include "qig/report.hpp"

namespace qig {

namespace {

// verify-only thresholds for the cross-mode comparisons
constexpr double kFdVsAnalyticRel = 1e-6;
constexpr double kGaugeSweepTol = tol::gauge;

struct Tally {
  int models = 0;
  int passed = 0;
  int warned = 0;
  int failed = 0;
  int checks = 0;

  void absorb(const Report& report) {
    for (const auto& c : report.checks) {
      ++checks;
      switch (c.status) {
        case CheckStatus::Fail:
          ++failed;
          break;
        case CheckStatus::Warn:
          ++warned;
          break;
        default:
          ++passed;
          break;
      }
    }
  }

  void record(bool ok) {
    ++checks;
    ok ? ++passed : ++failed;
  }
};

ParameterVector random_theta(RandomStream& rng, int m, double lo, double hi) {
  ParameterVector theta(m);
  for (int j = 0; j < m; ++j) theta[j] = rng.uniform(lo, hi);
  return theta;
}

template <typename Model>
void run_both_modes(Tally& tally, const Model& model,
                    const ParameterVector& theta, const std::string& kind,
                    const RunOptions& options) {
  for (DerivativeMode mode :
       {DerivativeMode::Analytic, DerivativeMode::FiniteDifference}) {
    LoadedModel loaded{model.with_mode(mode), theta,
                       Tolerances::defaults(mode, false), kind, "verify"};
    tally.absorb(run_report(loaded, options));
    ++tally.models;
  }
}

double fd_vs_analytic_pure(const PureStateModel& model,
                           const ParameterVector& theta) {
  const AmplitudeJet analytic = differentiate(model, theta);
  const AmplitudeJet fd =
      differentiate(model.with_mode(DerivativeMode::FiniteDifference), theta);
  double rel = 0.0;
  for (std::size_t j = 0; j < analytic.partials.size(); ++j) {
    const double diff =
        (analytic.partials[j] - fd.partials[j]).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, analytic.partials[j].cwiseAbs().maxCoeff());
    rel = std::max(rel, diff / scale);
  }
  return rel;
}

double fd_vs_analytic_probability(const ProbabilityModel& model,
                                  const ParameterVector& theta) {
  const ProbabilityJet analytic = differentiate(model, theta);
  const ProbabilityJet fd =
      differentiate(model.with_mode(DerivativeMode::FiniteDifference), theta);
  double rel = 0.0;
  for (std::size_t j = 0; j < analytic.partials.size(); ++j) {
    const double diff =
        (analytic.partials[j] - fd.partials[j]).cwiseAbs().maxCoeff();
    const double scale = std::max(1.0, analytic.partials[j].cwiseAbs().maxCoeff());
    rel = std::max(rel, diff / scale);
  }
  return rel;
}

double gauge_sweep(const PureStateModel& model, const ParameterVector& theta,
                   RandomStream& rng, int transforms) {
  const Eigen::MatrixXcd reference = hermitian_tensor(model, theta).entries();
  double worst = 0.0;
  for (int t = 0; t < transforms; ++t) {
    const double a = rng.uniform(-1.0, 1.0);
    const double b = rng.uniform(-1.0, 1.0);
    const double c = rng.uniform(-1.0, 1.0);
    auto beta = [a, b, c](const ParameterVector& x) {
      return a * x[0] + b * std::sin(c * x.sum());
    };
    auto beta_grad = [a, b, c](const ParameterVector& x) {
      Eigen::VectorXd g =
          Eigen::VectorXd::Constant(x.size(), b * c * std::cos(c * x.sum()));
      g[0] += a;
      return g;
    };
    const PureStateModel transformed = gauge_transform(model, beta, beta_grad);
    const Eigen::MatrixXcd h = hermitian_tensor(transformed, theta).entries();
    worst = std::max(worst, (h - reference).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

VerifySummary verify_suite(std::uint64_t seed, int count,
                           const RunOptions& options) {
  if (count < 1) {
    throw ValidationError("verify_suite: count must be >= 1");
  }

  Tally tally;
  RandomStream rng(seed);

  for (int k = 0; k < count; ++k) {
    const std::uint64_t model_seed = seed * 1000003ull + 17ull * static_cast<std::uint64_t>(k);
    const int n = 2 + static_cast<int>(rng.integer(7));   // 2..8
    const int m = 1 + static_cast<int>(rng.integer(3));   // 1..3
    const int n_density = 2 + static_cast<int>(rng.integer(5));  // 2..6

    const ParameterVector theta = random_theta(rng, m, -1.0, 1.0);

    const PureStateModel pure = make_random_pure(n, m, model_seed);
    const PureStateModel real_pure = make_random_real_pure(n, m, model_seed + 1);
    const ProbabilityModel prob = make_random_probability(n, m, model_seed + 2);
    const DensityModel density = make_random_density(n_density, m, model_seed + 3);

    run_both_modes(tally, pure, theta, "pure_state", options);
    run_both_modes(tally, real_pure, theta, "pure_state", options);
    run_both_modes(tally, prob, theta, "probability", options);
    run_both_modes(tally, density, theta, "density", options);

    tally.record(fd_vs_analytic_pure(pure, theta) <= kFdVsAnalyticRel);
    tally.record(fd_vs_analytic_probability(prob, theta) <= kFdVsAnalyticRel);
    tally.record(gauge_sweep(pure, theta, rng, 3) <= kGaugeSweepTol);

    // catalog fixtures at random admissible parameter points
    const ParameterVector coin =
        (ParameterVector(1) << rng.uniform(0.05, 0.95)).finished();
    tally.record(normalization_defect(make_bernoulli(), coin) <=
                 tol::norm_analytic);
    const ParameterVector bloch = random_theta(rng, 2, -3.0, 3.0);
    tally.record(normalization_defect(make_qubit(), bloch) <=
                 tol::norm_analytic);
  }

  VerifySummary summary;
  summary.models = tally.models;
  summary.checks = tally.checks;
  summary.passed = tally.passed;
  summary.warned = tally.warned;
  summary.failed = tally.failed;

  std::ostringstream text;
  text << "verify: models=" << summary.models << " checks=" << summary.checks
       << " pass=" << summary.passed << " warn=" << summary.warned
       << " fail=" << summary.failed;
  summary.text = text.str();
  return summary;
}

}  // namespace qig
