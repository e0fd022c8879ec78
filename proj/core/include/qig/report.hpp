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

#include "qig/model_spec.hpp"
#include "qig/types.hpp"

namespace qig {

enum class CheckStatus { Pass, Warn, Fail, NotApplicable };

const char* to_string(CheckStatus status);

/// One named identity check. The status is derived solely from residual vs
/// tolerance; `warn_only` checks downgrade to Warn instead of Fail.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Pass;
  std::string note;
};

struct Report {
  // model echo
  std::string kind;
  std::string model_name;
  ParameterVector theta;
  std::string derivative_mode;
  bool tabulated = false;
  int dim_params = 0;

  // classical block (probability and pure-state models)
  bool has_classical = false;
  RealMatrix fisher;
  Eigen::VectorXd score_mean;
  Eigen::Index support_size = 0;

  // pure-state geometry block
  bool has_pure = false;
  Eigen::MatrixXcd h;
  RealMatrix g, omega, quarter_classical, alpha_covariance;
  Eigen::VectorXd mean_dalpha;

  // QFI block (pure-state and density models)
  bool has_qfi = false;
  Eigen::MatrixXcd q;
  RealMatrix metric_part, asym_part;
  std::vector<double> sld_residuals;
  int support_rank = 0;

  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  CheckStatus overall() const;
};

struct RunOptions {
  /// Fault-injection hook for negative-control tests. Supported:
  /// "" (none) and "omega-sign" (flips the sign of the reported omega,
  /// which must trip the assembly-imag check on any model with omega != 0).
  std::string mutate;
};

Report run_report(const LoadedModel& loaded, const RunOptions& options = {});

/// Deterministic JSON rendering: numbers in round-trip precision, matrices
/// as row-major nested arrays. The timestamp is the only nondeterministic
/// field and can be suppressed.
std::string render_report_json(const Report& report,
                               bool include_timestamp = true);

/// 0 = all pass, 1 = at least one warn and no fail, 2 = any fail.
/// (Input errors map to 3 in the CLI.)
int exit_code_for(const Report& report);

struct VerifySummary {
  int models = 0;
  int checks = 0;
  int passed = 0;
  int warned = 0;
  int failed = 0;
  std::string text;  ///< printable multi-line summary
};

/// Batch property runner: `count` random models per family (pure, real pure,
/// probability, density), analytic and central-difference paths, full check
/// suites plus the cross-mode derivative comparison. Deterministic per seed.
/// Throws ValidationError for count < 1.
VerifySummary verify_suite(std::uint64_t seed, int count,
                           const RunOptions& options = {});

}  // namespace qig
