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

#include "qig/errors.hpp"
#include "qig/random.hpp"
#include "qig/tolerances.hpp"
#include "qig/types.hpp"

namespace qig {

const char* to_string(DerivativeMode mode) {
  switch (mode) {
    case DerivativeMode::Analytic:
      return "analytic";
    case DerivativeMode::FiniteDifference:
      return "finite_difference";
  }
  return "unknown";
}

std::string format_scientific(double value) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << value;
  return out.str();
}

double RandomStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) {
    u1 = uniform();
  }
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  constexpr double two_pi = 6.283185307179586476925286766559;
  spare_ = r * std::sin(two_pi * u2);
  have_spare_ = true;
  return r * std::cos(two_pi * u2);
}

std::uint64_t RandomStream::integer(std::uint64_t bound) {
  // modulo bias is irrelevant at the bounds used here (tens)
  return bound == 0 ? 0 : gen_() % bound;
}

Tolerances Tolerances::defaults(DerivativeMode mode, bool tabulated) {
  Tolerances t;
  if (mode == DerivativeMode::FiniteDifference || tabulated) {
    t.norm_diff = tol::norm_diff_fd;
    t.hermiticity = tol::hermiticity_fd;
    t.cross = tol::cross_fd;
    t.assembly = tol::assembly_fd;
    t.score_mean = tol::score_mean_fd;
    t.sld = tol::sld_fd;
    t.identities = tol::identities_fd;
    t.classical_recovery = tol::classical_recovery_fd;
    t.qfi_agreement = tol::qfi_agreement_fd;
    t.herm = tol::herm_fd;
    t.trace = tol::trace_fd;
    t.purity = tol::purity_fd;
  }
  t.norm = tabulated ? tol::norm_tabulated : tol::norm_analytic;
  return t;
}

void Tolerances::set(const std::string& name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ValidationError("tolerance override '" + name +
                          "' must be positive and finite");
  }
  if (name == "norm") {
    norm = value;
  } else if (name == "norm_diff") {
    norm_diff = value;
  } else if (name == "hermiticity") {
    hermiticity = value;
  } else if (name == "cross") {
    cross = value;
  } else if (name == "assembly") {
    assembly = value;
  } else if (name == "score_mean") {
    score_mean = value;
  } else if (name == "sld") {
    sld = value;
  } else if (name == "identities") {
    identities = value;
  } else if (name == "classical_recovery") {
    classical_recovery = value;
  } else if (name == "qfi_agreement") {
    qfi_agreement = value;
  } else if (name == "gauge") {
    gauge = value;
  } else if (name == "psd_rel") {
    psd_rel = value;
  } else if (name == "herm") {
    herm = value;
  } else if (name == "trace") {
    trace = value;
  } else if (name == "purity") {
    purity = value;
  } else {
    throw ValidationError("unknown tolerance override '" + name + "'");
  }
}

}  // namespace qig
