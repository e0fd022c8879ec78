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

#include "qig/errors.hpp"
#include "qig/types.hpp"

namespace qig {

/// Hermitian two-tensor H = G - i * Omega over parameter indices: G is the
/// symmetric metric part, Omega the antisymmetric symplectic part. Storage
/// is the hermitized matrix; the defect of the raw input is kept for
/// quality checks.
class HermitianTensor {
 public:
  explicit HermitianTensor(const Eigen::MatrixXcd& raw);

  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }

  /// G = Re H (symmetric).
  RealMatrix real_part() const { return entries_.real(); }

  /// Omega = -Im H (antisymmetric).
  RealMatrix imag_part_negated() const { return -entries_.imag().eval(); }

  /// ||raw - raw^dag||_max of the matrix this tensor was assembled from.
  double hermiticity_defect() const { return hermiticity_defect_; }

 private:
  Eigen::MatrixXcd entries_;
  double hermiticity_defect_;
};

/// max(0, -lambda_min(A)) / scale: PSD defect relative to a reference scale.
/// Near-zero matrices (|lambda_min| ~ roundoff of a larger computation) need
/// the scale of that computation, not their own.
double psd_defect(const RealMatrix& symmetric, double scale);

/// PSD defect relative to the matrix's own max-abs entry. Zero matrices
/// count as PSD.
double psd_defect(const RealMatrix& symmetric);

}  // namespace qig
