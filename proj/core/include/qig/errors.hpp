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

#include <stdexcept>
#include <string>

namespace qig {

/// Base class of everything thrown by qig.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed construction input: shape mismatch, unnormalized density,
/// nonpositive quadrature weight, and the like.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Parameter point (or finite-difference stencil point) outside the model's
/// admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation precondition not met, e.g. purity required but input is mixed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An implicit solve missed its residual contract.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Two independently computed routes disagree beyond tolerance. Usually a
/// sign of differentiation failure in the model callbacks.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed model spec file. The message carries file/field context.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qig
