// Copyright 2026 The pairchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace pairchain {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A composite would exceed the configured matrix dimension cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// An operator required to be Hermitian is not, within tolerance.
class NotHermitianError : public Error {
 public:
  NotHermitianError(const std::string& what, double asymmetry)
      : Error(what), asymmetry_(asymmetry) {}

  double asymmetry() const noexcept { return asymmetry_; }

 private:
  double asymmetry_;
};

/// An iterative numerical routine hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Unknown, duplicate, or otherwise inconsistent subsystem labels.
class LayoutError : public Error {
 public:
  using Error::Error;
};

/// A scenario document or Scenario value is malformed or infeasible.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

/// An output file could not be written.
class OutputError : public Error {
 public:
  using Error::Error;
};

}  // namespace pairchain
