// Copyright 2026 The qfi-conveyor Authors
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

#ifndef QFIC_COMMON_HPP_
#define QFIC_COMMON_HPP_

#include <complex>
#include <stdexcept>
#include <string>

namespace qfic {

using cdouble = std::complex<double>;

// Shared numerical tolerances. Structural checks (hermiticity, norms,
// traces) use kStructuralTol; spectra may dip slightly below zero from
// roundoff, bounded by kPsdTol; eigenvalue pairs below kSupportCutoff are
// treated as outside the support.
inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kSupportCutoff = 1e-12;

// Default step for central-difference derivatives over the phase parameter.
inline constexpr double kCentralDiffStep = 1e-5;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad arguments, malformed configs, violated preconditions. Exit code 1.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// Requested register size exceeds the memory guard. Exit code 2.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// A numerical procedure left its certified regime (non-Hermitian
// derivative, diverging score, inconclusive fit).
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(what) {}
};

}  // namespace qfic

#endif  // QFIC_COMMON_HPP_
