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

#ifndef QFIC_BRUTEFORCE_HPP_
#define QFIC_BRUTEFORCE_HPP_

#include "qfic/analytic.hpp"
#include "qfic/ising.hpp"
#include "qfic/metrology.hpp"
#include "qfic/sources.hpp"

namespace qfic {

// Statevector reference pipeline: prepare, imprint, evolve, reduce. The
// derivative path inserts the imprint generator exactly, so the reported
// a_dot carries no finite-difference error. Everything here goes through
// statevec/ising primitives only; the closed forms in analytic.hpp are
// never consulted, which is what makes the cross-checks meaningful.
struct BruteForceResult {
  cdouble a;
  cdouble a_dot;
  double p;
  double qfi_antenna;  // exact eigendecomposition of the 2x2 marginal
  double qfi_source;   // QFI of the full evolved pure state
};

// Full-chain evolved state at phase theta.
PureState transfer_state(const SourceSpec& source, const ChainLayout& layout,
                         const CouplingMatrix& j, double t, double theta);

BruteForceResult brute_force_transfer(const SourceSpec& source,
                                      const ChainLayout& layout,
                                      const CouplingMatrix& j, double t,
                                      double theta);

// Same reduction with a central-difference derivative; used to exercise
// the finite-difference mode against the exact insertion.
BruteForceResult brute_force_transfer_fd(const SourceSpec& source,
                                         const ChainLayout& layout,
                                         const CouplingMatrix& j, double t,
                                         double theta,
                                         double fd_step = kCentralDiffStep);

// z-basis populations of the rotated collective source, packaged for the
// analytic collective route.
CollectiveProbs collective_probs(const SourceSpec& source);

}  // namespace qfic

#endif  // QFIC_BRUTEFORCE_HPP_
