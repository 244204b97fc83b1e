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

#ifndef QFIC_EXPERIMENTS_HPP_
#define QFIC_EXPERIMENTS_HPP_

#include <string>

#include "qfic/config.hpp"
#include "qfic/csv.hpp"

namespace qfic {

// One point of the twisting sweep: source QFI and transferred QFI at the
// chosen working phase. Fixed mode pins (phi1, phi2) = (pi/2, pi); the
// optimized mode grid-searches phi1 in [0, pi] and refines by golden
// section, with phi2 held at pi.
struct OatPointResult {
  double qfi_source;
  double qfi_antenna;
  double phi1_used;
};
OatPointResult oat_transfer_point(int m, int mu, double oat_time, double theta,
                                  bool optimize_phi1);

// Time sweep of a single source through the chain; emits negativity of the
// source-antenna pair as an extra column when m = 1.
CsvTable run_transfer(const ExperimentConfig& cfg);

// Twisting-strength sweep, both QFIs normalized to the Heisenberg limit.
CsvTable run_oat_curve(const ExperimentConfig& cfg);

// The same sweep at working phases {0, pi/2, pi}, unnormalized. The
// theta = 0 rows reuse oat_transfer_point verbatim.
CsvTable run_theta_sweep(const ExperimentConfig& cfg);

// Pinned single-source protocol: eigensolver negativity against the closed
// form, with the transferred QFI alongside.
CsvTable run_negativity(const ExperimentConfig& cfg);

// Readout-miscalibration ratios and the exact GHZ parity signal.
CsvTable run_calibration(const ExperimentConfig& cfg);

// Conveyor channel diagnostics: process fidelity to the ideal relay (raw
// and frame-corrected) plus the quadratic infidelity coefficient of the
// transferred family.
CsvTable run_fidelity(const ExperimentConfig& cfg);

// Cross-checks every analytic quantity against the statevector pipeline;
// `passed` reflects the 1e-8 gate.
struct OracleReport {
  std::string text;
  double worst_gap = 0.0;
  bool passed = false;
};
OracleReport run_oracle_check(const ExperimentConfig& cfg);

}  // namespace qfic

#endif  // QFIC_EXPERIMENTS_HPP_
