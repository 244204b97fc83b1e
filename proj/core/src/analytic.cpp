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

#include "qfic/analytic.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qfic {

namespace {

// Exact integer power by repeated squaring; keeps odd-exponent sign flips
// of cos^mu representable without drifting through exp/log.
template <typename T>
T ipow(T base, int exp) {
  T result = T(1);
  T acc = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) result *= acc;
    acc *= acc;
    e >>= 1;
  }
  return result;
}

// s_M = -(-i)^M
cdouble ghz_phase_sign(int m) {
  switch (((m % 4) + 4) % 4) {
    case 0: return {-1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_setting(const TransferSetting& s) {
  if (s.m < 1) throw ValidationError("transfer setting needs m >= 1");
  if (s.mu < 0) throw ValidationError("transfer setting needs mu >= 0");
}

}  // namespace

TransferSetting phis_from_couplings(int m, int mu, double j1, double j2,
                                    double t, double theta) {
  TransferSetting s;
  s.m = m;
  s.mu = mu;
  s.phi1 = 2.0 * t * j1;
  s.phi2 = 2.0 * t * j2;
  s.theta = theta;
  check_setting(s);
  return s;
}

cdouble f_separable(const TransferSetting& s) {
  check_setting(s);
  const cdouble base(std::cos(s.phi1),
                     std::sin(s.theta) * std::sin(s.phi1));
  return ipow(base, s.m);
}

double g_medium(const TransferSetting& s) {
  check_setting(s);
  return ipow(std::cos(s.phi2), s.mu);
}

AntennaOffDiag offdiag_separable(const TransferSetting& s) {
  check_setting(s);
  const double g = g_medium(s);
  const cdouble base(std::cos(s.phi1),
                     std::sin(s.theta) * std::sin(s.phi1));
  const cdouble f = ipow(base, s.m);
  const cdouble dbase(0.0, std::cos(s.theta) * std::sin(s.phi1));
  const cdouble df =
      static_cast<double>(s.m) * ipow(base, s.m - 1) * dbase;
  AntennaOffDiag off;
  off.a = 0.5 * f * g;
  off.a_dot = 0.5 * df * g;
  off.p = 0.5;
  return off;
}

AntennaOffDiag offdiag_ghz(const TransferSetting& s) {
  check_setting(s);
  const double g = g_medium(s);
  const double cm = ipow(std::cos(s.phi1), s.m);
  const double sm = ipow(std::sin(s.phi1), s.m);
  const cdouble sign = ghz_phase_sign(s.m);
  AntennaOffDiag off;
  off.a = 0.5 * (cm + sign * std::sin(s.m * s.theta) * sm) * g;
  off.a_dot = 0.5 * sign * static_cast<double>(s.m) *
              std::cos(s.m * s.theta) * sm * g;
  off.p = 0.5;
  return off;
}

cdouble offdiag_mixture(const std::vector<MixtureTerm>& terms) {
  if (terms.empty()) throw ValidationError("mixture needs at least one term");
  double total = 0.0;
  cdouble a(0.0, 0.0);
  for (const auto& t : terms) {
    if (t.weight < -kStructuralTol) {
      throw ValidationError("mixture weight is negative");
    }
    total += t.weight;
    a += t.weight * t.f * t.g;
  }
  if (std::abs(total - 1.0) > kStructuralTol) {
    throw ValidationError("mixture weights sum to " + std::to_string(total));
  }
  return a;
}

AntennaOffDiag offdiag_collective(const CollectiveProbs& probs, double phi1,
                                  int mu, double phi2, double theta) {
  if (!probs.probs) throw ValidationError("collective probs function is empty");
  if (mu < 0) throw ValidationError("mu must be >= 0");
  const Eigen::VectorXd p = probs.probs(theta);
  const int m = static_cast<int>(p.size()) - 1;
  if (m < 1) throw ValidationError("probability vector too short");
  if (std::abs(p.sum() - 1.0) > kStructuralTol) {
    throw ValidationError("collective probabilities are not normalized");
  }
  Eigen::VectorXd dp;
  if (probs.dprobs) {
    dp = probs.dprobs(theta);
  } else {
    const double h = probs.fd_step;
    dp = (probs.probs(theta + h) - probs.probs(theta - h)) / (2.0 * h);
  }
  if (dp.size() != p.size()) {
    throw ValidationError("probability derivative length mismatch");
  }
  const double g = ipow(std::cos(phi2), mu);
  cdouble a(0.0, 0.0), adot(0.0, 0.0);
  for (int n = 0; n <= m; ++n) {
    const cdouble phase = std::polar(1.0, -phi1 * (2.0 * n - m));
    a += p[n] * phase;
    adot += dp[n] * phase;
  }
  AntennaOffDiag off;
  off.a = 0.5 * g * a;
  off.a_dot = 0.5 * g * adot;
  off.p = 0.5;
  return off;
}

SeparableOptimum optimal_separable(int m) {
  if (m < 2) {
    throw ValidationError("optimal_separable needs m >= 2; the single-qubit "
                          "case is handled by optimal_single");
  }
  SeparableOptimum opt;
  opt.phi1 = std::atan(1.0 / std::sqrt(static_cast<double>(m - 1)));
  opt.qfi = m * ipow(1.0 - 1.0 / m, m - 1);
  return opt;
}

SingleQubitOptimum optimal_single() {
  // phi1 = pi/2, phi2 = pi: the medium factor hits |cos(phi2)| = 1 and the
  // source-antenna quarter period aligns. Validated against a grid search
  // over (t, J1/J2) in the tests.
  return SingleQubitOptimum{0.5, std::numbers::pi / 2};
}

FinetuneEnvelope finetune_envelope(int mu, double j2, double t, int m) {
  if (mu < 1) throw ValidationError("finetune_envelope needs mu >= 1");
  if (m < 1) throw ValidationError("resonance index m must be >= 1");
  const double x = 2.0 * j2 * t;
  const double detuning = x - m * std::numbers::pi;
  FinetuneEnvelope env;
  env.exact = ipow(std::cos(x), 2 * mu);
  env.gauss = std::exp(-mu * detuning * detuning);
  return env;
}

double qfi_separable(const TransferSetting& s) {
  return qfi_qubit(offdiag_separable(s));
}

double qfi_ghz(const TransferSetting& s) {
  return qfi_qubit(offdiag_ghz(s));
}

}  // namespace qfic
