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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qfic/analytic.hpp"
#include "qfic/bruteforce.hpp"
#include "qfic/calibration.hpp"
#include "qfic/channel.hpp"
#include "qfic/entanglement.hpp"
#include "qfic/experiments.hpp"
#include "qfic/metrology.hpp"
#include "qfic/sources.hpp"

using namespace qfic;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

struct Criterion {
  int id;
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

void report(const Criterion& c, const std::string& label) {
  std::printf("[%s] criterion %d: %s%s%s\n", c.ok ? "PASS" : "FAIL", c.id,
              label.c_str(), c.detail.empty() ? "" : " -- ",
              c.detail.c_str());
  if (!c.ok) ++g_failures;
}

double seconds_since(
    const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

ChainLayout star_layout(int m, int mu) {
  const int n = m + mu + 1;
  std::vector<int> src(m);
  for (int i = 0; i < m; ++i) src[i] = i;
  return ChainLayout::make(n, src, n - 1);
}

// ---------------------------------------------------------------------
// 1. Lossless entangled transfer: antenna QFI = M^2 at phi1 = pi/2,
//    phi2 = pi, with statevector cross-checks where the chain fits.
void criterion_1() {
  Criterion c;
  c.id = 1;
  const auto start = std::chrono::steady_clock::now();
  for (int m : {2, 3, 6, 10}) {
    for (int mu : {0, 2, 5}) {
      const double target = static_cast<double>(m) * m;
      const double analytic = qfi_ghz({m, mu, kPi / 2, kPi, 0.0});
      c.require(std::abs(analytic - target) < 1e-8,
                "analytic m=" + std::to_string(m) +
                    " mu=" + std::to_string(mu) + " got " +
                    std::to_string(analytic));
      const int n = m + mu + 1;
      if (n <= 12) {
        SourceSpec spec;
        spec.kind = SourceKind::Ghz;
        spec.m = m;
        const CouplingMatrix j =
            expand_star(star_layout(m, mu), {.j1 = 0.5, .j2 = 1.0});
        const BruteForceResult bf = brute_force_transfer(
            spec, star_layout(m, mu), j, kPi / 2, 0.0);
        c.require(std::abs(bf.qfi_antenna - target) < 1e-8,
                  "statevector m=" + std::to_string(m) +
                      " mu=" + std::to_string(mu) + " got " +
                      std::to_string(bf.qfi_antenna));
      }
    }
  }
  const double elapsed = seconds_since(start);
  c.require(elapsed < 10.0, "runtime " + std::to_string(elapsed) + " s");
  report(c, "lossless entangled transfer reaches M^2 (runtime " +
                std::to_string(elapsed).substr(0, 5) + " s)");
}

// ---------------------------------------------------------------------
// 2. Separable optimum: M (1 - 1/M)^(M-1), approaching M/e.
void criterion_2() {
  Criterion c;
  c.id = 2;
  for (int m = 2; m <= 12; ++m) {
    const SeparableOptimum opt = optimal_separable(m);
    const double reference = m * std::pow(1.0 - 1.0 / m, m - 1);
    const double attained = qfi_separable({m, 0, opt.phi1, 0.0, 0.0});
    c.require(std::abs(attained - reference) < 1e-9,
              "m=" + std::to_string(m) + " got " + std::to_string(attained));
  }
  const SeparableOptimum big = optimal_separable(200);
  const double ratio = big.qfi / (200.0 / std::numbers::e);
  c.require(std::abs(ratio - 1.0) < 0.003,
            "m=200 ratio to M/e = " + std::to_string(ratio));
  report(c, "separable optimum matches M(1-1/M)^(M-1) and the 1/e law");
}

// ---------------------------------------------------------------------
// 3. Single-qubit lossless case, grid-search validated; the literal
//    t = m pi / J2 reading is evaluated and recorded.
void criterion_3() {
  Criterion c;
  c.id = 3;
  const SingleQubitOptimum opt = optimal_single();
  for (int mu : {0, 1, 4}) {
    const TransferSetting s =
        phis_from_couplings(1, mu, opt.j_ratio, 1.0, opt.t_units, 0.0);
    const double qfi = qfi_separable(s);
    c.require(std::abs(qfi - 1.0) < 1e-9,
              "mu=" + std::to_string(mu) + " got " + std::to_string(qfi));
  }
  // coarse grid oracle over (t, j1/j2)
  double best = 0.0;
  for (int it = 0; it <= 600; ++it) {
    const double t = 2 * kPi * it / 600.0;
    for (int ij = 0; ij <= 60; ++ij) {
      best = std::max(best, qfi_separable(phis_from_couplings(
                                1, 1, ij / 60.0, 1.0, t, 0.0)));
    }
  }
  c.require(best <= 1.0 + 1e-9, "grid exceeded 1");
  const double returned = qfi_separable(
      phis_from_couplings(1, 1, opt.j_ratio, 1.0, opt.t_units, 0.0));
  c.require(returned >= best - 1e-9, "returned setting below the grid best");

  const double literal = qfi_separable(
      phis_from_couplings(1, 1, 0.5, 1.0, kPi, 0.0));
  report(c, "single-qubit transfer is lossless at t J2 = pi/2, J1/J2 = 1/2 "
            "(recorded: the literal t = pi/J2, J1 = J2/2 setting yields "
            "QFI = " + std::to_string(literal) + ", not 1)");
}

// ---------------------------------------------------------------------
// 4. The characterized single-Pauli readout saturates the antenna QFI at
//    theta = 0 for every criterion-1/2 setting. The y readout does so
//    whenever adot is imaginary (all separable cases, odd entangled
//    sources); for even entangled sources the saturating axis is x, and
//    the literal y value is recorded.
void criterion_4() {
  Criterion c;
  c.id = 4;
  std::string recorded;
  auto check_setting = [&](const TransferSetting& s, bool ghz) {
    const AntennaOffDiag off = ghz ? offdiag_ghz(s) : offdiag_separable(s);
    auto a_fn = [&s, ghz](double th) {
      TransferSetting shifted = s;
      shifted.theta = th;
      return ghz ? offdiag_ghz(shifted).a : offdiag_separable(shifted).a;
    };
    auto a_dot = [&s, ghz](double th) {
      TransferSetting shifted = s;
      shifted.theta = th;
      return ghz ? offdiag_ghz(shifted).a_dot
                 : offdiag_separable(shifted).a_dot;
    };
    const std::function<cdouble(double)> a_dot_fn = a_dot;
    const double qfi = qfi_qubit(off);
    const double chi = optimal_readout_axis(off);
    const double cfi = cfi_pauli_readout(a_fn, chi, 0.0, &a_dot_fn);
    c.require(std::abs(cfi - qfi) < 1e-7,
              "m=" + std::to_string(s.m) + " mu=" + std::to_string(s.mu) +
                  " cfi=" + std::to_string(cfi) + " qfi=" +
                  std::to_string(qfi));
    if (std::abs(chi) > 1e-12 && s.mu == 0) {
      const double cfi_y = cfi_pauli_readout(a_fn, 0.0, 0.0, &a_dot_fn);
      recorded += " [m=" + std::to_string(s.m) +
                  ": axis = x, literal y readout gives " +
                  std::to_string(cfi_y) + "]";
    }
  };
  for (int m : {2, 3, 6, 10}) {
    for (int mu : {0, 2, 5}) {
      check_setting({m, mu, kPi / 2, kPi, 0.0}, true);
    }
  }
  for (int m = 2; m <= 12; ++m) {
    check_setting({m, 0, optimal_separable(m).phi1, 0.0, 0.0}, false);
  }
  report(c, "the identified single-Pauli readout attains the QFI at "
            "theta = 0" + recorded);
}

// ---------------------------------------------------------------------
// 5. Negativity: closed form against the eigensolver, Bell ceiling at the
//    lossless instants.
void criterion_5() {
  Criterion c;
  c.id = 5;
  SourceSpec spec;
  spec.kind = SourceKind::Separable;
  spec.m = 1;
  for (int n = 3; n <= 8; ++n) {
    const ChainLayout layout = pinned_protocol_layout(n);
    const CouplingMatrix j = pinned_protocol_couplings(n);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double t = kPi * i / 199.0;
      const double eig = negativity(
          reduce_pair(transfer_state(spec, layout, j, t, 0.0), layout));
      const double closed =
          negativity_closed_form(t, n, pinned_protocol_qfi(t, n));
      worst = std::max(worst, std::abs(eig - closed));
    }
    c.require(worst < 1e-9,
              "n=" + std::to_string(n) + " gap " + std::to_string(worst));

    const double t_star = kPi / 2;
    c.require(std::abs(pinned_protocol_qfi(t_star, n) - 1.0) < 1e-12,
              "n=" + std::to_string(n) + " off-peak time");
    const double bell = negativity(reduce_pair(
        transfer_state(spec, layout, j, t_star, 0.0), layout));
    c.require(std::abs(bell - 0.5) < 1e-9,
              "n=" + std::to_string(n) + " peak negativity " +
                  std::to_string(bell));
  }
  report(c, "closed-form negativity tracks the eigensolver; Bell pair at "
            "the lossless instants");
}

// ---------------------------------------------------------------------
// 6. Master oracle property over randomized settings.
void criterion_6() {
  Criterion c;
  c.id = 6;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(u01(rng) * 9.0);      // 2..10
    const int m = 1 + static_cast<int>(u01(rng) * (n - 1));  // 1..n-1
    const int mu = n - m - 1;
    const ChainLayout layout = star_layout(m, mu);
    StarCouplings star;
    star.j1 = -2.0 + 4.0 * u01(rng);
    star.j2 = -2.0 + 4.0 * u01(rng);
    star.j_bg = -1.0 + 2.0 * u01(rng);
    const CouplingMatrix j = expand_star(layout, star);
    const double t = 2.0 * kPi * u01(rng);
    const double theta = -0.5 + u01(rng);
    const TransferSetting setting =
        phis_from_couplings(m, mu, star.j1, star.j2, t, theta);

    SourceSpec spec;
    spec.m = m;
    AntennaOffDiag an;
    switch (trial % 3) {
      case 0:
        spec.kind = SourceKind::Separable;
        an = offdiag_separable(setting);
        break;
      case 1:
        spec.kind = SourceKind::Ghz;
        an = offdiag_ghz(setting);
        break;
      default:
        spec.kind = SourceKind::Oat;
        spec.oat_time = u01(rng) * kPi / 2;
        an = offdiag_collective(collective_probs(spec), setting.phi1, mu,
                                setting.phi2, theta);
        break;
    }
    const BruteForceResult bf = brute_force_transfer(spec, layout, j, t, theta);
    worst = std::max({worst, std::abs(an.a - bf.a),
                      std::abs(an.a_dot - bf.a_dot),
                      std::abs(qfi_qubit(an) - bf.qfi_antenna)});
  }
  const double elapsed = seconds_since(start);
  c.require(worst < 1e-9, "worst gap " + std::to_string(worst));
  c.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + " s");
  char gap_text[32];
  std::snprintf(gap_text, sizeof gap_text, "%.2e", worst);
  report(c, "500 randomized settings match the statevector oracle (worst "
            "gap " + std::string(gap_text) + ", runtime " +
                std::to_string(elapsed).substr(0, 5) + " s)");
}

// ---------------------------------------------------------------------
// 7. Twisting-curve shape: endpoints of the ratio and source curves.
void criterion_7() {
  Criterion c;
  c.id = 7;
  {
    const OatPointResult start_pt = oat_transfer_point(10, 0, 0.0, 0.0, true);
    const OatPointResult end_pt =
        oat_transfer_point(10, 0, kPi / 2, 0.0, true);
    c.require(std::abs(end_pt.qfi_antenna / end_pt.qfi_source - 1.0) < 1e-6,
              "m=10 endpoint ratio");
    c.require(std::abs(start_pt.qfi_source - 10.0) < 1e-6 * 100.0,
              "m=10 untwisted source");
    c.require(std::abs(end_pt.qfi_source - 100.0) < 1e-6 * 100.0,
              "m=10 twisted source");
    const double ratio0 = start_pt.qfi_antenna / start_pt.qfi_source;
    c.require(std::abs(ratio0 - std::pow(0.9, 9)) < 1e-9,
              "m=10 untwisted ratio " + std::to_string(ratio0));
  }
  std::string timing;
  for (int m : {50, 100}) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentConfig cfg("oat-curve");
    cfg.set("m", std::to_string(m));
    cfg.set("oat_steps", "50");
    cfg.set("optimize_per_point", "true");
    const CsvTable curve = run_oat_curve(cfg);
    const double elapsed = seconds_since(start);
    c.require(elapsed < 30.0, "m=" + std::to_string(m) + " runtime " +
                                  std::to_string(elapsed) + " s");
    const double end_ratio =
        std::strtod(curve.rows().back()[3].c_str(), nullptr);
    c.require(std::abs(end_ratio - 1.0) < 1e-6,
              "m=" + std::to_string(m) + " endpoint ratio");
    timing += " m=" + std::to_string(m) + ": " +
              std::to_string(elapsed).substr(0, 5) + " s";
  }
  report(c, "twisting curve endpoints (per-point optimized;" + timing + ")");
}

// ---------------------------------------------------------------------
// 8. Infidelity fit: flat for the information-preserving conveyor,
//    |dF_Q|/4 for a constructed information sink.
void criterion_8() {
  Criterion c;
  c.id = 8;
  const std::vector<double> grid = {0.0, 0.01, -0.01, 0.02, -0.02,
                                    0.05, -0.05};
  ThetaFamily in;
  in.eval = [](double th) {
    const Eigen::Vector2cd v =
        rotation(Axis::Y, th) * axis_eigenstate({Axis::X, +1});
    return Eigen::MatrixXcd(v * v.adjoint());
  };
  {
    const ChainLayout layout = ChainLayout::make(4, {0}, 3);
    const CouplingMatrix j = expand_star(layout, {.j1 = 0.5, .j2 = 1.0});
    const QubitChannel ch = conveyor(layout, j, kPi / 2);
    ThetaFamily out;
    out.eval = [&ch, &in](double th) {
      return Eigen::MatrixXcd(ch.apply(in.eval(th)));
    };
    const FidelityGapFit fit = qfi_fidelity_gap(in, out, grid);
    const double qfi_gap =
        std::abs(qfi_eigendecomp(in, 0.0) - qfi_eigendecomp(out, 0.0));
    c.require(std::abs(fit.quadratic_coeff) < 1e-4,
              "conveyor coefficient " + std::to_string(fit.quadratic_coeff));
    c.require(qfi_gap < 1e-9, "conveyor leaks information");
  }
  {
    // measure-and-reprepare sink: output frozen at the working state
    const Eigen::MatrixXcd target = in.eval(0.0);
    ThetaFamily out;
    out.eval = [&target](double) { return target; };
    const FidelityGapFit fit = qfi_fidelity_gap(in, out, grid);
    const double reference =
        0.25 * std::abs(qfi_eigendecomp(in, 0.0) - 0.0);
    c.require(std::abs(fit.quadratic_coeff - reference) < 0.1 * reference,
              "sink coefficient " + std::to_string(fit.quadratic_coeff) +
                  " vs " + std::to_string(reference));
  }
  report(c, "infidelity is flat in theta^2 when the information survives "
            "and matches |dF_Q|/4 when it is discarded");
}

// ---------------------------------------------------------------------
// 9. Calibration scaling laws.
void criterion_9() {
  Criterion c;
  c.id = 9;
  for (int m : {10, 100, 1000}) {
    for (double frac : {0.1, 0.3, 0.5}) {
      const double eps = std::sqrt(frac / m);
      const GhzMiscalRatio r = cfi_ghz_miscal(m, eps);
      c.require(std::abs(r.exact / r.gauss - 1.0) < 0.01,
                "m=" + std::to_string(m) +
                    " eps^2 m=" + std::to_string(frac));
    }
  }
  for (double eps : {0.01, 0.1, 0.5, 1.0}) {
    const double ratio = cfi_single_miscal(eps);
    const double from_probs = cfi_single_from_probabilities(eps, 5e-4);
    c.require(std::abs(from_probs - ratio) < 1e-6,
              "single eps=" + std::to_string(eps));
  }
  report(c, "readout miscalibration: cos^2M envelope within 1% and the "
            "single-qubit cos^2 law confirmed");
}

// ---------------------------------------------------------------------
// 10. Working-phase sweep consistency with the twisting curve.
void criterion_10() {
  Criterion c;
  c.id = 10;
  {
    ExperimentConfig curve_cfg("oat-curve");
    curve_cfg.set("m", "10");
    curve_cfg.set("oat_steps", "25");
    ExperimentConfig sweep_cfg("sweep");
    sweep_cfg.set("m", "10");
    sweep_cfg.set("oat_steps", "25");
    const CsvTable curve = run_oat_curve(curve_cfg);
    const CsvTable sweep = run_theta_sweep(sweep_cfg);
    // Both files must print the same underlying doubles byte for byte:
    // recompute each point once and match both serializations against it.
    const double heisenberg = static_cast<double>(10) * 10;
    for (int i = 0; i < 25; ++i) {
      const double ut = kPi / 2 * i / 24.0;
      const OatPointResult pt = oat_transfer_point(10, 0, ut, 0.0, false);
      c.require(sweep.rows()[i][0] == "0", "row ordering");
      c.require(sweep.rows()[i][2] == format_csv_double(pt.qfi_source) &&
                    curve.rows()[i][1] ==
                        format_csv_double(pt.qfi_source / heisenberg),
                "source column diverges at row " + std::to_string(i));
      c.require(sweep.rows()[i][3] == format_csv_double(pt.qfi_antenna) &&
                    curve.rows()[i][2] ==
                        format_csv_double(pt.qfi_antenna / heisenberg),
                "antenna column diverges at row " + std::to_string(i));
    }
  }
  for (int m : {10, 50, 100}) {
    ExperimentConfig cfg("sweep");
    cfg.set("m", std::to_string(m));
    cfg.set("oat_steps", "12");
    bool threw = false;
    size_t rows = 0;
    try {
      rows = run_theta_sweep(cfg).rows().size();
    } catch (...) {
      threw = true;
    }
    c.require(!threw && rows == 36,
              "m=" + std::to_string(m) + " sweep failed");
  }
  report(c, "theta = 0 sweep column is byte-identical to the twisting "
            "curve; nonzero working phases run clean");
}

}  // namespace

int main() {
  std::printf("acceptance suite: information transfer through an Ising "
              "chain\n");
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("all 10 criteria passed\n");
  } else {
    std::printf("%d criterion(s) FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
