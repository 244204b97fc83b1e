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

#include "qfic/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qfic/analytic.hpp"
#include "qfic/bruteforce.hpp"
#include "qfic/calibration.hpp"
#include "qfic/channel.hpp"
#include "qfic/entanglement.hpp"
#include "qfic/metrology.hpp"
#include "qfic/sources.hpp"

namespace qfic {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 1) throw ValidationError("grid needs at least one point");
  if (steps > 1 && hi < lo) {
    throw ValidationError("grid bounds are reversed; rows are emitted in "
                          "ascending order");
  }
  std::vector<double> xs(steps);
  if (steps == 1) {
    xs[0] = lo;
    return xs;
  }
  for (int i = 0; i < steps; ++i) {
    xs[i] = lo + (hi - lo) * i / (steps - 1);
  }
  return xs;
}

void echo_config(CsvTable& table, const ExperimentConfig& cfg) {
  table.add_comment("experiment = " + cfg.experiment());
  std::istringstream in(cfg.serialize());
  std::string line;
  while (std::getline(in, line)) table.add_comment(line);
}

SourceKind parse_source_kind(const std::string& s) {
  if (s == "separable") return SourceKind::Separable;
  if (s == "ghz") return SourceKind::Ghz;
  if (s == "oat") return SourceKind::Oat;
  throw ValidationError("unknown source kind '" + s +
                        "' (expected separable|ghz|oat)");
}

// Golden-section refinement of a coarse scan maximum. Deterministic and
// derivative-free; the bracketing grid keeps it on the intended branch.
template <typename F>
double maximize_on(F&& f, double lo, double hi, int coarse, int iters) {
  double best_x = lo;
  double best_f = f(lo);
  for (int i = 1; i < coarse; ++i) {
    const double x = lo + (hi - lo) * i / (coarse - 1);
    const double v = f(x);
    if (v > best_f) {
      best_f = v;
      best_x = x;
    }
  }
  const double step = (hi - lo) / (coarse - 1);
  double a = std::max(lo, best_x - step);
  double b = std::min(hi, best_x + step);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return (fc > fd) ? c : d;
}

struct FixedProbs {
  Eigen::VectorXd p;
  Eigen::VectorXd dp;
};

// Populations and their derivative of the rotated collective source,
// evaluated once so phi1 optimization stays O(M) per step.
FixedProbs rotated_probs(const SymmetricState& base, double theta) {
  const SymmetricState rotated =
      (theta == 0.0) ? base : rotate_y(base, theta);
  FixedProbs fp;
  fp.p = rotated.coeffs().cwiseAbs2();
  const Eigen::VectorXcd dc =
      cdouble(0.0, -1.0) * (jy_matrix(base.m()) * rotated.coeffs());
  fp.dp = 2.0 * rotated.coeffs().conjugate().cwiseProduct(dc).real();
  return fp;
}

AntennaOffDiag collective_offdiag_fixed(const FixedProbs& fp, double phi1,
                                        int mu, double phi2, double theta) {
  CollectiveProbs cp;
  cp.probs = [&fp](double) { return fp.p; };
  cp.dprobs = [&fp](double) { return fp.dp; };
  return offdiag_collective(cp, phi1, mu, phi2, theta);
}

}  // namespace

OatPointResult oat_transfer_point(int m, int mu, double oat_time, double theta,
                                  bool optimize_phi1) {
  const SymmetricState base = oat_state(m, oat_time, 0.0);
  const FixedProbs fp = rotated_probs(base, theta);

  OatPointResult out;
  {
    const SymmetricState at_theta =
        (theta == 0.0) ? base : rotate_y(base, theta);
    out.qfi_source = source_qfi(at_theta);
  }
  const double phi2 = kPi;
  if (!optimize_phi1) {
    out.phi1_used = kPi / 2;
    out.qfi_antenna =
        qfi_qubit(collective_offdiag_fixed(fp, out.phi1_used, mu, phi2, theta));
  } else {
    auto objective = [&](double phi1) {
      return qfi_qubit(collective_offdiag_fixed(fp, phi1, mu, phi2, theta));
    };
    out.phi1_used = maximize_on(objective, 0.0, kPi, 257, 90);
    out.qfi_antenna = objective(out.phi1_used);
  }
  return out;
}

CsvTable run_transfer(const ExperimentConfig& cfg) {
  const SourceKind kind = parse_source_kind(cfg.get_string("source"));
  const int m = cfg.get_int("m");
  const int mu = cfg.get_int("mu", 0);
  const double j1 = cfg.get_double("j1");
  const double j2 = cfg.get_double("j2");
  const double theta = cfg.get_double("theta", 0.0);
  const double oat_time =
      (kind == SourceKind::Oat) ? cfg.get_double("oat_time") : 0.0;
  const double t_min = cfg.get_double("t_min");
  const double t_max = cfg.get_double("t_max", t_min);
  const int t_steps = cfg.get_int("t_steps", 1);
  if (m < 1) throw ValidationError("m must be >= 1");
  if (mu < 0) throw ValidationError("mu must be >= 0");

  SourceSpec spec;
  spec.kind = kind;
  spec.m = m;
  spec.oat_time = oat_time;
  spec.theta = theta;
  const auto warning = spec.validate();

  const bool with_negativity = (m == 1);
  const int n = m + mu + 1;
  if (with_negativity && n > max_qubits()) {
    throw CapacityError("transfer with negativity column needs n = " +
                        std::to_string(n) + " <= " +
                        std::to_string(max_qubits()) + " (m + mu too large)");
  }

  CsvTable table;
  echo_config(table, cfg);
  if (warning) table.add_comment("warning: " + *warning);
  std::vector<std::string> header = {"t",    "qfi_source", "qfi_antenna",
                                     "ratio", "a_re",       "a_im"};
  if (with_negativity) header.push_back("negativity");
  table.set_header(std::move(header));

  // Source preparation is fixed across the sweep.
  double qfi_src = 0.0;
  FixedProbs fp;
  switch (kind) {
    case SourceKind::Separable:
      qfi_src = m;
      break;
    case SourceKind::Ghz:
      qfi_src = static_cast<double>(m) * m;
      break;
    case SourceKind::Oat:
      qfi_src = source_qfi(oat_state(m, oat_time, theta));
      fp = rotated_probs(oat_state(m, oat_time, 0.0), theta);
      break;
  }

  ChainLayout layout = ChainLayout::make(2, {0}, 1);
  CouplingMatrix couplings = CouplingMatrix::zero(2);
  if (with_negativity) {
    std::vector<int> src(m);
    for (int i = 0; i < m; ++i) src[i] = i;
    layout = ChainLayout::make(n, src, n - 1);
    StarCouplings star;
    star.j1 = j1;
    star.j2 = j2;
    star.u = 0.0;
    star.j_bg = j2;  // the bipartite analysis assumes the uniform background
    couplings = expand_star(layout, star);
  }

  for (double t : linspace(t_min, t_max, t_steps)) {
    const TransferSetting setting =
        phis_from_couplings(m, mu, j1, j2, t, theta);
    AntennaOffDiag off;
    switch (kind) {
      case SourceKind::Separable:
        off = offdiag_separable(setting);
        break;
      case SourceKind::Ghz:
        off = offdiag_ghz(setting);
        break;
      case SourceKind::Oat:
        off = collective_offdiag_fixed(fp, setting.phi1, mu, setting.phi2,
                                       theta);
        break;
    }
    const double qfi_an = qfi_qubit(off);
    std::vector<std::string> row = {
        format_csv_double(t), format_csv_double(qfi_src),
        format_csv_double(qfi_an),
        (qfi_src == 0.0 && qfi_an == 0.0)
            ? ""
            : format_csv_double(qfi_an / qfi_src),
        format_csv_double(off.a.real()), format_csv_double(off.a.imag())};
    if (with_negativity) {
      const PureState state =
          transfer_state(spec, layout, couplings, t, theta);
      row.push_back(
          format_csv_double(negativity(reduce_pair(state, layout))));
    }
    table.add_row(std::move(row));
  }
  return table;
}

CsvTable run_oat_curve(const ExperimentConfig& cfg) {
  const int m = cfg.get_int("m");
  const int mu = cfg.get_int("mu", 0);
  const int steps = cfg.get_int("oat_steps", 51);
  const bool optimize = cfg.get_bool("optimize_per_point", false);
  if (m < 1) throw ValidationError("m must be >= 1");
  if (steps < 2) throw ValidationError("oat_steps must be >= 2");

  CsvTable table;
  echo_config(table, cfg);
  table.set_header({"ut", "qfi_source_norm", "qfi_antenna_norm", "ratio"});
  const double heisenberg = static_cast<double>(m) * m;
  for (double ut : linspace(0.0, kPi / 2, steps)) {
    const OatPointResult pt = oat_transfer_point(m, mu, ut, 0.0, optimize);
    table.add_row({format_csv_double(ut),
                   format_csv_double(pt.qfi_source / heisenberg),
                   format_csv_double(pt.qfi_antenna / heisenberg),
                   format_csv_double(pt.qfi_antenna / pt.qfi_source)});
  }
  return table;
}

CsvTable run_theta_sweep(const ExperimentConfig& cfg) {
  const int m = cfg.get_int("m");
  const int mu = cfg.get_int("mu", 0);
  const int steps = cfg.get_int("oat_steps", 51);
  const bool optimize = cfg.get_bool("optimize_per_point", false);
  if (m < 1) throw ValidationError("m must be >= 1");
  if (steps < 2) throw ValidationError("oat_steps must be >= 2");

  CsvTable table;
  echo_config(table, cfg);
  table.set_header({"theta", "ut", "qfi_source", "qfi_antenna"});
  const double thetas[] = {0.0, kPi / 2, kPi};
  for (double theta : thetas) {
    for (double ut : linspace(0.0, kPi / 2, steps)) {
      const OatPointResult pt = oat_transfer_point(m, mu, ut, theta, optimize);
      table.add_row({format_csv_double(theta), format_csv_double(ut),
                     format_csv_double(pt.qfi_source),
                     format_csv_double(pt.qfi_antenna)});
    }
  }
  return table;
}

CsvTable run_negativity(const ExperimentConfig& cfg) {
  const int n = cfg.get_int("n");
  const double t_min = cfg.get_double("t_min", 0.0);
  const double t_max = cfg.get_double("t_max", kPi);
  const int t_steps = cfg.get_int("t_steps", 200);
  if (n < 3) throw ValidationError("negativity experiment needs n >= 3");
  if (n > max_qubits()) {
    throw CapacityError("n = " + std::to_string(n) + " exceeds the cap of " +
                        std::to_string(max_qubits()));
  }
  const double j1 = cfg.get_double("j1", 0.5);
  const double j2 = cfg.get_double("j2", 1.0);
  if (j1 != 0.5 || j2 != 1.0) {
    throw ValidationError("the closed-form negativity is pinned to j1 = 0.5, "
                          "j2 = 1");
  }

  const ChainLayout layout = pinned_protocol_layout(n);
  const CouplingMatrix couplings = pinned_protocol_couplings(n);
  SourceSpec spec;
  spec.kind = SourceKind::Separable;
  spec.m = 1;

  CsvTable table;
  echo_config(table, cfg);
  table.set_header(
      {"t", "qfi_antenna", "negativity_eigen", "negativity_closed", "gap"});
  for (double t : linspace(t_min, t_max, t_steps)) {
    const double qfi_an = pinned_protocol_qfi(t, n);
    const PureState state = transfer_state(spec, layout, couplings, t, 0.0);
    const double eig = negativity(reduce_pair(state, layout));
    const double closed = negativity_closed_form(t, n, qfi_an);
    table.add_row({format_csv_double(t), format_csv_double(qfi_an),
                   format_csv_double(eig), format_csv_double(closed),
                   format_csv_double(std::abs(eig - closed))});
  }
  return table;
}

CsvTable run_calibration(const ExperimentConfig& cfg) {
  const int m = cfg.get_int("m");
  const double eps_max = cfg.get_double("epsilon", 0.1);
  const int steps = cfg.get_int("eps_steps", 21);
  const double theta = cfg.get_double("theta", 0.002);
  if (m < 1) throw ValidationError("m must be >= 1");
  if (std::abs(eps_max) >= kPi / 2) {
    throw ValidationError("epsilon must satisfy |epsilon| < pi/2");
  }

  CsvTable table;
  echo_config(table, cfg);
  table.add_comment(
      "readout-overhead comparison: full tomography of an M-qubit state "
      "needs O(M^2) measurement settings and N_shots ~ settings/delta^2; "
      "the single-qubit antenna needs 3 settings.");
  table.add_comment(
      "parity columns: exact <(sigma_y,eps)^xM> on the z-basis GHZ at the "
      "listed theta, against the linearization M theta cos^M(eps).");
  table.set_header({"epsilon", "single_ratio", "ghz_exact_ratio",
                    "ghz_gauss_ratio", "ratio_rel_gap", "parity_exact",
                    "parity_linear"});
  for (double eps : linspace(0.0, eps_max, steps)) {
    const double single = cfi_single_miscal(eps);
    const GhzMiscalRatio ghz = cfi_ghz_miscal(m, eps);
    const double rel_gap =
        (ghz.gauss == 0.0) ? 0.0 : std::abs(ghz.exact / ghz.gauss - 1.0);
    const double parity = parity_expectation(m, theta, eps);
    const double linear = m * theta * std::pow(std::cos(eps), m);
    table.add_row({format_csv_double(eps), format_csv_double(single),
                   format_csv_double(ghz.exact), format_csv_double(ghz.gauss),
                   format_csv_double(rel_gap), format_csv_double(parity),
                   format_csv_double(linear)});
  }
  return table;
}

CsvTable run_fidelity(const ExperimentConfig& cfg) {
  const int mu = cfg.get_int("mu", 2);
  const double j1 = cfg.get_double("j1", 0.5);
  const double j2 = cfg.get_double("j2", 1.0);
  const double t_min = cfg.get_double("t_min", 0.0);
  const double t_max = cfg.get_double("t_max", kPi);
  const int t_steps = cfg.get_int("t_steps", 21);
  if (mu < 0) throw ValidationError("mu must be >= 0");
  const int n = mu + 2;
  if (n > max_qubits()) {
    throw CapacityError("mu too large for the qubit cap");
  }

  std::vector<int> src = {0};
  const ChainLayout layout = ChainLayout::make(n, src, n - 1);
  StarCouplings star;
  star.j1 = j1;
  star.j2 = j2;
  const CouplingMatrix couplings = expand_star(layout, star);

  const Eigen::Vector2cd plus_x = axis_eigenstate({Axis::X, +1});
  ThetaFamily family_in;
  family_in.eval = [plus_x](double th) {
    const Eigen::Matrix2cd u = rotation(Axis::Y, th);
    const Eigen::Vector2cd v = u * plus_x;
    return Eigen::MatrixXcd(v * v.adjoint());
  };

  const std::vector<double> fit_grid = {0.0, 0.01, -0.01, 0.02,
                                        -0.02, 0.05, -0.05};

  CsvTable table;
  echo_config(table, cfg);
  table.set_header({"t", "fidelity_raw", "fidelity_framed",
                    "s4_quadratic_coeff", "s4_reference"});
  for (double t : linspace(t_min, t_max, t_steps)) {
    const QubitChannel ch = conveyor(layout, couplings, t);
    const ProcessFidelity pf = process_fidelity_to_relay(ch);

    ThetaFamily family_out;
    family_out.eval = [&ch, &family_in](double th) {
      return Eigen::MatrixXcd(ch.apply(family_in.eval(th)));
    };
    const FidelityGapFit fit =
        qfi_fidelity_gap(family_in, family_out, fit_grid);
    const double qfi_in = qfi_eigendecomp(family_in, 0.0);
    const double qfi_out = qfi_eigendecomp(family_out, 0.0);
    const double reference = 0.25 * std::abs(qfi_in - qfi_out);
    table.add_row({format_csv_double(t), format_csv_double(pf.raw),
                   format_csv_double(pf.framed),
                   format_csv_double(fit.quadratic_coeff),
                   format_csv_double(reference)});
  }
  return table;
}

OracleReport run_oracle_check(const ExperimentConfig& cfg) {
  const int n = cfg.get_int("n", 5);
  const int t_steps = cfg.get_int("t_steps", 50);
  const bool corrupt = cfg.get_bool("corrupt", false);
  if (n < 2) throw ValidationError("oracle check needs n >= 2");
  if (n > 12) {
    throw CapacityError("oracle check is limited to n <= 12, got " +
                        std::to_string(n));
  }

  const double tol = 1e-8;
  double worst_a = 0.0, worst_adot = 0.0, worst_qfi = 0.0, worst_neg = 0.0;

  std::vector<int> m_values = {1, n / 2, n - 1};
  std::sort(m_values.begin(), m_values.end());
  m_values.erase(std::unique(m_values.begin(), m_values.end()),
                 m_values.end());

  const double thetas[] = {0.0, 0.3};
  for (int m : m_values) {
    if (m < 1 || m > n - 1) continue;
    const int mu = n - m - 1;
    std::vector<int> src(m);
    for (int i = 0; i < m; ++i) src[i] = i;
    const ChainLayout layout = ChainLayout::make(n, src, n - 1);
    StarCouplings star;
    star.j1 = 0.37;
    star.j2 = 0.93;
    star.u = 0.0;
    star.j_bg = 0.21;  // exercises the background-coupling cancellation
    CouplingMatrix couplings = expand_star(layout, star);
    CouplingMatrix bf_couplings = couplings;
    if (corrupt && n >= 3) {
      // Regression fixture: a deliberately wrong coupling must trip the
      // comparison and the nonzero exit status.
      bf_couplings.set(0, layout.antenna(),
                       star.j1 + 1e-3);
    }

    for (int kindi = 0; kindi < 3; ++kindi) {
      SourceSpec spec;
      spec.m = m;
      if (kindi == 0) spec.kind = SourceKind::Separable;
      if (kindi == 1) spec.kind = SourceKind::Ghz;
      if (kindi == 2) {
        spec.kind = SourceKind::Oat;
        spec.oat_time = 0.7;
      }
      const CollectiveProbs cp = collective_probs(spec);
      for (double theta : thetas) {
        for (double t : linspace(0.0, 2.0 * kPi, t_steps)) {
          const TransferSetting setting =
              phis_from_couplings(m, mu, star.j1, star.j2, t, theta);
          AntennaOffDiag an;
          switch (spec.kind) {
            case SourceKind::Separable:
              an = offdiag_separable(setting);
              break;
            case SourceKind::Ghz:
              an = offdiag_ghz(setting);
              break;
            case SourceKind::Oat:
              an = offdiag_collective(cp, setting.phi1, mu, setting.phi2,
                                      theta);
              break;
          }
          const BruteForceResult bf =
              brute_force_transfer(spec, layout, bf_couplings, t, theta);
          worst_a = std::max(worst_a, std::abs(an.a - bf.a));
          worst_adot = std::max(worst_adot, std::abs(an.a_dot - bf.a_dot));
          worst_qfi =
              std::max(worst_qfi, std::abs(qfi_qubit(an) - bf.qfi_antenna));
        }
      }
    }
  }

  // Closed-form negativity against the eigensolver on the pinned protocol.
  {
    const int nn = std::min(n, 6);
    const ChainLayout layout = pinned_protocol_layout(nn);
    const CouplingMatrix couplings = pinned_protocol_couplings(nn);
    SourceSpec spec;
    spec.kind = SourceKind::Separable;
    spec.m = 1;
    for (double t : linspace(0.0, kPi, 50)) {
      const PureState state = transfer_state(spec, layout, couplings, t, 0.0);
      const double eig = negativity(reduce_pair(state, layout));
      const double closed =
          negativity_closed_form(t, nn, pinned_protocol_qfi(t, nn));
      worst_neg = std::max(worst_neg, std::abs(eig - closed));
    }
  }

  // Entangled source embedded in a longer chain.
  double ghz_qfi_gap = 0.0;
  {
    const int nn = std::min(std::max(n + 1, 6), 12);
    const int m = 3;
    std::vector<int> src = {0, 1, 2};
    const ChainLayout layout = ChainLayout::make(nn, src, nn - 1);
    StarCouplings star;
    star.j1 = 0.5;
    star.j2 = 1.0;
    const CouplingMatrix couplings = expand_star(layout, star);
    SourceSpec spec;
    spec.kind = SourceKind::Ghz;
    spec.m = m;
    const double t = kPi / 2;  // phi1 = pi/2, phi2 = pi
    const BruteForceResult bf =
        brute_force_transfer(spec, layout, couplings, t, 0.0);
    const TransferSetting setting =
        phis_from_couplings(m, nn - m - 1, star.j1, star.j2, t, 0.0);
    ghz_qfi_gap = std::abs(qfi_ghz(setting) - bf.qfi_antenna);
  }

  OracleReport report;
  report.worst_gap = std::max({worst_a, worst_adot, worst_qfi, worst_neg,
                               ghz_qfi_gap});
  report.passed = report.worst_gap <= tol;
  std::ostringstream out;
  out << "oracle cross-check (n = " << n << ", " << t_steps
      << " time points, theta in {0, 0.3})\n"
      << "  max |a_analytic - a_statevector|       = "
      << format_csv_double(worst_a) << '\n'
      << "  max |adot_analytic - adot_statevector| = "
      << format_csv_double(worst_adot) << '\n'
      << "  max |qfi_analytic - qfi_statevector|   = "
      << format_csv_double(worst_qfi) << '\n'
      << "  max |negativity closed - eigensolver|  = "
      << format_csv_double(worst_neg) << '\n'
      << "  ghz (m=3) transferred-qfi gap          = "
      << format_csv_double(ghz_qfi_gap) << '\n'
      << "  gate: " << format_csv_double(tol) << " -> "
      << (report.passed ? "PASS" : "FAIL") << '\n';
  report.text = out.str();
  return report;
}

}  // namespace qfic
