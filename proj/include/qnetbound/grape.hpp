// Copyright 2026 The qnetbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Piecewise-constant gate optimization. Slice j evolves under
// H_j = H_0 + sum_k u_{jk} H_k for dt = T / N; the objective is the
// phase-invariant infidelity 1 - |tr(U_g^dagger U(T))| / 2^n.

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qnetbound/network.hpp"
#include "qnetbound/simulator.hpp"

namespace qnb {

inline constexpr std::size_t kMaxGrapeQubits = 8;

struct PulseSet {
  double T = 0.0;
  std::size_t N = 0;
  /// N x C, one row per slice.
  Eigen::MatrixXd amplitudes;
  double achieved_infidelity = 1.0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  std::size_t restart_index = 0;

  double dt() const { return T / static_cast<double>(N); }
};

/// Drift and control operators implied by a network's control model:
/// full_local -> sigma_x, sigma_y on each qubit (x0, y0, x1, y1, ...);
/// star_reduced -> sigma_x, sigma_y on qubit 0, then sigma_z on 1..n-1.
struct ControlSystem {
  std::size_t n = 0;
  Matrix drift;
  std::vector<Matrix> controls;
  std::vector<std::string> labels;
};

ControlSystem control_system(const QubitNetwork& net, bool include_splittings = true);

Matrix propagate(const ControlSystem& sys, double T, const Eigen::MatrixXd& amplitudes);
Matrix propagate(const QubitNetwork& net, const PulseSet& pulses);

double infidelity(const ControlSystem& sys, double T, const Eigen::MatrixXd& amplitudes,
                  const Matrix& target);

/// Exact d(infidelity)/d(amplitude), N x C.
Eigen::MatrixXd gradient(const ControlSystem& sys, double T,
                         const Eigen::MatrixXd& amplitudes, const Matrix& target);
Eigen::MatrixXd gradient(const QubitNetwork& net, const PulseSet& pulses,
                         const Matrix& target);

struct GrapeOptions {
  std::size_t slices = 64;
  std::size_t restarts = 10;
  std::size_t max_iters = 500;
  double tol = 1e-3;
  std::uint64_t seed = 0;
  /// Initial amplitudes are uniform in [-init_scale, init_scale]; defaults
  /// to 5 * j_paper(net).
  std::optional<double> init_scale;
  /// Optional bound |u| < amplitude_cap through u = cap * tanh(x / cap).
  std::optional<double> amplitude_cap;
  std::size_t lbfgs_history = 10;
};

/// Best of `restarts` L-BFGS runs; restart r draws its initial pulses from a
/// generator seeded with (seed, r). Stops early once a restart reaches tol.
PulseSet optimize(const QubitNetwork& net, const Matrix& target, double T,
                  const GrapeOptions& options);

struct ScanRow {
  double T = 0.0;
  double best_infidelity = 1.0;
  std::size_t iterations = 0;
  std::size_t restart_index = 0;
};

std::vector<ScanRow> time_scan(const QubitNetwork& net, const Matrix& target,
                               const std::vector<double>& times,
                               const GrapeOptions& options);

/// Header "slice,t_start,u_1,...,u_C".
void write_pulse_csv(std::ostream& os, const PulseSet& pulses);
/// Header "T,best_infidelity,iterations,restart_index".
void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows);

}  // namespace qnb
