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

#include "qnetbound/grape.hpp"

#include <cmath>
#include <deque>
#include <iomanip>
#include <ostream>
#include <random>

#include "qnetbound/errors.hpp"

namespace qnb {

namespace {

using cd = std::complex<double>;

struct Slice {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
  Matrix unitary;
};

void check_inputs(const ControlSystem& sys, double T, const Eigen::MatrixXd& amps) {
  if (!(T > 0.0)) throw DomainError("gate time T must be positive");
  if (amps.rows() == 0) throw DomainError("pulses need at least one slice");
  if (static_cast<std::size_t>(amps.cols()) != sys.controls.size()) {
    throw DimensionError("amplitude columns do not match the control count");
  }
}

Slice make_slice(const ControlSystem& sys, double dt, const Eigen::RowVectorXd& u) {
  Matrix H = sys.drift;
  for (std::size_t k = 0; k < sys.controls.size(); ++k) {
    H += u(static_cast<Eigen::Index>(k)) * sys.controls[k];
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  if (es.info() != Eigen::Success) throw DomainError("eigendecomposition failed");
  Slice s;
  s.eigenvalues = es.eigenvalues();
  s.eigenvectors = es.eigenvectors();
  const Eigen::VectorXcd phases =
      (cd(0, -dt) * s.eigenvalues.cast<cd>()).array().exp().matrix();
  s.unitary = s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
  return s;
}

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

struct Evaluation {
  double value = 1.0;
  Eigen::MatrixXd grad;
};

// Infidelity and its exact gradient. The derivative of exp(-i dt H) along
// H_k is V (F o V^dagger H_k V) V^dagger with the divided differences
// F_ab = -i dt exp(-i dt (l_a + l_b)/2) sinc(dt (l_a - l_b)/2).
Evaluation evaluate(const ControlSystem& sys, double T, const Eigen::MatrixXd& amps,
                    const Matrix& target, bool with_gradient) {
  const auto N = static_cast<std::size_t>(amps.rows());
  const double dt = T / static_cast<double>(N);
  const auto dim = sys.drift.rows();
  std::vector<Slice> slices;
  slices.reserve(N);
  for (std::size_t j = 0; j < N; ++j) {
    slices.push_back(make_slice(sys, dt, amps.row(static_cast<Eigen::Index>(j))));
  }
  // after[j] = U_{N-1} ... U_{j+1}; before[j] = U_{j-1} ... U_0.
  std::vector<Matrix> after(N);
  after[N - 1] = Matrix::Identity(dim, dim);
  for (std::size_t j = N - 1; j-- > 0;) after[j] = after[j + 1] * slices[j + 1].unitary;
  const Matrix total = after[0] * slices[0].unitary;
  const cd f = (target.adjoint() * total).trace();
  const double d = static_cast<double>(dim);
  Evaluation ev;
  ev.value = 1.0 - std::abs(f) / d;
  if (!with_gradient) return ev;

  ev.grad = Eigen::MatrixXd::Zero(amps.rows(), amps.cols());
  const double absf = std::abs(f);
  if (absf == 0.0) return ev;
  const Matrix target_adj = target.adjoint();
  Matrix before = Matrix::Identity(dim, dim);
  Matrix F(dim, dim);
  for (std::size_t j = 0; j < N; ++j) {
    const auto& s = slices[j];
    for (Eigen::Index a = 0; a < dim; ++a) {
      for (Eigen::Index b = 0; b < dim; ++b) {
        const double la = s.eigenvalues(a);
        const double lb = s.eigenvalues(b);
        F(a, b) = cd(0, -dt) * std::exp(cd(0, -dt * (la + lb) / 2)) *
                  sinc(dt * (la - lb) / 2);
      }
    }
    // d tr(U_g^dag A dU B) = tr(B U_g^dag A dU).
    const Matrix M = before * target_adj * after[j];
    const Matrix G =
        (s.eigenvectors.adjoint() * M * s.eigenvectors).transpose().cwiseProduct(F);
    for (std::size_t k = 0; k < sys.controls.size(); ++k) {
      const Matrix E = s.eigenvectors.adjoint() * sys.controls[k] * s.eigenvectors;
      const cd df = G.cwiseProduct(E).sum();
      ev.grad(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          -(std::conj(f) * df).real() / (absf * d);
    }
    before = s.unitary * before;
  }
  return ev;
}

// Parameterization u = cap * tanh(x / cap) when capped, u = x otherwise.
struct AmplitudeMap {
  std::optional<double> cap;

  Eigen::MatrixXd to_amplitudes(const Eigen::MatrixXd& x) const {
    if (!cap) return x;
    return (*cap) * (x.array() / *cap).tanh().matrix();
  }
  Eigen::MatrixXd from_amplitudes(const Eigen::MatrixXd& u) const {
    if (!cap) return u;
    const Eigen::ArrayXXd r = (u.array() / *cap).max(-0.99).min(0.99);
    return ((*cap) * (0.5 * ((1 + r) / (1 - r)).log())).matrix();
  }
  Eigen::MatrixXd chain(const Eigen::MatrixXd& x, const Eigen::MatrixXd& du) const {
    if (!cap) return du;
    const Eigen::ArrayXXd t = (x.array() / *cap).tanh();
    return (du.array() * (1 - t * t)).matrix();
  }
};

struct RunResult {
  Eigen::MatrixXd amplitudes;
  double value = 1.0;
  std::size_t iterations = 0;
};

// L-BFGS with Armijo backtracking. Every accepted step lowers the
// objective, so the final point is also the best one visited.
RunResult lbfgs(const ControlSystem& sys, double T, const Matrix& target,
                Eigen::MatrixXd x0, const GrapeOptions& opt, const AmplitudeMap& map) {
  const auto rows = x0.rows();
  const auto cols = x0.cols();
  auto eval = [&](const Eigen::VectorXd& x, Eigen::VectorXd& g) {
    const Eigen::MatrixXd xm = Eigen::Map<const Eigen::MatrixXd>(x.data(), rows, cols);
    const auto ev = evaluate(sys, T, map.to_amplitudes(xm), target, true);
    const Eigen::MatrixXd gm = map.chain(xm, ev.grad);
    g = Eigen::Map<const Eigen::VectorXd>(gm.data(), gm.size());
    return ev.value;
  };

  Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(x0.data(), x0.size());
  Eigen::VectorXd g;
  double fx = eval(x, g);
  std::deque<Eigen::VectorXd> s_hist;
  std::deque<Eigen::VectorXd> y_hist;
  std::size_t it = 0;
  while (it < opt.max_iters && fx >= opt.tol) {
    const double gnorm = g.norm();
    if (!(gnorm > 1e-14)) break;

    // Two-loop recursion.
    Eigen::VectorXd q = g;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t i = s_hist.size(); i-- > 0;) {
      alpha[i] = s_hist[i].dot(q) / y_hist[i].dot(s_hist[i]);
      q -= alpha[i] * y_hist[i];
    }
    double gamma = 1.0 / gnorm;
    if (!s_hist.empty()) gamma = s_hist.back().dot(y_hist.back()) / y_hist.back().squaredNorm();
    Eigen::VectorXd dir = gamma * q;
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      const double beta = y_hist[i].dot(dir) / y_hist[i].dot(s_hist[i]);
      dir += (alpha[i] - beta) * s_hist[i];
    }
    dir = -dir;
    double slope = g.dot(dir);
    if (!(slope < 0.0)) {
      s_hist.clear();
      y_hist.clear();
      dir = -g / gnorm;
      slope = g.dot(dir);
    }

    double step = 1.0;
    Eigen::VectorXd xn;
    Eigen::VectorXd gn;
    double fn = fx;
    bool accepted = false;
    for (int k = 0; k < 40; ++k) {
      xn = x + step * dir;
      fn = eval(xn, gn);
      if (fn <= fx + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (s_hist.empty()) break;
      s_hist.clear();
      y_hist.clear();
      continue;
    }
    const Eigen::VectorXd s = xn - x;
    const Eigen::VectorXd y = gn - g;
    if (s.dot(y) > 1e-12 * s.norm() * y.norm()) {
      s_hist.push_back(s);
      y_hist.push_back(y);
      if (s_hist.size() > opt.lbfgs_history) {
        s_hist.pop_front();
        y_hist.pop_front();
      }
    }
    x = xn;
    g = gn;
    fx = fn;
    ++it;
  }
  RunResult r;
  const Eigen::MatrixXd xm = Eigen::Map<const Eigen::MatrixXd>(x.data(), rows, cols);
  r.amplitudes = map.to_amplitudes(xm);
  r.value = fx;
  r.iterations = it;
  return r;
}

}  // namespace

ControlSystem control_system(const QubitNetwork& net, bool include_splittings) {
  const std::size_t n = net.size();
  if (n > kMaxGrapeQubits) {
    throw ResourceError("pulse optimization of " + std::to_string(n) +
                        " qubits exceeds cap of " + std::to_string(kMaxGrapeQubits));
  }
  ControlSystem sys;
  sys.n = n;
  sys.drift = drift_hamiltonian(net, include_splittings);
  auto add = [&](std::size_t q, Pauli p) {
    sys.controls.push_back(to_matrix(PauliString::single(n, q, p)));
    sys.labels.push_back(std::string(1, axis_char(p)) + std::to_string(q));
  };
  if (net.control_model() == ControlModel::kFullLocal) {
    for (std::size_t q = 0; q < n; ++q) {
      add(q, Pauli::X);
      add(q, Pauli::Y);
    }
  } else {
    add(0, Pauli::X);
    add(0, Pauli::Y);
    for (std::size_t q = 1; q < n; ++q) add(q, Pauli::Z);
  }
  return sys;
}

Matrix propagate(const ControlSystem& sys, double T, const Eigen::MatrixXd& amplitudes) {
  check_inputs(sys, T, amplitudes);
  const double dt = T / static_cast<double>(amplitudes.rows());
  const auto dim = sys.drift.rows();
  Matrix U = Matrix::Identity(dim, dim);
  for (Eigen::Index j = 0; j < amplitudes.rows(); ++j) {
    U = make_slice(sys, dt, amplitudes.row(j)).unitary * U;
  }
  return U;
}

Matrix propagate(const QubitNetwork& net, const PulseSet& pulses) {
  return propagate(control_system(net), pulses.T, pulses.amplitudes);
}

double infidelity(const ControlSystem& sys, double T, const Eigen::MatrixXd& amplitudes,
                  const Matrix& target) {
  check_inputs(sys, T, amplitudes);
  return evaluate(sys, T, amplitudes, target, false).value;
}

Eigen::MatrixXd gradient(const ControlSystem& sys, double T,
                         const Eigen::MatrixXd& amplitudes, const Matrix& target) {
  check_inputs(sys, T, amplitudes);
  return evaluate(sys, T, amplitudes, target, true).grad;
}

Eigen::MatrixXd gradient(const QubitNetwork& net, const PulseSet& pulses,
                         const Matrix& target) {
  return gradient(control_system(net), pulses.T, pulses.amplitudes, target);
}

PulseSet optimize(const QubitNetwork& net, const Matrix& target, double T,
                  const GrapeOptions& options) {
  if (!(T > 0.0)) throw DomainError("gate time T must be positive");
  if (!(options.tol > 0.0)) throw DomainError("tolerance must be positive");
  if (options.slices == 0) throw DomainError("need at least one slice");
  if (options.restarts == 0) throw DomainError("need at least one restart");
  const auto sys = control_system(net);
  if (target.rows() != sys.drift.rows() || target.cols() != sys.drift.cols()) {
    throw DimensionError("target unitary does not match the network");
  }
  const double scale = options.init_scale.value_or(5.0 * j_paper(net));
  const AmplitudeMap map{options.amplitude_cap};
  const auto C = static_cast<Eigen::Index>(sys.controls.size());
  const auto N = static_cast<Eigen::Index>(options.slices);

  PulseSet best;
  best.T = T;
  best.N = options.slices;
  best.seed = options.seed;
  bool have = false;
  for (std::size_t r = 0; r < options.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> dist(-scale, scale);
    Eigen::MatrixXd u0(N, C);
    for (Eigen::Index j = 0; j < N; ++j)
      for (Eigen::Index k = 0; k < C; ++k) u0(j, k) = dist(rng);
    const auto run = lbfgs(sys, T, target, map.from_amplitudes(u0), options, map);
    if (!have || run.value < best.achieved_infidelity) {
      have = true;
      best.amplitudes = run.amplitudes;
      best.achieved_infidelity = run.value;
      best.iterations = run.iterations;
      best.restart_index = r;
    }
    if (best.achieved_infidelity < options.tol) break;
  }
  return best;
}

std::vector<ScanRow> time_scan(const QubitNetwork& net, const Matrix& target,
                               const std::vector<double>& times,
                               const GrapeOptions& options) {
  std::vector<ScanRow> rows;
  rows.reserve(times.size());
  for (double T : times) {
    const auto p = optimize(net, target, T, options);
    rows.push_back(ScanRow{T, p.achieved_infidelity, p.iterations, p.restart_index});
  }
  return rows;
}

void write_pulse_csv(std::ostream& os, const PulseSet& pulses) {
  os << "slice,t_start";
  for (Eigen::Index k = 0; k < pulses.amplitudes.cols(); ++k) os << ",u_" << (k + 1);
  os << '\n' << std::setprecision(17);
  for (Eigen::Index j = 0; j < pulses.amplitudes.rows(); ++j) {
    os << j << ',' << static_cast<double>(j) * pulses.dt();
    for (Eigen::Index k = 0; k < pulses.amplitudes.cols(); ++k) {
      os << ',' << pulses.amplitudes(j, k);
    }
    os << '\n';
  }
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
  os << "T,best_infidelity,iterations,restart_index\n" << std::setprecision(17);
  for (const auto& r : rows) {
    os << r.T << ',' << r.best_infidelity << ',' << r.iterations << ','
       << r.restart_index << '\n';
  }
}

}  // namespace qnb
