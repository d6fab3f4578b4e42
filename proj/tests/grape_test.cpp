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

#include <gtest/gtest.h>

#include <numbers>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "qnetbound/errors.hpp"
#include "test_util.hpp"

using namespace qnb;
using oracle::cd;

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXd random_amps(std::mt19937_64& rng, Eigen::Index N, Eigen::Index C, double s) {
  std::uniform_real_distribution<double> d(-s, s);
  Eigen::MatrixXd a(N, C);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index k = 0; k < C; ++k) a(i, k) = d(rng);
  return a;
}

}  // namespace

TEST(Grape, ControlOperatorsFollowControlModel) {
  const auto full = control_system(ising_chain(3, 1.0));
  EXPECT_EQ(full.controls.size(), 6u);
  EXPECT_EQ(full.labels.front(), "x0");
  EXPECT_LT((full.controls[3] - oracle::dense("IYI")).norm(), 1e-15);
  const auto star = control_system(star_graph(4, 1.0));
  ASSERT_EQ(star.controls.size(), 5u);
  EXPECT_LT((star.controls[1] - oracle::dense("YIII")).norm(), 1e-15);
  EXPECT_LT((star.controls[4] - oracle::dense("IIIZ")).norm(), 1e-15);
  EXPECT_THROW(control_system(ising_chain(9, 1.0)), ResourceError);
}

TEST(Grape, PropagatorMatchesSlicedSeries) {
  std::mt19937_64 rng(1);
  const auto net = heisenberg_chain(2, 1.0);
  const auto sys = control_system(net);
  const auto amps = random_amps(rng, 5, 4, 2.0);
  const double T = 1.3;
  oracle::Mat U = oracle::Mat::Identity(4, 4);
  for (int j = 0; j < 5; ++j) {
    oracle::Mat H = sys.drift;
    for (int k = 0; k < 4; ++k) H += amps(j, k) * sys.controls[k];
    U = oracle::expm(cd(0, -T / 5) * H) * U;
  }
  EXPECT_LT((propagate(sys, T, amps) - U).norm(), 1e-11);
  EXPECT_THROW(propagate(sys, 0.0, amps), DomainError);
  EXPECT_THROW(propagate(sys, 1.0, random_amps(rng, 5, 3, 1.0)), DimensionError);
}

TEST(Grape, GradientMatchesCentralDifferences) {
  std::mt19937_64 rng(42);
  const auto net = ising_chain(3, 1.0);
  const auto sys = control_system(net);
  const Matrix target =
      oracle::expm(cd(0, -kPi / 4) * oracle::dense("ZZZ"));
  for (int trial = 0; trial < 5; ++trial) {
    const auto amps = random_amps(rng, 8, 6, 3.0);
    const double T = 0.9;
    const auto g = gradient(sys, T, amps, target);
    const double h = 1e-6;
    for (int j = 0; j < 8; j += 3) {
      for (int k = 0; k < 6; ++k) {
        auto up = amps;
        auto dn = amps;
        up(j, k) += h;
        dn(j, k) -= h;
        const double fd =
            (infidelity(sys, T, up, target) - infidelity(sys, T, dn, target)) / (2 * h);
        EXPECT_NEAR(g(j, k), fd, 1e-7 + 1e-5 * std::abs(fd));
      }
    }
  }
}

TEST(Grape, DegenerateSlicesHaveFiniteGradient) {
  const auto net = ising_chain(2, 1.0);
  const auto sys = control_system(net);
  const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(4, 4);
  const Matrix target = oracle::dense("XI");
  const auto g = gradient(sys, 1.0, zero, target);
  EXPECT_TRUE(g.allFinite());
}

TEST(Grape, OptimizerReachesTwoQubitGate) {
  const auto net = ising_chain(2, 1.0);
  const Matrix target = oracle::expm(cd(0, -kPi / 4) * oracle::dense("ZZ"));
  GrapeOptions opt;
  opt.slices = 16;
  opt.restarts = 3;
  opt.seed = 9;
  const auto p = optimize(net, target, 1.0, opt);
  EXPECT_LT(p.achieved_infidelity, opt.tol);
  EXPECT_NEAR(gate_infidelity(target, propagate(net, p)), p.achieved_infidelity, 1e-9);
  EXPECT_EQ(p.N, 16u);
  EXPECT_EQ(p.amplitudes.rows(), 16);
  EXPECT_EQ(p.amplitudes.cols(), 4);
}

TEST(Grape, DeterministicGivenSeed) {
  const auto net = ising_chain(2, 1.0);
  const Matrix target = oracle::dense("XX");
  GrapeOptions opt;
  opt.slices = 8;
  opt.restarts = 2;
  opt.max_iters = 30;
  opt.seed = 123;
  const auto a = optimize(net, target, 0.3, opt);
  const auto b = optimize(net, target, 0.3, opt);
  EXPECT_EQ(a.amplitudes, b.amplitudes);
  EXPECT_EQ(a.achieved_infidelity, b.achieved_infidelity);
  std::ostringstream ca;
  std::ostringstream cb;
  write_pulse_csv(ca, a);
  write_pulse_csv(cb, b);
  EXPECT_EQ(ca.str(), cb.str());
  opt.seed = 124;
  EXPECT_NE(optimize(net, target, 0.3, opt).amplitudes, a.amplitudes);
}

TEST(Grape, AmplitudeCapIsRespected) {
  const auto net = ising_chain(2, 1.0);
  const Matrix target = oracle::dense("XI");
  GrapeOptions opt;
  opt.slices = 8;
  opt.restarts = 2;
  opt.amplitude_cap = 1.5;
  opt.seed = 4;
  const auto p = optimize(net, target, 2.0, opt);
  EXPECT_LT(p.amplitudes.cwiseAbs().maxCoeff(), 1.5);
  EXPECT_GE(p.achieved_infidelity, 0.0);
  EXPECT_LE(p.achieved_infidelity, 1.0);
}

TEST(Grape, CsvFormats) {
  PulseSet p;
  p.T = 1.0;
  p.N = 2;
  p.amplitudes = Eigen::MatrixXd::Constant(2, 3, 0.5);
  std::ostringstream os;
  write_pulse_csv(os, p);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "slice,t_start,u_1,u_2,u_3");
  EXPECT_NE(os.str().find("\n1,0.5,0.5,0.5,0.5\n"), std::string::npos);
  std::ostringstream scan;
  write_scan_csv(scan, {ScanRow{0.5, 0.25, 10, 2}});
  EXPECT_EQ(scan.str(), "T,best_infidelity,iterations,restart_index\n0.5,0.25,10,2\n");
}

TEST(Grape, OptionValidation) {
  const auto net = ising_chain(2, 1.0);
  const Matrix target = oracle::dense("XI");
  GrapeOptions opt;
  EXPECT_THROW(optimize(net, target, 0.0, opt), DomainError);
  opt.slices = 0;
  EXPECT_THROW(optimize(net, target, 1.0, opt), DomainError);
  opt.slices = 4;
  EXPECT_THROW(optimize(net, oracle::dense("XII"), 1.0, opt), DimensionError);
}
