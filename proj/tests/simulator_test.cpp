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

#include "qnetbound/simulator.hpp"

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

}  // namespace

TEST(Simulator, HermitianExpMatchesSeries) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 1 << (1 + trial % 3);
    Matrix A(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) A(i, j) = cd(nd(rng), nd(rng));
    const Matrix H = (A + A.adjoint()) / 2;
    const Matrix U = hermitian_exp(H, cd(0, -0.7));
    EXPECT_LT((U - oracle::expm(cd(0, -0.7) * H)).norm(), 1e-11);
    EXPECT_LT(unitarity_defect(U), 1e-12);
  }
}

TEST(Simulator, TargetUnitaryOfSingleTerm) {
  const auto spec = GeneratorSpec({GeneratorTerm{0.3, PauliString::parse("XZY")}});
  const Matrix P = oracle::dense("XZY");
  const Matrix expect = std::cos(0.3) * Matrix::Identity(8, 8) + cd(0, std::sin(0.3)) * P;
  EXPECT_LT((target_unitary(spec) - expect).norm(), 1e-13);
}

TEST(Simulator, TargetUnitaryOfSumMatchesSeries) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const auto spec = test_util::random_spec(rng, 3, 4);
    Matrix H = Matrix::Zero(8, 8);
    for (const auto& t : spec.terms()) H += t.coeff * oracle::dense(t.pauli.str());
    EXPECT_LT((target_unitary(spec) - oracle::expm(cd(0, 1) * H)).norm(), 1e-11);
  }
}

TEST(Simulator, PauliExpUpdateMatchesDense) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto w = oracle::random_word(rng, n);
    const auto dim = static_cast<Eigen::Index>(1) << n;
    Matrix U = Matrix::Random(dim, dim);
    const Matrix U0 = U;
    apply_pauli_exp_left(U, PauliString::parse(w), 0.37);
    const Matrix E = oracle::expm(cd(0, 0.37) * oracle::dense(w));
    EXPECT_LT((U - E * U0).norm(), 1e-12) << w;
  }
}

TEST(Simulator, SingleQubitUpdateMatchesKron) {
  const Eigen::Matrix2cd R = local_rotation_matrix(LocalRotation{1, {1.0, 2.0, -0.5}, 0.9});
  Matrix U = Matrix::Identity(8, 8);
  apply_single_qubit_left(U, 3, 1, R);
  const Matrix expect =
      oracle::kron(oracle::kron(oracle::Mat::Identity(2, 2), oracle::Mat(R)),
                   oracle::Mat::Identity(2, 2));
  EXPECT_LT((U - expect).norm(), 1e-14);
}

TEST(Simulator, LocalRotationConvention) {
  const auto Rz = local_rotation_matrix(LocalRotation{0, {0, 0, 1}, kPi / 3});
  const oracle::Mat expect = oracle::expm(cd(0, -kPi / 6) * oracle::dense("Z"));
  EXPECT_LT((oracle::Mat(Rz) - expect).norm(), 1e-14);
  EXPECT_THROW(local_rotation_matrix(LocalRotation{0, {0, 0, 0}, 1.0}), DomainError);
}

TEST(Simulator, ScheduleUnitaryOrdering) {
  const auto net = test_util::network(2, {{0, 1}});
  Schedule s(2);
  s.append(LocalRotation{0, {1, 0, 0}, 0.4});
  s.append(TwoBodyEvolution{0, 1, Pauli::Z, Pauli::Y, -1, 0.8, 1.0});
  const Matrix first = oracle::expm(cd(0, -0.2) * oracle::dense("XI"));
  const Matrix second = oracle::expm(cd(0, -0.8) * oracle::dense("ZY"));
  EXPECT_LT((unitary_of_schedule(net, s) - second * first).norm(), 1e-12);
  EXPECT_DOUBLE_EQ(s.total_duration(), 0.8);
}

TEST(Simulator, DriftIncludesSplittingsOnRequest) {
  std::vector<Splitting> omega(2, Splitting{0.0, 0.0, 0.0});
  omega[1][0] = 0.3;
  QubitNetwork net(2, {Edge{0, 1, test_util::zz_tensor(1.0)}}, omega);
  const Matrix zz = oracle::dense("ZZ");
  EXPECT_LT((drift_hamiltonian(net, false) - zz).norm(), 1e-15);
  EXPECT_LT((drift_hamiltonian(net, true) - zz - 0.3 * oracle::dense("IX")).norm(), 1e-15);
}

TEST(Simulator, ErrorMeasures) {
  const Matrix I = Matrix::Identity(4, 4);
  EXPECT_EQ(normalized_error(I, I), 0.0);
  EXPECT_NEAR(normalized_error(I, -I), 2.0 * 2.0 / std::sqrt(8.0), 1e-15);
  // Global phase is invisible to the infidelity only.
  const Matrix V = std::exp(cd(0, 0.4)) * I;
  EXPECT_NEAR(gate_infidelity(I, V), 0.0, 1e-15);
  EXPECT_GT(normalized_error(I, V), 0.1);
  EXPECT_THROW(normalized_error(I, Matrix::Identity(2, 2)), DimensionError);
}

TEST(Simulator, CapsAndMatrixDump) {
  const auto big = test_util::network(11, test_util::path_pairs(11));
  EXPECT_THROW(drift_hamiltonian(big), ResourceError);
  Matrix M(2, 3);
  M << cd(1, 2), cd(0.1, -3), cd(1e-17, 0), cd(-4, 0.5), cd(0, 0), cd(kPi, 1);
  std::stringstream ss;
  write_matrix_text(ss, M);
  EXPECT_EQ(read_matrix_text(ss), M);
  std::stringstream bad("2 2\n1 0 0");
  EXPECT_THROW(read_matrix_text(bad), ParseError);
}
