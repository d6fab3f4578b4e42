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

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <vector>

#include "qnetbound/errors.hpp"

namespace qnb {

namespace {

using cd = std::complex<double>;

void check_cap(std::size_t n) {
  if (n > kMaxSimQubits) {
    throw ResourceError("dense simulation of " + std::to_string(n) +
                        " qubits exceeds cap of " + std::to_string(kMaxSimQubits));
  }
}

const cd kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// P|b> = coef[b] |b ^ xmask>.
struct PauliAction {
  std::size_t xmask = 0;
  std::vector<cd> coef;
};

PauliAction pauli_action(const PauliString& p) {
  const std::size_t n = p.size();
  const std::size_t dim = std::size_t{1} << n;
  PauliAction a;
  for (std::size_t q = 0; q < n; ++q)
    if (p.x_bit(q)) a.xmask |= std::size_t{1} << (n - 1 - q);
  a.coef.resize(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    int phase = p.phase();
    double sign = 1.0;
    for (std::size_t q = 0; q < n; ++q) {
      const bool bit = (b >> (n - 1 - q)) & 1;
      const Pauli l = p.at(q);
      if (l == Pauli::Z && bit) sign = -sign;
      if (l == Pauli::Y) phase += bit ? 3 : 1;
    }
    a.coef[b] = sign * kIPow[phase % 4];
  }
  return a;
}

const Eigen::Matrix2cd& sigma(std::size_t axis) {
  static const Eigen::Matrix2cd kX = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd kY =
      (Eigen::Matrix2cd() << 0, cd(0, -1), cd(0, 1), 0).finished();
  static const Eigen::Matrix2cd kZ = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  return axis == 0 ? kX : axis == 1 ? kY : kZ;
}

}  // namespace

Matrix hermitian_exp(const Matrix& H, std::complex<double> c) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(H);
  if (es.info() != Eigen::Success) throw DomainError("eigendecomposition failed");
  const Eigen::VectorXcd phases =
      (c * es.eigenvalues().cast<cd>()).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix generator_matrix(const GeneratorSpec& spec) {
  const std::size_t n = spec.num_qubits();
  check_cap(n);
  const std::size_t dim = std::size_t{1} << n;
  Matrix H = Matrix::Zero(dim, dim);
  for (const auto& t : spec.terms()) H += t.coeff * to_matrix(t.pauli, kMaxSimQubits);
  return H;
}

Matrix target_unitary(const GeneratorSpec& spec) {
  return hermitian_exp(generator_matrix(spec), cd(0, 1));
}

Matrix drift_hamiltonian(const QubitNetwork& net, bool include_splittings) {
  const std::size_t n = net.size();
  check_cap(n);
  const std::size_t dim = std::size_t{1} << n;
  Matrix H = Matrix::Zero(dim, dim);
  if (include_splittings) {
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t a = 0; a < 3; ++a)
        if (net.omega()[q][a] != 0.0)
          H += net.omega()[q][a] * to_matrix(PauliString::single(n, q, kAxes[a]));
  }
  for (const auto& e : net.edges())
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (e.g[a][b] != 0.0)
          H += e.g[a][b] *
               to_matrix(PauliString::two_body(n, e.u, kAxes[a], e.v, kAxes[b]));
  return H;
}

void apply_pauli_exp_left(Matrix& U, const PauliString& P, double phi) {
  const auto act = pauli_action(P);
  const auto dim = static_cast<Eigen::Index>(act.coef.size());
  if (U.rows() != dim) throw DimensionError("matrix and Pauli string disagree");
  Matrix PU(U.rows(), U.cols());
  for (Eigen::Index b = 0; b < dim; ++b) {
    PU.row(static_cast<Eigen::Index>(static_cast<std::size_t>(b) ^ act.xmask)) =
        act.coef[static_cast<std::size_t>(b)] * U.row(b);
  }
  U = std::cos(phi) * U + cd(0, std::sin(phi)) * PU;
}

void apply_single_qubit_left(Matrix& U, std::size_t n, std::size_t q,
                             const Eigen::Matrix2cd& R) {
  const std::size_t dim = std::size_t{1} << n;
  if (static_cast<std::size_t>(U.rows()) != dim || q >= n) {
    throw DimensionError("single-qubit gate does not fit the matrix");
  }
  const std::size_t bit = std::size_t{1} << (n - 1 - q);
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & bit) continue;
    const auto r0 = static_cast<Eigen::Index>(r);
    const auto r1 = static_cast<Eigen::Index>(r | bit);
    const Eigen::RowVectorXcd a = U.row(r0);
    const Eigen::RowVectorXcd b = U.row(r1);
    U.row(r0) = R(0, 0) * a + R(0, 1) * b;
    U.row(r1) = R(1, 0) * a + R(1, 1) * b;
  }
}

Eigen::Matrix2cd local_rotation_matrix(const LocalRotation& r) {
  const double norm = std::sqrt(r.axis[0] * r.axis[0] + r.axis[1] * r.axis[1] +
                                r.axis[2] * r.axis[2]);
  if (!(norm > 0.0)) throw DomainError("rotation axis must be nonzero");
  Eigen::Matrix2cd ns = Eigen::Matrix2cd::Zero();
  for (std::size_t a = 0; a < 3; ++a) ns += (r.axis[a] / norm) * sigma(a);
  return std::cos(r.angle / 2) * Eigen::Matrix2cd::Identity() -
         cd(0, std::sin(r.angle / 2)) * ns;
}

Matrix unitary_of_schedule(const QubitNetwork& net, const Schedule& s) {
  const std::size_t n = s.size();
  if (n != net.size()) throw DimensionError("schedule and network sizes differ");
  check_cap(n);
  const std::size_t dim = std::size_t{1} << n;
  Matrix U = Matrix::Identity(dim, dim);
  for (const auto& p : s.primitives()) {
    if (const auto* r = std::get_if<LocalRotation>(&p)) {
      apply_single_qubit_left(U, n, r->qubit, local_rotation_matrix(*r));
    } else {
      const auto& e = std::get<TwoBodyEvolution>(p);
      if (!net.has_edge(e.u, e.v)) throw DomainError("evolution on a missing edge");
      apply_pauli_exp_left(U, PauliString::two_body(n, e.u, e.alpha, e.v, e.beta),
                           e.sign * e.angle);
    }
  }
  return U;
}

double normalized_error(const Matrix& U, const Matrix& V) {
  if (U.rows() != V.rows() || U.cols() != V.cols()) {
    throw DimensionError("matrices have different shapes");
  }
  return (U - V).norm() / std::sqrt(2.0 * static_cast<double>(U.rows()));
}

double gate_infidelity(const Matrix& U, const Matrix& V) {
  if (U.rows() != V.rows() || U.cols() != V.cols()) {
    throw DimensionError("matrices have different shapes");
  }
  return 1.0 - std::abs((U.adjoint() * V).trace()) / static_cast<double>(U.rows());
}

double unitarity_defect(const Matrix& U) {
  return (U.adjoint() * U - Matrix::Identity(U.rows(), U.cols())).norm();
}

void write_matrix_text(std::ostream& os, const Matrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n' << std::setprecision(17);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c).real() << ' ' << m(r, c).imag();
    }
    os << '\n';
  }
}

Matrix read_matrix_text(std::istream& is) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0) {
    throw ParseError("matrix dump: bad header");
  }
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      double re = 0;
      double im = 0;
      if (!(is >> re >> im)) throw ParseError("matrix dump: truncated data");
      m(r, c) = cd(re, im);
    }
  }
  return m;
}

}  // namespace qnb
