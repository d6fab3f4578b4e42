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

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <iosfwd>

#include "qnetbound/bounds.hpp"
#include "qnetbound/network.hpp"
#include "qnetbound/schedule.hpp"

namespace qnb {

using Matrix = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxSimQubits = 10;

/// exp(c H) for Hermitian H, through its eigendecomposition.
Matrix hermitian_exp(const Matrix& H, std::complex<double> c);

/// sum_i a_i P_i as a dense Hermitian matrix.
Matrix generator_matrix(const GeneratorSpec& spec);
/// exp(i sum_i a_i P_i).
Matrix target_unitary(const GeneratorSpec& spec);

/// sum omega_a sigma_a + sum g_ab sigma_a sigma_b.
Matrix drift_hamiltonian(const QubitNetwork& net, bool include_splittings = true);

/// U <- exp(i phi P) U.
void apply_pauli_exp_left(Matrix& U, const PauliString& P, double phi);
/// U <- R U for a 2x2 gate R on qubit q of n.
void apply_single_qubit_left(Matrix& U, std::size_t n, std::size_t q,
                             const Eigen::Matrix2cd& R);

Eigen::Matrix2cd local_rotation_matrix(const LocalRotation& r);

/// Ordered product of primitive exponentials; the schedule's first
/// primitive is the rightmost factor.
Matrix unitary_of_schedule(const QubitNetwork& net, const Schedule& s);

/// ||U - V||_HS / sqrt(2^(n+1)).
double normalized_error(const Matrix& U, const Matrix& V);
/// 1 - |tr(U^dagger V)| / 2^n.
double gate_infidelity(const Matrix& U, const Matrix& V);
/// ||U^dagger U - I||_HS.
double unitarity_defect(const Matrix& U);

/// First line "rows cols", then one line per row of "re im" pairs.
void write_matrix_text(std::ostream& os, const Matrix& m);
Matrix read_matrix_text(std::istream& is);

}  // namespace qnb
