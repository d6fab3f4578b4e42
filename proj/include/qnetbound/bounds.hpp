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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qnetbound/network.hpp"
#include "qnetbound/pauli.hpp"

namespace qnb {

struct GeneratorTerm {
  double coeff = 0.0;
  PauliString pauli{1};
};

/// Target generator sum_i a_i P_i; the gate is exp(i sum_i a_i P_i).
/// Coefficients are nonzero, words distinct, non-identity, phase 0, and all
/// on the same number of qubits.
class GeneratorSpec {
 public:
  explicit GeneratorSpec(std::vector<GeneratorTerm> terms);

  const std::vector<GeneratorTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t num_qubits() const noexcept { return terms_.front().pauli.size(); }
  double norm_inf() const;
  double norm_1() const;

 private:
  std::vector<GeneratorTerm> terms_;
};

/// sum_{j>k} |a_j a_k| ||[B_j, B_k]||_HS.
double commutator_weight(const GeneratorSpec& spec);

/// (1/J)(D pi/2 + |a|).
double tau_bound(double a, std::size_t depth, double J);

/// First-order Trotter error bound after m steps; 0 if all terms commute.
double trotter_error_bound(const GeneratorSpec& spec, std::size_t m);

/// Smallest m >= 1 with trotter_error_bound(spec, m) <= epsilon.
std::size_t min_trotter_steps(const GeneratorSpec& spec, double epsilon);

/// (1/sqrt(2^n)) sum_{j>k} |a_j a_k| ||[B_j, B_k]||_HS.
double k_factor(const GeneratorSpec& spec);

struct BoundReport {
  std::size_t n = 0;
  std::size_t l = 0;
  double J = 0.0;
  double epsilon = 0.0;
  double norm_1 = 0.0;
  double norm_inf = 0.0;
  double K = 0.0;
  std::size_t m_steps = 1;
  /// trotter_error_bound at m_steps.
  double trotter_error = 0.0;
  std::vector<std::size_t> depths;
  bool exact_depths = false;
  /// Single-term time bound per term; weight-1 terms cost nothing.
  std::vector<double> per_term;
  /// Trotter bound with the continuous m of the error inversion. Empty for
  /// l = 1 and for networks without full local control.
  std::optional<double> eq8_paper;
  /// Trotter bound with the integer step count max(1, m_steps).
  std::optional<double> eq8_usable;
  /// Closed-form bound with the worst-case depth 2(n-2). Empty like eq8_paper.
  std::optional<double> eq1;
};

/// Evaluates every bound for `spec` on `net`. Depths come from the exact
/// support search when `use_exact_depths` is set, else from 2(n-2).
BoundReport bound_report(const GeneratorSpec& spec, const QubitNetwork& net,
                         double epsilon, bool use_exact_depths);

/// CNOT time bound between qubits i != j, J = j_paper(net).
double cnot_bound(const QubitNetwork& net, std::size_t i, std::size_t j);
/// Three CNOTs' worth.
double two_qubit_bound(const QubitNetwork& net, std::size_t i, std::size_t j);

/// Time bound for exp(-i kappa pi/4 sigma...sigma) on an n-spin chain.
double nbody_chain_bound(std::size_t n, double kappa, double J);

/// Exact minimum time of exp(-i kappa pi/4 ZZZ) on the 3-spin Ising chain,
/// kappa in [0, 4].
double exact_three_spin(double kappa, double J);

struct ConcatBounds {
  double tau = 0.0;
  /// Empty when the spec has a single term.
  std::optional<double> T;
};

/// Bounds for blocks of `n_per_block` qubits joined by controllable
/// two-body links, each block realizing a two-qubit gate within T_c.
ConcatBounds concat_bounds(double T_c, std::size_t n_per_block,
                           const GeneratorSpec& spec, double epsilon);

/// Single-term bound on the star graph with reduced controls.
double star_tau_bound(std::size_t n, double J, double a);

enum class ScalingClass { kLinear, kPolynomial, kExponential, kOutsideBudget };

std::string to_string(ScalingClass c);

/// Polynomial budget c * n^degree for l(a) and ||a||_inf.
struct PolyBudget {
  double degree = 1.0;
  double constant = 1.0;
};

struct RpolyReport {
  bool member = false;
  bool full_basis = false;
  std::size_t n = 0;
  std::size_t l = 0;
  double norm_inf = 0.0;
  double budget_value = 0.0;
  /// log l / log n and max(0, log ||a||_inf / log n).
  double l_exponent = 0.0;
  double norm_exponent = 0.0;
  ScalingClass scaling = ScalingClass::kOutsideBudget;
  /// Growth exponent in n of the time bound, when polynomial.
  std::optional<double> exponent;
  std::string big_o;
};

/// Exponent in n of the closed-form bound when l ~ n^p and ||a||_inf ~ n^q.
double eq1_scaling_exponent(double l_exponent, double norm_exponent);

RpolyReport rpoly_membership(const GeneratorSpec& spec, const PolyBudget& budget);

}  // namespace qnb
