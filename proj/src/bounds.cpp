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

#include "qnetbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "qnetbound/errors.hpp"
#include "qnetbound/lie_depth.hpp"

namespace qnb {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace

GeneratorSpec::GeneratorSpec(std::vector<GeneratorTerm> terms)
    : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("generator has no terms");
  const std::size_t n = terms_.front().pauli.size();
  std::set<std::string> seen;
  for (const auto& t : terms_) {
    if (t.pauli.size() != n) {
      throw DimensionError("generator terms act on different qubit counts");
    }
    if (!std::isfinite(t.coeff) || t.coeff == 0.0) {
      throw DomainError("generator coefficient for " + t.pauli.str() +
                        " must be finite and nonzero");
    }
    if (t.pauli.is_identity_word()) {
      throw DomainError("identity term is not traceless");
    }
    if (t.pauli.phase() != 0) {
      throw DomainError("generator words must carry phase 0");
    }
    if (!seen.insert(t.pauli.str()).second) {
      throw DomainError("duplicate generator term " + t.pauli.str());
    }
  }
}

double GeneratorSpec::norm_inf() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

double GeneratorSpec::norm_1() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

double commutator_weight(const GeneratorSpec& spec) {
  const auto& t = spec.terms();
  double s = 0.0;
  for (std::size_t j = 0; j < t.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      s += std::abs(t[j].coeff * t[k].coeff) *
           hs_norm_commutator(t[j].pauli, t[k].pauli);
    }
  }
  return s;
}

double tau_bound(double a, std::size_t depth, double J) {
  require_positive(J, "J");
  return (static_cast<double>(depth) * kPi / 2 + std::abs(a)) / J;
}

double trotter_error_bound(const GeneratorSpec& spec, std::size_t m) {
  if (m < 1) throw DomainError("Trotter step count must be >= 1");
  const double dim2 = std::ldexp(1.0, static_cast<int>(spec.num_qubits()) + 1);
  return commutator_weight(spec) / (2.0 * static_cast<double>(m) * std::sqrt(dim2));
}

std::size_t min_trotter_steps(const GeneratorSpec& spec, double epsilon) {
  require_positive(epsilon, "epsilon");
  const double e1 = trotter_error_bound(spec, 1);
  if (e1 <= epsilon) return 1;
  auto m = static_cast<std::size_t>(std::ceil(e1 / epsilon));
  m = std::max<std::size_t>(m, 1);
  while (m > 1 && trotter_error_bound(spec, m - 1) <= epsilon) --m;
  while (trotter_error_bound(spec, m) > epsilon) ++m;
  return m;
}

double k_factor(const GeneratorSpec& spec) {
  return commutator_weight(spec) /
         std::sqrt(std::ldexp(1.0, static_cast<int>(spec.num_qubits())));
}

BoundReport bound_report(const GeneratorSpec& spec, const QubitNetwork& net,
                         double epsilon, bool use_exact_depths) {
  require_positive(epsilon, "epsilon");
  if (spec.num_qubits() != net.size()) {
    throw DimensionError("generator acts on " + std::to_string(spec.num_qubits()) +
                         " qubits, network has " + std::to_string(net.size()));
  }
  const std::size_t n = net.size();
  BoundReport r;
  r.n = n;
  r.l = spec.size();
  r.J = j_paper(net);
  r.epsilon = epsilon;
  r.norm_1 = spec.norm_1();
  r.norm_inf = spec.norm_inf();
  r.K = k_factor(spec);
  r.m_steps = min_trotter_steps(spec, epsilon);
  r.trotter_error = trotter_error_bound(spec, r.m_steps);
  r.exact_depths = use_exact_depths;

  const bool star = net.control_model() == ControlModel::kStarReduced;
  double depth_sum = 0.0;    // sum_i D(B_i)
  double step_cost = 0.0;    // per-Trotter-step time beyond the |a_i|/m terms, times J
  double multi_norm_1 = 0.0; // ||a||_1 over terms that take time
  for (const auto& t : spec.terms()) {
    std::size_t d = 0;
    if (t.pauli.weight() >= 2) {
      if (use_exact_depths) {
        const auto dr = depth(net, t.pauli);
        d = dr.depth;
        r.exact_depths = r.exact_depths && dr.exact;
      } else {
        d = depth_upper_bound(n);
      }
      multi_norm_1 += std::abs(t.coeff);
      if (star) {
        r.per_term.push_back(static_cast<double>(d) * 3 * kPi / r.J +
                             (kPi / 2 + std::abs(t.coeff)) / r.J);
        step_cost += static_cast<double>(d) * 3 * kPi + kPi / 2;
      } else {
        r.per_term.push_back(tau_bound(t.coeff, d, r.J));
        step_cost += static_cast<double>(d) * kPi / 2;
      }
    } else {
      r.per_term.push_back(0.0);
    }
    r.depths.push_back(d);
    depth_sum += static_cast<double>(d);
  }

  if (r.l >= 2) {
    r.eq8_usable = (multi_norm_1 + static_cast<double>(r.m_steps) * step_cost) / r.J;
    if (!star) {
      r.eq8_paper = (r.norm_1 + kPi * r.K * depth_sum / (4 * kSqrt2 * epsilon)) / r.J;
      const double l = static_cast<double>(r.l);
      const double nm2 = n >= 2 ? static_cast<double>(n - 2) : 0.0;
      r.eq1 = l / r.J *
              (r.norm_inf + kPi * l * (l - 1) * nm2 * r.norm_inf * r.norm_inf /
                                (2 * kSqrt2 * epsilon));
    }
  }
  return r;
}

double cnot_bound(const QubitNetwork& net, std::size_t i, std::size_t j) {
  if (i == j) throw DomainError("CNOT needs two distinct qubits");
  const double J = j_paper(net);
  const auto d = static_cast<double>(geodesic_distance(net, i, j));
  return kPi * ((d - 1) / J + 1 / (4 * J));
}

double two_qubit_bound(const QubitNetwork& net, std::size_t i, std::size_t j) {
  return 3 * cnot_bound(net, i, j);
}

double nbody_chain_bound(std::size_t n, double kappa, double J) {
  if (n < 3) throw DomainError("chain bound needs n >= 3");
  require_positive(J, "J");
  return (2.0 * static_cast<double>(n - 2) + std::abs(kappa)) * kPi / (4 * J);
}

double exact_three_spin(double kappa, double J) {
  if (!(kappa >= 0.0 && kappa <= 4.0)) {
    throw DomainError("kappa must lie in [0, 4]");
  }
  require_positive(J, "J");
  return std::sqrt(kappa * (4 - kappa)) / (2 * J);
}

ConcatBounds concat_bounds(double T_c, std::size_t n_per_block,
                           const GeneratorSpec& spec, double epsilon) {
  require_positive(T_c, "T_c");
  require_positive(epsilon, "epsilon");
  if (n_per_block < 1) throw DomainError("blocks need at least one qubit");
  const double blocks = 4.0 * (2.0 * static_cast<double>(n_per_block) - 1) + 1;
  ConcatBounds c;
  c.tau = T_c * blocks;
  if (spec.size() >= 2) {
    const double l = static_cast<double>(spec.size());
    const double a = spec.norm_inf();
    c.T = T_c * blocks * l * l * l * (l - 1) * a * a / (2 * kSqrt2 * epsilon);
  }
  return c;
}

double star_tau_bound(std::size_t n, double J, double a) {
  if (n < 3) throw DomainError("star bound needs n >= 3");
  require_positive(J, "J");
  return (kPi / 2 * (12.0 * static_cast<double>(n - 2) + 1) + std::abs(a)) / J;
}

std::string to_string(ScalingClass c) {
  switch (c) {
    case ScalingClass::kLinear: return "linear";
    case ScalingClass::kPolynomial: return "polynomial";
    case ScalingClass::kExponential: return "exponential";
    case ScalingClass::kOutsideBudget: return "outside_budget";
  }
  return "?";
}

double eq1_scaling_exponent(double l_exponent, double norm_exponent) {
  // l ||a|| + l^3 n ||a||^2.
  return std::max(l_exponent + norm_exponent,
                  3 * l_exponent + 1 + 2 * norm_exponent);
}

namespace {

std::string format_exponent(double e) {
  std::ostringstream os;
  const double r = std::round(e);
  if (std::abs(e - r) < 1e-9) {
    os << static_cast<long long>(r);
  } else {
    os.precision(4);
    os << e;
  }
  return os.str();
}

}  // namespace

RpolyReport rpoly_membership(const GeneratorSpec& spec, const PolyBudget& budget) {
  RpolyReport r;
  r.n = spec.num_qubits();
  r.l = spec.size();
  r.norm_inf = spec.norm_inf();
  const double n = static_cast<double>(r.n);
  r.budget_value = budget.constant * std::pow(n, budget.degree);
  if (r.n >= 2) {
    r.l_exponent = std::log(static_cast<double>(r.l)) / std::log(n);
    r.norm_exponent = std::max(0.0, std::log(r.norm_inf) / std::log(n));
  }
  r.full_basis = 2 * r.n < 63 && r.l == (std::size_t{1} << (2 * r.n)) - 1;
  if (r.full_basis) {
    r.member = false;
    r.scaling = ScalingClass::kExponential;
    r.big_o = "O(n 2^(6n))";
    return r;
  }
  r.member = static_cast<double>(r.l) <= r.budget_value &&
             r.norm_inf <= r.budget_value;
  if (!r.member) {
    r.scaling = ScalingClass::kOutsideBudget;
    r.big_o = "not polynomial within budget";
    return r;
  }
  if (r.l == 1) {
    r.scaling = ScalingClass::kLinear;
    r.exponent = std::max(1.0, r.norm_exponent);
  } else {
    r.scaling = ScalingClass::kPolynomial;
    r.exponent = eq1_scaling_exponent(r.l_exponent, r.norm_exponent);
  }
  r.big_o = "O(n^" + format_exponent(*r.exponent) + ")";
  return r;
}

}  // namespace qnb
