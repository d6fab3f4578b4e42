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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qnetbound/errors.hpp"
#include "test_util.hpp"

using namespace qnb;

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

GeneratorSpec spec(std::initializer_list<std::pair<double, const char*>> terms) {
  std::vector<GeneratorTerm> out;
  for (const auto& [a, w] : terms) out.push_back(GeneratorTerm{a, PauliString::parse(w)});
  return GeneratorSpec(out);
}

// sum_{j>k} |a_j a_k| ||[B_j, B_k]||_HS from dense matrices.
double dense_commutator_weight(const GeneratorSpec& s) {
  double w = 0.0;
  const auto& t = s.terms();
  for (std::size_t j = 0; j < t.size(); ++j)
    for (std::size_t k = 0; k < j; ++k) {
      const auto A = oracle::dense(t[j].pauli.str());
      const auto B = oracle::dense(t[k].pauli.str());
      w += std::abs(t[j].coeff * t[k].coeff) * (A * B - B * A).norm();
    }
  return w;
}

}  // namespace

TEST(Generator, Validation) {
  EXPECT_THROW(GeneratorSpec({}), DomainError);
  EXPECT_THROW(spec({{0.0, "XX"}}), DomainError);
  EXPECT_THROW(spec({{1.0, "II"}}), DomainError);
  EXPECT_THROW(spec({{1.0, "XX"}, {2.0, "XX"}}), DomainError);
  EXPECT_THROW(spec({{1.0, "XX"}, {2.0, "X"}}), DimensionError);
  EXPECT_THROW(spec({{std::nan(""), "XX"}}), DomainError);
  auto p = PauliString::parse("XZ");
  p.set_phase(2);
  EXPECT_THROW(GeneratorSpec({GeneratorTerm{1.0, p}}), DomainError);
  const auto s = spec({{0.5, "XX"}, {-2.0, "ZI"}});
  EXPECT_DOUBLE_EQ(s.norm_inf(), 2.0);
  EXPECT_DOUBLE_EQ(s.norm_1(), 2.5);
}

TEST(Bounds, TauFormula) {
  EXPECT_NEAR(tau_bound(kPi / 4, 1, 1.0), 3 * kPi / 4, 1e-15);
  EXPECT_NEAR(tau_bound(-0.5, 0, 2.0), 0.25, 1e-15);
  EXPECT_NEAR(tau_bound(1.0, 6, 1.0), 3 * kPi + 1, 1e-14);
  EXPECT_THROW(tau_bound(1.0, 1, 0.0), DomainError);
}

TEST(Bounds, CommutatorWeightMatchesDenseNorms) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t l = 1 + trial % 5;
    if (l > (std::size_t{1} << (2 * n)) - 1) continue;
    const auto s = test_util::random_spec(rng, n, l);
    EXPECT_NEAR(commutator_weight(s), dense_commutator_weight(s), 1e-10);
  }
}

TEST(Bounds, TrotterErrorScalesAsOneOverM) {
  const auto s = spec({{0.7, "XZI"}, {-0.4, "ZZZ"}, {0.2, "IYX"}});
  const double e1 = trotter_error_bound(s, 1);
  EXPECT_GT(e1, 0.0);
  for (std::size_t m : {2u, 3u, 7u, 64u}) {
    EXPECT_NEAR(trotter_error_bound(s, m) * static_cast<double>(m), e1, 1e-14);
  }
  EXPECT_EQ(trotter_error_bound(spec({{1.0, "ZZ"}, {2.0, "XX"}}), 1), 0.0);
  EXPECT_THROW(trotter_error_bound(s, 0), DomainError);
  // Two anticommuting unit terms on one qubit: W = 2 sqrt(2), bound sqrt(2)/(2m).
  EXPECT_NEAR(trotter_error_bound(spec({{1.0, "X"}, {1.0, "Y"}}), 4), std::sqrt(2.0) / 8, 1e-15);
}

TEST(Bounds, MinTrotterStepsIsMinimal) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = test_util::random_spec(rng, 3, 2 + trial % 3);
    for (double eps : {0.3, 0.05, 0.01}) {
      const auto m = min_trotter_steps(s, eps);
      EXPECT_GE(m, 1u);
      EXPECT_LE(trotter_error_bound(s, m), eps);
      if (m > 1) {
        EXPECT_GT(trotter_error_bound(s, m - 1), eps);
      }
    }
  }
  EXPECT_THROW(min_trotter_steps(spec({{1.0, "X"}}), 0.0), DomainError);
  EXPECT_THROW(min_trotter_steps(spec({{1.0, "X"}}), -1.0), DomainError);
}

TEST(Bounds, ReportSingleTermOnPath) {
  const auto net = test_util::network(3, test_util::path_pairs(3));
  const auto r = bound_report(spec({{kPi / 4, "ZZZ"}}), net, 0.01, true);
  ASSERT_EQ(r.per_term.size(), 1u);
  EXPECT_NEAR(r.per_term[0], 3 * kPi / 4, 1e-15);
  EXPECT_EQ(r.depths, (std::vector<std::size_t>{1}));
  EXPECT_FALSE(r.eq1);
  EXPECT_FALSE(r.eq8_paper);
  EXPECT_FALSE(r.eq8_usable);
  EXPECT_EQ(r.m_steps, 1u);
  EXPECT_EQ(r.K, 0.0);
  EXPECT_TRUE(r.exact_depths);
}

TEST(Bounds, ReportHandComputedTwoTermCase) {
  const auto s = spec({{0.5, "XZZ"}, {-0.25, "ZZI"}});
  ASSERT_FALSE(commutes(s.terms()[0].pauli, s.terms()[1].pauli));
  const auto net = test_util::network(3, test_util::path_pairs(3), 2.0);
  const double eps = 0.05;
  const auto r = bound_report(s, net, eps, false);
  const double W = 0.125 * 2 * std::sqrt(8.0);
  const double K = W / std::sqrt(8.0);
  EXPECT_NEAR(r.K, K, 1e-15);
  const std::size_t m = static_cast<std::size_t>(std::ceil(W / (2 * eps * 4.0)));
  EXPECT_EQ(r.m_steps, m);
  EXPECT_EQ(r.depths, (std::vector<std::size_t>{2, 2}));
  EXPECT_NEAR(r.per_term[0], (kPi + 0.5) / 2.0, 1e-15);
  EXPECT_NEAR(*r.eq8_paper, (0.75 + kPi * K * 4 / (4 * kSqrt2 * eps)) / 2.0, 1e-12);
  EXPECT_NEAR(*r.eq8_usable, (0.75 + static_cast<double>(m) * kPi / 2 * 4) / 2.0, 1e-12);
  EXPECT_NEAR(*r.eq1, 2.0 / 2.0 * (0.5 + kPi * 2 * 1 * 1 * 0.25 / (2 * kSqrt2 * eps)),
              1e-12);
}

TEST(Bounds, LocalTermsCostNothing) {
  const auto net = test_util::network(3, test_util::path_pairs(3));
  const auto r = bound_report(spec({{0.3, "IXI"}, {0.2, "ZZZ"}}), net, 0.1, true);
  EXPECT_EQ(r.depths, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.per_term[0], 0.0);
  // The local term rides along for free in every Trotter step.
  EXPECT_NEAR(*r.eq8_usable, 0.2 + static_cast<double>(r.m_steps) * kPi / 2, 1e-12);
}

TEST(Bounds, ReportErrors) {
  const auto net = test_util::network(3, test_util::path_pairs(3));
  EXPECT_THROW(bound_report(spec({{1.0, "ZZZ"}}), net, 0.0, true), DomainError);
  EXPECT_THROW(bound_report(spec({{1.0, "ZZ"}}), net, 0.1, true), DimensionError);
}

TEST(Bounds, StarReportUsesReducedControlCost) {
  const auto star = star_graph(4, 1.0);
  const auto r = bound_report(spec({{0.5, "ZZZZ"}}), star, 0.1, false);
  EXPECT_NEAR(r.per_term[0], star_tau_bound(4, 1.0, 0.5), 1e-12);
  const auto r2 = bound_report(spec({{0.5, "ZZZZ"}, {0.25, "XIIX"}}), star, 0.1, false);
  EXPECT_FALSE(r2.eq1);
  EXPECT_FALSE(r2.eq8_paper);
  ASSERT_TRUE(r2.eq8_usable);
}

TEST(Bounds, InequalityChainOnRandomSpecs) {
  std::mt19937_64 rng(99);
  std::size_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t max_l = std::min<std::size_t>(8, (std::size_t{1} << (2 * n)) - 1);
    const std::size_t l = 1 + trial % max_l;
    const auto s = test_util::random_spec(rng, n, l);
    const double lhs = commutator_weight(s);
    const double rhs = static_cast<double>(l * (l - 1)) * s.norm_inf() * s.norm_inf() *
                       std::sqrt(std::ldexp(1.0, static_cast<int>(n)));
    if (lhs > rhs * (1 + 1e-12)) ++violations;
  }
  EXPECT_EQ(violations, 0u);
}

// The closed form dominates the continuous-m Trotter bound under worst-case
// depths: K <= l(l-1)||a||^2, sum D = 2l(n-2) and ||a||_1 <= l ||a||_inf.
TEST(Bounds, Eq1DominatesContinuousEq8) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 3;
    const auto net = test_util::random_connected(rng, n);
    const auto s = test_util::random_spec(rng, n, 2 + trial % 5);
    const auto r = bound_report(s, net, 0.05, false);
    ASSERT_TRUE(r.eq1 && r.eq8_paper);
    EXPECT_LE(*r.eq8_paper, *r.eq1 * (1 + 1e-12));
    const auto exact = bound_report(s, net, 0.05, true);
    EXPECT_LE(*exact.eq8_paper, *r.eq8_paper * (1 + 1e-12));
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_LE(exact.depths[i], r.depths[i]);
  }
}

// With integer m the usable bound exceeds the continuous one by at most one
// step's worth of conjugation time.
TEST(Bounds, Eq8UsableWithinOneStepOfContinuous) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const auto net = test_util::network(4, test_util::path_pairs(4));
    const auto s = test_util::random_spec(rng, 4, 2 + trial % 4, 1.0, 2);
    const auto r = bound_report(s, net, 0.05, true);
    double sum_d = 0;
    for (auto d : r.depths) sum_d += static_cast<double>(d);
    EXPECT_LE(*r.eq8_usable, *r.eq8_paper + kPi / 2 * sum_d / r.J + 1e-9);
  }
}

TEST(Bounds, CnotAndTwoQubit) {
  const auto path = test_util::network(4, test_util::path_pairs(4));
  EXPECT_NEAR(cnot_bound(path, 0, 1), kPi / 4, 1e-15);
  EXPECT_NEAR(cnot_bound(path, 0, 3), kPi * (2 + 0.25), 1e-14);
  EXPECT_NEAR(two_qubit_bound(path, 0, 1), 3 * kPi / 4, 1e-15);
  EXPECT_THROW(cnot_bound(path, 2, 2), DomainError);
  const auto slow = test_util::network(2, {{0, 1}}, 0.5);
  EXPECT_NEAR(cnot_bound(slow, 1, 0), kPi / 2, 1e-15);
}

TEST(Bounds, ChainAndExactThreeSpin) {
  EXPECT_NEAR(nbody_chain_bound(3, 1.0, kPi / 2), 1.5, 1e-12);
  EXPECT_NEAR(exact_three_spin(1.0, 1.0), std::sqrt(3.0) / 2, 1e-12);
  EXPECT_NEAR(nbody_chain_bound(3, 1.0, kPi / 2) / exact_three_spin(1.0, 1.0),
              std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(nbody_chain_bound(4, 1.0, kPi / 2), 2.5, 1e-12);
  EXPECT_NEAR(exact_three_spin(2.0, 1.0), 1.0, 1e-15);
  EXPECT_EQ(exact_three_spin(0.0, 1.0), 0.0);
  EXPECT_EQ(exact_three_spin(4.0, 1.0), 0.0);
  EXPECT_THROW(exact_three_spin(4.5, 1.0), DomainError);
  EXPECT_THROW(nbody_chain_bound(2, 1.0, 1.0), DomainError);
  // The bound never undercuts the exact optimum.
  for (double k = 0.0; k <= 4.0; k += 0.05) {
    EXPECT_GE(nbody_chain_bound(3, k, kPi / 2), exact_three_spin(k, 1.0) - 1e-12);
  }
}

TEST(Bounds, ConcatenatedBlocks) {
  const auto one = concat_bounds(1.0, 3, spec({{0.5, "ZZZ"}}), 0.1);
  EXPECT_DOUBLE_EQ(one.tau, 21.0);
  EXPECT_FALSE(one.T);
  const auto two = concat_bounds(2.0, 2, spec({{0.5, "ZZ"}, {1.0, "XX"}}), 0.1);
  EXPECT_DOUBLE_EQ(two.tau, 26.0);
  ASSERT_TRUE(two.T);
  EXPECT_NEAR(*two.T, 26.0 * 8 * 1 * 1.0 / (2 * kSqrt2 * 0.1), 1e-9);
  EXPECT_THROW(concat_bounds(0.0, 2, spec({{1.0, "ZZ"}}), 0.1), DomainError);
}

TEST(Bounds, StarTau) {
  EXPECT_NEAR(star_tau_bound(3, 1.0, 0.0), kPi / 2 * 13, 1e-12);
  EXPECT_NEAR(star_tau_bound(5, 2.0, 1.0), (kPi / 2 * 37 + 1) / 2, 1e-12);
  EXPECT_THROW(star_tau_bound(2, 1.0, 0.0), DomainError);
}

TEST(Rpoly, PolynomialCase) {
  for (std::size_t n : {3u, 4u, 6u}) {
    std::vector<GeneratorTerm> terms;
    for (std::size_t k = 0; k < n; ++k) {
      terms.push_back(GeneratorTerm{k % 2 ? -1.0 : 1.0, PauliString::single(n, k, Pauli::Z)});
    }
    const auto r = rpoly_membership(GeneratorSpec(terms), PolyBudget{1.0, 1.0});
    EXPECT_TRUE(r.member);
    EXPECT_EQ(r.scaling, ScalingClass::kPolynomial);
    ASSERT_TRUE(r.exponent);
    EXPECT_NEAR(*r.exponent, 4.0, 1e-12);
    EXPECT_EQ(r.big_o, "O(n^4)");
  }
}

TEST(Rpoly, FullBasisIsExponential) {
  for (std::size_t n : {2u, 3u}) {
    std::vector<GeneratorTerm> terms;
    for (std::size_t code = 1; code < (std::size_t{1} << (2 * n)); ++code) {
      PauliString p(n);
      for (std::size_t q = 0; q < n; ++q) p.set(q, static_cast<Pauli>((code >> (2 * q)) & 3));
      terms.push_back(GeneratorTerm{0.5, p});
    }
    const auto r = rpoly_membership(GeneratorSpec(terms), PolyBudget{});
    EXPECT_FALSE(r.member);
    EXPECT_TRUE(r.full_basis);
    EXPECT_EQ(r.scaling, ScalingClass::kExponential);
    EXPECT_EQ(r.big_o, "O(n 2^(6n))");
  }
}

TEST(Rpoly, SingleTermAndBudgetOverflow) {
  const auto single = rpoly_membership(spec({{1.0, "ZZZZ"}}), PolyBudget{});
  EXPECT_EQ(single.scaling, ScalingClass::kLinear);
  EXPECT_EQ(single.big_o, "O(n^1)");
  const auto big = rpoly_membership(spec({{100.0, "ZZZZ"}}), PolyBudget{1.0, 1.0});
  EXPECT_FALSE(big.member);
  EXPECT_EQ(big.scaling, ScalingClass::kOutsideBudget);
  EXPECT_DOUBLE_EQ(eq1_scaling_exponent(1.0, 0.0), 4.0);
  EXPECT_DOUBLE_EQ(eq1_scaling_exponent(2.0, 1.0), 9.0);
}
