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
#include <vector>

#include "qnetbound/bounds.hpp"
#include "qnetbound/lie_depth.hpp"
#include "qnetbound/network.hpp"
#include "qnetbound/pauli.hpp"
#include "qnetbound/schedule.hpp"

namespace qnb {

/// Zero-time rotation R on qubit q with R^dagger sigma_from R = sign *
/// sigma_to. Empty when no rotation is needed (from == to, sign = +1).
std::optional<LocalRotation> clifford_map(std::size_t q, Pauli from, Pauli to,
                                          int sign);

/// Schedule whose unitary is exp(sign * i * k * sigma_alpha^(i) sigma_beta^(j)):
/// local rotations onto the edge's strongest native term, the timed native
/// evolution, and the inverse rotations. k = 0 gives an empty schedule.
Schedule select_two_body(const QubitNetwork& net, std::size_t i, std::size_t j,
                         Pauli alpha, Pauli beta, int sign, double k);

/// Symbolic conjugation ladder for a weight >= 2 string: strings[0] lives on
/// the start edge, strings[t] = i * strings[t-1] * conjugators[t-1], and
/// strings.back() == target exactly (phase included).
struct ConjugationLadder {
  DepthResult depth;
  std::vector<PauliString> strings;
  std::vector<PauliString> conjugators;
};

ConjugationLadder build_ladder(const QubitNetwork& net, const PauliString& target);

/// Schedule for exp(i a B). Weight-1 strings become one local rotation;
/// longer strings a core evolution of angle |a| wrapped in one pair of
/// pi/4 conjugators per ladder step. Requires full local control.
Schedule synth_pauli_term(const QubitNetwork& net, double a, const PauliString& b);

struct SynthesisResult {
  Schedule schedule;
  std::size_t m = 1;
};

/// m first-order Trotter repetitions of the per-term schedules at a_i / m,
/// in input order, with m = min_trotter_steps(spec, epsilon).
SynthesisResult synth_generator(const QubitNetwork& net, const GeneratorSpec& spec,
                                double epsilon);

}  // namespace qnb
