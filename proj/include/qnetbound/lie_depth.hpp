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

// Nested-commutator depth of Pauli strings over a network's two-body
// generating set.
//
// With free local rotations every label on a qubit is reachable at no cost,
// so the depth of a string only depends on its support. One commutator with
// a two-body generator on edge (u, w) can either add w to the support (u
// already inside, w outside) or remove w (both inside). The search therefore
// runs over support bitmasks: the states are the nonempty vertex subsets,
// the sources are the edges themselves (depth 0), and the moves are those
// grow/shrink steps.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "qnetbound/network.hpp"
#include "qnetbound/pauli.hpp"

namespace qnb {

/// Exhaustive subset search is used up to this many qubits.
inline constexpr std::size_t kMaxBfsQubits = 20;

enum class StepKind { kGrow = 0, kShrink = 1 };

struct DepthStep {
  StepKind kind = StepKind::kGrow;
  std::size_t u = 0;       ///< Edge endpoint, u < v.
  std::size_t v = 0;
  std::size_t vertex = 0;  ///< The endpoint added or removed.

  friend auto operator<=>(const DepthStep&, const DepthStep&) = default;
};

struct DepthResult {
  std::vector<std::size_t> target_support;
  std::pair<std::size_t, std::size_t> start_edge{0, 0};
  std::vector<DepthStep> witness;
  std::size_t depth = 0;
  /// False when the support search was skipped (n above kMaxBfsQubits) and
  /// the witness is the grow-then-shrink spanning tree route instead.
  bool exact = true;
};

/// Depth of the support of `b`, which must have weight >= 2.
DepthResult depth(const QubitNetwork& net, const PauliString& b);
DepthResult depth_of_support(const QubitNetwork& net,
                             const std::vector<std::size_t>& support);

/// 2(n - 2), clamped at 0; n >= 2.
std::size_t depth_upper_bound(std::size_t n);

/// Replays a witness from its start edge and returns the final support
/// mask. Throws DomainError on any invalid step.
std::uint64_t replay_witness(const QubitNetwork& net,
                             std::pair<std::size_t, std::size_t> start_edge,
                             const std::vector<DepthStep>& witness);

struct DepthTable {
  std::size_t n = 0;
  /// Exact depth indexed by support mask; entry 0 (empty set) is unused.
  std::vector<std::uint8_t> depth_by_mask;
  /// Maximum depth per support size, sizes >= 2.
  std::map<std::size_t, std::size_t> max_by_weight;
  /// Number of supports of each size.
  std::map<std::size_t, std::size_t> count_by_weight;
  std::size_t overall_max = 0;
};

DepthTable max_depth_table(const QubitNetwork& net);

}  // namespace qnb
