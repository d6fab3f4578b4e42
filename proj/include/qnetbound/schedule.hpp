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

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "qnetbound/pauli.hpp"

namespace qnb {

/// Instantaneous exp(-i angle/2 axis.sigma) on one qubit.
struct LocalRotation {
  std::size_t qubit = 0;
  std::array<double, 3> axis{0.0, 0.0, 1.0};
  double angle = 0.0;

  double duration() const noexcept { return 0.0; }
};

/// exp(sign * i * angle * sigma_alpha^(u) sigma_beta^(v)) realized by letting
/// the selected native coupling g_used act for angle / |g_used|.
struct TwoBodyEvolution {
  std::size_t u = 0;  ///< u < v.
  std::size_t v = 1;
  Pauli alpha = Pauli::Z;
  Pauli beta = Pauli::Z;
  int sign = 1;  ///< +1 or -1.
  double angle = 0.0;
  double g_used = 1.0;

  double duration() const;
};

using Primitive = std::variant<LocalRotation, TwoBodyEvolution>;

double duration_of(const Primitive& p);

/// Time-ordered control primitives: the first entry acts first.
class Schedule {
 public:
  explicit Schedule(std::size_t n) : n_(n) {}

  std::size_t size() const noexcept { return n_; }
  const std::vector<Primitive>& primitives() const noexcept { return primitives_; }
  /// Running sum of primitive durations in append order.
  double total_duration() const noexcept { return total_duration_; }

  void append(const Primitive& p);
  void append(const Schedule& s);

 private:
  std::size_t n_;
  std::vector<Primitive> primitives_;
  double total_duration_ = 0.0;
};

}  // namespace qnb
