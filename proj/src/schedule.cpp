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

#include "qnetbound/schedule.hpp"

#include <cmath>

#include "qnetbound/errors.hpp"

namespace qnb {

double TwoBodyEvolution::duration() const { return angle / std::abs(g_used); }

double duration_of(const Primitive& p) {
  return std::visit([](const auto& x) { return x.duration(); }, p);
}

void Schedule::append(const Primitive& p) {
  std::visit(
      [this](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LocalRotation>) {
          if (x.qubit >= n_) throw DomainError("rotation on a missing qubit");
        } else {
          if (x.u >= x.v || x.v >= n_) throw DomainError("evolution on a bad edge");
          if (x.angle < 0.0) throw DomainError("evolution angle must be >= 0");
          if (x.sign != 1 && x.sign != -1) throw DomainError("sign must be +1 or -1");
          if (x.g_used == 0.0) throw DomainError("g_used must be nonzero");
        }
      },
      p);
  primitives_.push_back(p);
  total_duration_ += duration_of(p);
}

void Schedule::append(const Schedule& s) {
  if (s.n_ != n_) throw DimensionError("schedules act on different qubit counts");
  for (const auto& p : s.primitives_) append(p);
}

}  // namespace qnb
