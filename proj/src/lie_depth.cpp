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

#include "qnetbound/lie_depth.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "qnetbound/errors.hpp"

namespace qnb {

namespace {

using Mask = std::uint32_t;
constexpr std::uint8_t kUnseen = 0xff;

struct Move {
  DepthStep step;
  Mask next;
};

// All grow/shrink moves out of `s`, in lexicographic (kind, edge, vertex)
// order. Edges in a QubitNetwork are already sorted.
template <typename F>
void for_each_move(const QubitNetwork& net, Mask s, F&& f) {
  for (const auto& e : net.edges()) {
    const Mask mu = Mask{1} << e.u;
    const Mask mv = Mask{1} << e.v;
    const bool in_u = s & mu;
    const bool in_v = s & mv;
    if (in_u && !in_v) {
      if (!f(Move{{StepKind::kGrow, e.u, e.v, e.v}, s | mv})) return;
    } else if (!in_u && in_v) {
      if (!f(Move{{StepKind::kGrow, e.u, e.v, e.u}, s | mu})) return;
    }
  }
  for (const auto& e : net.edges()) {
    const Mask mu = Mask{1} << e.u;
    const Mask mv = Mask{1} << e.v;
    if ((s & mu) && (s & mv)) {
      if (!f(Move{{StepKind::kShrink, e.u, e.v, e.u}, s & ~mu})) return;
      if (!f(Move{{StepKind::kShrink, e.u, e.v, e.v}, s & ~mv})) return;
    }
  }
}

Mask edge_mask(const Edge& e) { return (Mask{1} << e.u) | (Mask{1} << e.v); }

std::vector<std::size_t> mask_to_vertices(std::uint64_t m) {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; m != 0; ++q, m >>= 1)
    if (m & 1) out.push_back(q);
  return out;
}

void check_target(const QubitNetwork& net,
                  const std::vector<std::size_t>& support) {
  if (support.size() < 2) {
    throw DomainError("depth needs a support of at least two qubits (got " +
                      std::to_string(support.size()) + ")");
  }
  for (auto q : support) {
    if (q >= net.size()) throw DimensionError("support qubit out of range");
  }
}

DepthResult exact_depth(const QubitNetwork& net, Mask target) {
  const std::size_t n = net.size();
  std::vector<std::uint8_t> dist(std::size_t{1} << n, kUnseen);
  std::vector<Mask> level{target};
  dist[target] = 0;
  std::uint8_t d = 0;
  auto touches_edge = [&](std::uint8_t at) {
    for (const auto& e : net.edges())
      if (dist[edge_mask(e)] == at) return true;
    return false;
  };
  while (!touches_edge(d)) {
    std::vector<Mask> next;
    for (Mask s : level) {
      for_each_move(net, s, [&](const Move& m) {
        if (dist[m.next] == kUnseen) {
          dist[m.next] = static_cast<std::uint8_t>(d + 1);
          next.push_back(m.next);
        }
        return true;
      });
    }
    if (next.empty()) throw DomainError("target support is unreachable");
    level = std::move(next);
    ++d;
  }

  DepthResult r;
  r.target_support = mask_to_vertices(target);
  r.depth = d;
  r.exact = true;
  Mask cur = 0;
  for (const auto& e : net.edges()) {
    if (dist[edge_mask(e)] == d) {
      r.start_edge = {e.u, e.v};
      cur = edge_mask(e);
      break;
    }
  }
  for (std::uint8_t left = d; left > 0; --left) {
    bool advanced = false;
    for_each_move(net, cur, [&](const Move& m) {
      if (dist[m.next] == left - 1) {
        r.witness.push_back(m.step);
        cur = m.next;
        advanced = true;
        return false;
      }
      return true;
    });
    if (!advanced) throw DomainError("internal: broken depth witness");
  }
  return r;
}

// Grow along a breadth-first spanning tree rooted at the smallest target
// vertex, then remove the non-target vertices deepest first.
DepthResult spanning_tree_route(const QubitNetwork& net,
                                const std::vector<std::size_t>& support) {
  const std::size_t n = net.size();
  const std::size_t root = support.front();
  std::vector<std::size_t> order{root};
  std::vector<std::size_t> parent(n, n);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (auto w : net.neighbors(order[k])) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[k];
        order.push_back(w);
      }
    }
  }
  DepthResult r;
  r.target_support = support;
  r.exact = false;
  r.start_edge = std::minmax(root, order[1]);
  for (std::size_t k = 2; k < order.size(); ++k) {
    const auto w = order[k];
    const auto [u, v] = std::minmax(w, parent[w]);
    r.witness.push_back({StepKind::kGrow, u, v, w});
  }
  std::vector<bool> keep(n, false);
  for (auto q : support) keep[q] = true;
  for (std::size_t k = order.size(); k-- > 1;) {
    const auto w = order[k];
    if (keep[w]) continue;
    const auto [u, v] = std::minmax(w, parent[w]);
    r.witness.push_back({StepKind::kShrink, u, v, w});
  }
  r.depth = r.witness.size();
  return r;
}

}  // namespace

std::size_t depth_upper_bound(std::size_t n) {
  if (n < 2) throw DomainError("depth bound needs n >= 2");
  return 2 * (n - 2);
}

DepthResult depth_of_support(const QubitNetwork& net,
                             const std::vector<std::size_t>& support_in) {
  std::vector<std::size_t> support = support_in;
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  check_target(net, support);
  if (net.size() > kMaxBfsQubits) return spanning_tree_route(net, support);
  Mask target = 0;
  for (auto q : support) target |= Mask{1} << q;
  return exact_depth(net, target);
}

DepthResult depth(const QubitNetwork& net, const PauliString& b) {
  if (b.size() != net.size()) {
    throw DimensionError("Pauli string has " + std::to_string(b.size()) +
                         " qubits, network has " + std::to_string(net.size()));
  }
  return depth_of_support(net, b.support());
}

std::uint64_t replay_witness(const QubitNetwork& net,
                             std::pair<std::size_t, std::size_t> start_edge,
                             const std::vector<DepthStep>& witness) {
  if (!net.has_edge(start_edge.first, start_edge.second)) {
    throw DomainError("witness starts from a non-edge");
  }
  std::vector<bool> in(net.size(), false);
  in[start_edge.first] = in[start_edge.second] = true;
  for (const auto& s : witness) {
    if (s.u >= s.v || !net.has_edge(s.u, s.v)) {
      throw DomainError("witness step uses a non-edge");
    }
    if (s.vertex != s.u && s.vertex != s.v) {
      throw DomainError("witness step changes a vertex off its edge");
    }
    const std::size_t partner = s.vertex == s.u ? s.v : s.u;
    if (!in[partner]) throw DomainError("witness step edge leaves the support");
    if (s.kind == StepKind::kGrow) {
      if (in[s.vertex]) throw DomainError("grow step on a present vertex");
      in[s.vertex] = true;
    } else {
      if (!in[s.vertex]) throw DomainError("shrink step on an absent vertex");
      in[s.vertex] = false;
    }
  }
  std::uint64_t mask = 0;
  for (std::size_t q = 0; q < net.size(); ++q)
    if (in[q]) mask |= std::uint64_t{1} << q;
  return mask;
}

DepthTable max_depth_table(const QubitNetwork& net) {
  const std::size_t n = net.size();
  if (n > kMaxBfsQubits) {
    throw ResourceError("depth table needs n <= " + std::to_string(kMaxBfsQubits));
  }
  DepthTable t;
  t.n = n;
  t.depth_by_mask.assign(std::size_t{1} << n, kUnseen);
  std::queue<Mask> frontier;
  for (const auto& e : net.edges()) {
    t.depth_by_mask[edge_mask(e)] = 0;
    frontier.push(edge_mask(e));
  }
  while (!frontier.empty()) {
    const Mask s = frontier.front();
    frontier.pop();
    const auto d = t.depth_by_mask[s];
    for_each_move(net, s, [&](const Move& m) {
      if (t.depth_by_mask[m.next] == kUnseen) {
        t.depth_by_mask[m.next] = static_cast<std::uint8_t>(d + 1);
        frontier.push(m.next);
      }
      return true;
    });
  }
  for (Mask s = 1; s < t.depth_by_mask.size(); ++s) {
    const std::size_t w = std::popcount(s);
    if (w < 2) continue;
    const std::size_t d = t.depth_by_mask[s];
    auto& mx = t.max_by_weight[w];
    mx = std::max(mx, d);
    ++t.count_by_weight[w];
    t.overall_max = std::max(t.overall_max, d);
  }
  return t;
}

}  // namespace qnb
