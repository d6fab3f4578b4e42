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

#include "qnetbound/network.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "qnetbound/errors.hpp"

namespace qnb {

std::string to_string(ControlModel m) {
  return m == ControlModel::kFullLocal ? "full_local" : "star_reduced";
}

ControlModel control_model_from_string(const std::string& s) {
  if (s == "full_local") return ControlModel::kFullLocal;
  if (s == "star_reduced") return ControlModel::kStarReduced;
  throw ParseError("unknown control_model '" + s + "'");
}

std::string to_string(PresetKind k) {
  switch (k) {
    case PresetKind::kIsingChain: return "ising_chain";
    case PresetKind::kHeisenbergChain: return "heisenberg_chain";
    case PresetKind::kStar: return "star";
  }
  return "?";
}

PresetKind preset_kind_from_string(const std::string& s) {
  if (s == "ising_chain") return PresetKind::kIsingChain;
  if (s == "heisenberg_chain") return PresetKind::kHeisenbergChain;
  if (s == "star") return PresetKind::kStar;
  throw ParseError("unknown preset '" + s + "'");
}

std::size_t axis_index(Pauli p) {
  switch (p) {
    case Pauli::X: return 0;
    case Pauli::Y: return 1;
    case Pauli::Z: return 2;
    default: throw DomainError("identity has no axis index");
  }
}

QubitNetwork::QubitNetwork(std::size_t n, std::vector<Edge> edges,
                           std::vector<Splitting> omega,
                           ControlModel control_model)
    : n_(n),
      edges_(std::move(edges)),
      omega_(std::move(omega)),
      control_model_(control_model),
      adjacency_(n) {
  if (n == 0) throw DomainError("network needs at least one qubit");
  if (omega_.empty()) omega_.assign(n, Splitting{0.0, 0.0, 0.0});
  if (omega_.size() != n) {
    throw DomainError("omega has " + std::to_string(omega_.size()) +
                      " entries for " + std::to_string(n) + " qubits");
  }
  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n) throw DomainError("edge endpoint out of range");
    if (e.u == e.v) throw DomainError("self loop on qubit " + std::to_string(e.u));
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      CouplingTensor t{};
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) t[a][b] = e.g[b][a];
      e.g = t;
    }
    bool nonzero = false;
    for (const auto& row : e.g)
      for (double x : row) nonzero = nonzero || x != 0.0;
    if (!nonzero) {
      throw DomainError("edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ") has no nonzero coupling");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw DomainError("duplicate edge (" + std::to_string(edges_[k].u) + "," +
                        std::to_string(edges_[k].v) + ")");
    }
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());

  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto q = stack.back();
    stack.pop_back();
    for (auto w : adjacency_[q]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw DomainError("network is not connected");
}

QubitNetwork QubitNetwork::from_pairs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
    const CouplingTensor& g, ControlModel control_model) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [i, j] : pairs) edges.push_back(Edge{i, j, g});
  return QubitNetwork(n, std::move(edges), {}, control_model);
}

bool QubitNetwork::has_edge(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) return false;
  const auto& a = adjacency_[i];
  return std::binary_search(a.begin(), a.end(), j);
}

const Edge& QubitNetwork::edge(std::size_t i, std::size_t j) const {
  const auto key = std::minmax(i, j);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), key, [](const Edge& e, const auto& k) {
        return std::pair(e.u, e.v) < std::pair(k.first, k.second);
      });
  if (it == edges_.end() || it->u != key.first || it->v != key.second) {
    throw DomainError("unknown edge (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
  }
  return *it;
}

const std::vector<std::size_t>& QubitNetwork::neighbors(std::size_t q) const {
  if (q >= n_) throw DomainError("qubit index out of range");
  return adjacency_[q];
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> chain_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t k = 0; k + 1 < n; ++k) p.emplace_back(k, k + 1);
  return p;
}

void require_positive(double J) {
  if (!(J > 0.0)) throw DomainError("preset coupling J must be positive");
}

}  // namespace

QubitNetwork ising_chain(std::size_t n, double J) {
  require_positive(J);
  if (n < 2) throw DomainError("chain needs at least two qubits");
  CouplingTensor g{};
  g[2][2] = std::numbers::pi / 2 * J;
  return QubitNetwork::from_pairs(n, chain_pairs(n), g);
}

QubitNetwork heisenberg_chain(std::size_t n, double J) {
  require_positive(J);
  if (n < 2) throw DomainError("chain needs at least two qubits");
  CouplingTensor g{};
  g[0][0] = std::numbers::pi / 2 * J;
  g[1][1] = std::numbers::pi / 2 * J;
  return QubitNetwork::from_pairs(n, chain_pairs(n), g);
}

QubitNetwork star_graph(std::size_t n, double J) {
  require_positive(J);
  if (n < 2) throw DomainError("star needs at least two qubits");
  CouplingTensor g{};
  g[0][0] = J;
  g[1][1] = J;
  std::vector<Edge> edges;
  std::vector<Splitting> omega(n, Splitting{0.0, 0.0, 0.0});
  for (std::size_t k = 1; k < n; ++k) {
    edges.push_back(Edge{0, k, g});
    omega[k] = Splitting{0.0, J, 0.0};
  }
  return QubitNetwork(n, std::move(edges), std::move(omega),
                      ControlModel::kStarReduced);
}

QubitNetwork NetworkPreset::expand() const {
  switch (kind) {
    case PresetKind::kIsingChain: return ising_chain(n, J);
    case PresetKind::kHeisenbergChain: return heisenberg_chain(n, J);
    case PresetKind::kStar: return star_graph(n, J);
  }
  throw DomainError("unknown preset kind");
}

double j_paper(const QubitNetwork& net) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : net.edges())
    for (const auto& row : e.g)
      for (double x : row)
        if (x != 0.0) best = std::min(best, std::abs(x));
  return best;
}

NativeTerm best_native_term(const Edge& e) {
  NativeTerm t;
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      if (std::abs(e.g[a][b]) > std::abs(t.g)) {
        t = NativeTerm{kAxes[a], kAxes[b], e.g[a][b]};
      }
    }
  }
  return t;
}

double edge_best_coupling(const QubitNetwork& net, std::size_t i, std::size_t j) {
  return std::abs(best_native_term(net.edge(i, j)).g);
}

std::size_t geodesic_distance(const QubitNetwork& net, std::size_t i,
                              std::size_t j) {
  const std::size_t n = net.size();
  if (i >= n || j >= n) throw DomainError("qubit index out of range");
  std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
  std::queue<std::size_t> frontier;
  dist[i] = 0;
  frontier.push(i);
  while (!frontier.empty()) {
    const auto q = frontier.front();
    frontier.pop();
    if (q == j) return dist[q];
    for (auto w : net.neighbors(q)) {
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[q] + 1;
        frontier.push(w);
      }
    }
  }
  throw DomainError("qubits are not connected");
}

}  // namespace qnb
