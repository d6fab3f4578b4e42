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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnetbound/pauli.hpp"

namespace qnb {

enum class ControlModel {
  kFullLocal,    ///< sigma_x and sigma_y on every qubit.
  kStarReduced,  ///< sigma_x, sigma_y on the center, sigma_z on satellites.
};

std::string to_string(ControlModel m);
ControlModel control_model_from_string(const std::string& s);

/// g[a][b] is the coefficient of sigma_a^(u) sigma_b^(v), axes ordered x,y,z.
using CouplingTensor = std::array<std::array<double, 3>, 3>;
using Splitting = std::array<double, 3>;

/// Axis index 0/1/2 for X/Y/Z.
std::size_t axis_index(Pauli p);

/// Undirected coupling; always stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  CouplingTensor g{};
};

/// The strongest native term on an edge: sigma_a^(u) sigma_b^(v) with
/// (signed) coefficient g.
struct NativeTerm {
  Pauli a = Pauli::I;
  Pauli b = Pauli::I;
  double g = 0.0;
};

/// Coupling graph with per-edge coupling tensors and per-qubit splittings.
/// Construction validates: connected, no self loops, no duplicate edges,
/// and at least one nonzero coupling per edge.
class QubitNetwork {
 public:
  QubitNetwork(std::size_t n, std::vector<Edge> edges,
               std::vector<Splitting> omega = {},
               ControlModel control_model = ControlModel::kFullLocal);

  /// Every pair in `pairs` gets the same coupling tensor.
  static QubitNetwork from_pairs(
      std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
      const CouplingTensor& g,
      ControlModel control_model = ControlModel::kFullLocal);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Splitting>& omega() const noexcept { return omega_; }
  ControlModel control_model() const noexcept { return control_model_; }

  bool has_edge(std::size_t i, std::size_t j) const;
  /// Throws DomainError for an unknown edge.
  const Edge& edge(std::size_t i, std::size_t j) const;
  const std::vector<std::size_t>& neighbors(std::size_t q) const;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<Splitting> omega_;
  ControlModel control_model_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

enum class PresetKind { kIsingChain, kHeisenbergChain, kStar };

std::string to_string(PresetKind k);
PresetKind preset_kind_from_string(const std::string& s);

struct NetworkPreset {
  PresetKind kind = PresetKind::kIsingChain;
  std::size_t n = 3;
  double J = 1.0;

  QubitNetwork expand() const;
};

/// (pi/2) J sum_k Z_k Z_{k+1}.
QubitNetwork ising_chain(std::size_t n, double J);
/// (pi/2) J sum_k (X_k X_{k+1} + Y_k Y_{k+1}).
QubitNetwork heisenberg_chain(std::size_t n, double J);
/// Center qubit 0 coupled to satellites 1..n-1 by J (XX + YY); satellites
/// carry a splitting J along y. Uses the reduced control model.
QubitNetwork star_graph(std::size_t n, double J);

/// Smallest nonzero |g| over all edges and tensor entries.
double j_paper(const QubitNetwork& net);
/// Largest |g| on the edge (i, j).
double edge_best_coupling(const QubitNetwork& net, std::size_t i, std::size_t j);
/// Term realizing edge_best_coupling; ties go to the smallest (a, b).
NativeTerm best_native_term(const Edge& e);
/// Edge count of a shortest path; 0 iff i == j.
std::size_t geodesic_distance(const QubitNetwork& net, std::size_t i,
                              std::size_t j);

}  // namespace qnb
