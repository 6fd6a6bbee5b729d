// Copyright 2026 The swapsat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swapsat/circuit.hpp"

namespace swapsat {

/// Undirected connectivity over physical qubits 0..num_physical-1.
class CouplingGraph {
 public:
  CouplingGraph() = default;
  /// Throws InvalidArgument on self-loops, duplicate or out-of-range edges.
  CouplingGraph(int num_physical, std::vector<QubitPair> edges,
                std::string name = {});

  int num_physical() const { return num_physical_; }
  const std::string& name() const { return name_; }
  /// Sorted, duplicate-free.
  const std::vector<QubitPair>& edges() const { return edges_; }
  bool adjacent(Qubit a, Qubit b) const;
  /// Index into edges() of the pair {a, b}, if it is an edge.
  std::optional<std::size_t> edge_index(Qubit a, Qubit b) const;
  const std::vector<Qubit>& neighbors(Qubit p) const { return neighbors_.at(p); }
  bool is_connected() const;

 private:
  int num_physical_ = 0;
  std::string name_;
  std::vector<QubitPair> edges_;
  std::vector<std::vector<Qubit>> neighbors_;
  std::vector<int> edge_id_;  // num_physical^2, -1 for non-edges
};

/// Non-adjacent physical pairs with at least one common neighbour, each with
/// its sorted list of possible middle qubits.
struct BridgePaths {
  std::map<QubitPair, std::vector<Qubit>> middles;

  bool empty() const { return middles.empty(); }
  std::size_t size() const { return middles.size(); }
  bool contains(Qubit a, Qubit b) const {
    return middles.contains(QubitPair::of(a, b));
  }
  /// Smallest middle for {a, b}; throws if the pair has none.
  Qubit first_middle(Qubit a, Qubit b) const;
};

BridgePaths distance2_pairs(const CouplingGraph& graph);

CouplingGraph linear_coupling(int n);
CouplingGraph grid_coupling(int rows, int cols);
CouplingGraph complete_coupling(int n);

/// Resolves a platform spec: a built-in name (melbourne, sycamore54,
/// rigetti80, eagle127), a generator (linear-N, grid-RxC, complete-N) or
/// file:PATH pointing to a coupling JSON file.
CouplingGraph load_coupling(std::string_view spec);

/// {"name": str, "num_qubits": int, "edges": [[u, v], ...]}
CouplingGraph coupling_from_json(std::string_view text);
std::string coupling_to_json(const CouplingGraph& graph);

std::vector<std::string> builtin_platform_names();

}  // namespace swapsat
