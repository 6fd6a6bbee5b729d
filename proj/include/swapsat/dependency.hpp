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
#include <vector>

#include "swapsat/bitset.hpp"
#include "swapsat/circuit.hpp"

namespace swapsat {

enum class DagKind { Strict, Relaxed };

/// Ordering constraints between the entries of a CnotSlice. pre(i) holds the
/// immediate predecessors of entry i, suc(i) the inverse relation.
class DepDag {
 public:
  DepDag() = default;
  DepDag(std::size_t size, DagKind kind);

  /// Records that entry `from` must be scheduled no later than `to`.
  void add_edge(std::size_t from, std::size_t to);

  std::size_t size() const { return pre_.size(); }
  DagKind kind() const { return kind_; }
  const std::vector<std::size_t>& pre(std::size_t i) const { return pre_.at(i); }
  const std::vector<std::size_t>& suc(std::size_t i) const { return suc_.at(i); }
  std::size_t num_edges() const;

  /// reach[j] has bit i set iff i is a (transitive) predecessor of j.
  std::vector<Bitset> ancestors() const;
  /// Topological order; ties go to the smallest index.
  std::vector<std::size_t> topological_order() const;

 private:
  DagKind kind_ = DagKind::Strict;
  std::vector<std::vector<std::size_t>> pre_;
  std::vector<std::vector<std::size_t>> suc_;
};

/// Strict dependencies: i -> j iff i comes first, they share a qubit and no
/// other slice entry on that qubit sits between them. Barriers are fences.
DepDag build_dependency_dag(const CnotSlice& slice);

/// Commutation-aware dependencies over the slice of the full circuit. Two
/// entries stay ordered only when a chain of non-commuting gates (taking the
/// unary gates into account) links them. Given as a transitive reduction.
DepDag build_relaxed_dag(const Circuit& circuit);

DepDag build_dag(const Circuit& circuit, DagKind kind);

/// Must-precede relation over every gate of a circuit, in strict form (all
/// gates sharing a qubit stay ordered) or relaxed form (gates acting along
/// the same axis on a qubit commute: cx controls with Z-like gates, cx data
/// with X-like gates).
class GateOrder {
 public:
  GateOrder(const Circuit& circuit, DagKind kind);

  DagKind kind() const { return kind_; }
  std::size_t size() const { return ancestors_.size(); }
  /// Gates that must be executed before gate g.
  const Bitset& ancestors(std::size_t g) const { return ancestors_.at(g); }
  bool must_precede(std::size_t a, std::size_t b) const {
    return ancestors_.at(b).test(a);
  }

 private:
  DagKind kind_;
  std::vector<Bitset> ancestors_;
};

}  // namespace swapsat
