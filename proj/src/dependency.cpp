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

#include "swapsat/dependency.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "swapsat/errors.hpp"

namespace swapsat {

DepDag::DepDag(std::size_t size, DagKind kind)
    : kind_(kind), pre_(size), suc_(size) {}

void DepDag::add_edge(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size() || from == to)
    throw InvalidArgument("bad dependency edge");
  auto& p = pre_[to];
  if (std::find(p.begin(), p.end(), from) != p.end()) return;
  p.push_back(from);
  suc_[from].push_back(to);
}

std::size_t DepDag::num_edges() const {
  std::size_t n = 0;
  for (const auto& p : pre_) n += p.size();
  return n;
}

std::vector<Bitset> DepDag::ancestors() const {
  const auto order = topological_order();
  std::vector<Bitset> reach(size(), Bitset(size()));
  for (std::size_t j : order) {
    for (std::size_t i : pre_[j]) {
      reach[j].set(i);
      reach[j] |= reach[i];
    }
  }
  return reach;
}

std::vector<std::size_t> DepDag::topological_order() const {
  std::vector<std::size_t> indegree(size());
  for (std::size_t j = 0; j < size(); ++j) indegree[j] = pre_[j].size();
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t j = 0; j < size(); ++j)
    if (indegree[j] == 0) ready.push(j);
  std::vector<std::size_t> order;
  order.reserve(size());
  while (!ready.empty()) {
    const std::size_t i = ready.top();
    ready.pop();
    order.push_back(i);
    for (std::size_t j : suc_[i])
      if (--indegree[j] == 0) ready.push(j);
  }
  if (order.size() != size()) throw InternalError("dependency graph has a cycle");
  return order;
}

DepDag build_dependency_dag(const CnotSlice& slice) {
  DepDag dag(slice.size(), DagKind::Strict);
  std::vector<std::vector<std::size_t>> last(
      static_cast<std::size_t>(slice.num_qubits));
  std::size_t fence = 0;
  auto apply_fences = [&](std::size_t position) {
    for (; fence < slice.fences.size() && slice.fences[fence].position <= position;
         ++fence) {
      std::vector<std::size_t> merged;
      for (Qubit q : slice.fences[fence].qubits)
        merged.insert(merged.end(), last[q].begin(), last[q].end());
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      for (Qubit q : slice.fences[fence].qubits) last[q] = merged;
    }
  };
  for (const SliceEntry& e : slice.cnots) {
    apply_fences(e.id);
    for (Qubit q : {e.control, e.data})
      for (std::size_t i : last[q]) dag.add_edge(i, e.id);
    last[e.control] = {e.id};
    last[e.data] = {e.id};
  }
  return dag;
}

GateOrder::GateOrder(const Circuit& circuit, DagKind kind) : kind_(kind) {
  const std::size_t n = circuit.size();
  ancestors_.assign(n, Bitset(n));
  // Per qubit, the union of (ancestors + self) of earlier gates, split by the
  // axis those gates act along on that qubit.
  constexpr std::size_t kZ = 0, kX = 1, kNone = 2;
  std::vector<std::array<Bitset, 3>> seen(
      static_cast<std::size_t>(circuit.num_qubits()),
      {Bitset(n), Bitset(n), Bitset(n)});
  auto slot = [&](const Gate& g, std::size_t pos) {
    if (kind == DagKind::Strict) return kNone;
    switch (g.axis_on(pos)) {
      case Axis::Z: return kZ;
      case Axis::X: return kX;
      default: return kNone;
    }
  };
  for (const Gate& g : circuit.gates()) {
    Bitset& anc = ancestors_[g.index];
    for (std::size_t pos = 0; pos < g.qubits.size(); ++pos) {
      const auto& s = seen[g.qubits[pos]];
      const std::size_t a = slot(g, pos);
      for (std::size_t other = 0; other < 3; ++other)
        if (a == kNone || other != a) anc |= s[other];
    }
    Bitset with_self = anc;
    with_self.set(g.index);
    for (std::size_t pos = 0; pos < g.qubits.size(); ++pos)
      seen[g.qubits[pos]][slot(g, pos)] |= with_self;
  }
}

DepDag build_relaxed_dag(const Circuit& circuit) {
  const CnotSlice slice = extract_cnot_slice(circuit);
  const GateOrder order(circuit, DagKind::Relaxed);
  const std::size_t m = slice.size();
  std::vector<std::size_t> slice_of(circuit.size(), m);
  for (const auto& e : slice.cnots) slice_of[e.gate_index] = e.id;

  std::vector<Bitset> reach(m, Bitset(m));
  for (const auto& e : slice.cnots) {
    order.ancestors(e.gate_index).for_each([&](std::size_t g) {
      if (slice_of[g] < m) reach[e.id].set(slice_of[g]);
    });
  }
  DepDag dag(m, DagKind::Relaxed);
  for (std::size_t j = 0; j < m; ++j) {
    Bitset implied(m);
    reach[j].for_each([&](std::size_t k) { implied |= reach[k]; });
    Bitset direct = reach[j];
    direct.subtract(implied);
    direct.for_each([&](std::size_t i) { dag.add_edge(i, j); });
  }
  return dag;
}

DepDag build_dag(const Circuit& circuit, DagKind kind) {
  return kind == DagKind::Strict ? build_dependency_dag(extract_cnot_slice(circuit))
                                 : build_relaxed_dag(circuit);
}

}  // namespace swapsat
