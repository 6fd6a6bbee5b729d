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
#include <string>
#include <vector>

#include "swapsat/circuit.hpp"
#include "swapsat/cnf.hpp"
#include "swapsat/coupling.hpp"
#include "swapsat/dependency.hpp"

namespace swapsat {

struct EncodeOptions {
  /// Allow SWAPs that move a mapped qubit onto an unmapped one.
  bool ancillary = true;
  bool bridges = false;
  bool relaxed = false;

  DagKind dag_kind() const { return relaxed ? DagKind::Relaxed : DagKind::Strict; }
  /// "S", "S+B", "S+R" or "S+B+R".
  std::string combo_name() const;
};

/// SAT variables of one time step. Index conventions: map[l * n_p + p],
/// mapped/touch by physical qubit, swap by coupling edge index, current /
/// advanced / delayed / bridge by slice entry, pair / pair2 by position in
/// the logical pair list. Entries that do not exist at a step are 0.
struct StepVars {
  std::vector<int> map;
  std::vector<int> mapped;
  std::vector<int> touch;
  std::vector<int> swap;
  std::vector<int> current;
  std::vector<int> advanced;
  std::vector<int> delayed;
  std::vector<int> pair;
  std::vector<int> pair2;
  std::vector<int> bridge;
  int assumption = 0;
};

/// Map from encoding symbols to SAT variable ids over all built steps.
class VarRegistry {
 public:
  VarRegistry(int num_logical, int num_physical, std::vector<QubitPair> logical_pairs);

  int num_logical() const { return num_logical_; }
  int num_physical() const { return num_physical_; }
  int num_steps() const { return static_cast<int>(steps_.size()); }
  const std::vector<QubitPair>& logical_pairs() const { return logical_pairs_; }
  /// Position of {a, b} in logical_pairs(); throws if it is not a CNOT pair.
  std::size_t pair_index(Qubit a, Qubit b) const;

  const StepVars& step(int t) const;
  StepVars& add_step() { return steps_.emplace_back(); }

  int map(Qubit l, Qubit p, int t) const { return step(t).map.at(l * num_physical_ + p); }
  int mapped(Qubit p, int t) const { return step(t).mapped.at(p); }
  int touch(Qubit p, int t) const { return step(t).touch.at(p); }
  int swap(std::size_t edge, int t) const { return step(t).swap.at(edge); }
  int current(std::size_t i, int t) const { return step(t).current.at(i); }
  int advanced(std::size_t i, int t) const { return step(t).advanced.at(i); }
  int delayed(std::size_t i, int t) const { return step(t).delayed.at(i); }
  int pair(std::size_t k, int t) const { return step(t).pair.at(k); }
  int pair2(std::size_t k, int t) const { return step(t).pair2.at(k); }
  int bridge(std::size_t i, int t) const { return step(t).bridge.at(i); }
  int assumption(int t) const { return step(t).assumption; }

  /// One "symbol = id" line per variable, e.g. "m[l0,p2]@1 = 17".
  std::string dump() const;

 private:
  int num_logical_;
  int num_physical_;
  std::vector<QubitPair> logical_pairs_;
  std::map<QubitPair, std::size_t> pair_index_;
  std::vector<StepVars> steps_;
};

/// Incremental encoding with two-way dependency propagation. Step t holds one SWAP (or one
/// bridge, t >= 1) followed by a group of CNOTs; every slice entry is
/// current at exactly one step, advanced after it and delayed before it.
/// Solving under assumption(t) asks for a plan with exactly t actions.
class Encoder {
 public:
  /// Throws InfeasibleError when the circuit has more qubits than the graph.
  Encoder(const Circuit& circuit, const CouplingGraph& coupling, EncodeOptions options);

  /// Appends the clauses of step num_steps().
  void build_next_step();
  int num_steps() const { return registry_.num_steps(); }
  /// Assumption literal meaning "every entry is done by step t". Throws
  /// InvalidArgument if step t is not built.
  Lit assumption(int t) const;

  const CnfInstance& cnf() const { return cnf_; }
  const VarRegistry& registry() const { return registry_; }
  const EncodeOptions& options() const { return options_; }
  const CnotSlice& slice() const { return slice_; }
  const DepDag& dag() const { return dag_; }
  const CouplingGraph& coupling() const { return coupling_; }
  const BridgePaths& bridge_paths() const { return bridge_paths_; }
  /// Whether bridge variables exist (bridges requested and possible).
  bool bridges_active() const { return bridges_active_; }

  /// Upper bound on the clauses of one step, used to keep the encoding
  /// polynomial: 10 * (n_l n_p + |CP| n_l + |CL| n_p^2 + m (n_p + 1) + E + n_p + |CP| + 1)
  /// where E is the number of DAG edges.
  std::size_t clause_bound_per_step() const;

 private:
  void add_mapping(const StepVars& v);
  void add_swaps(const StepVars& prev, const StepVars& v);
  void add_connections(const StepVars& v);
  void add_dependencies(const StepVars* prev, const StepVars& v);
  void add_assumption(const StepVars& v, bool step_possible);

  Circuit circuit_;
  CouplingGraph coupling_;
  EncodeOptions options_;
  CnotSlice slice_;
  DepDag dag_;
  BridgePaths bridge_paths_;
  bool bridges_active_ = false;
  std::vector<std::size_t> entry_pair_;   // slice entry -> pair index
  std::vector<bool> pair_has_cx_;         // pair index -> some bridgeable entry uses it
  VarRegistry registry_;
  CnfInstance cnf_;
};

}  // namespace swapsat
