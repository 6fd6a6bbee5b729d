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

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swapsat/circuit.hpp"
#include "swapsat/coupling.hpp"
#include "swapsat/encoder.hpp"
#include "swapsat/plan.hpp"

namespace swapsat {

struct VerifyReport {
  bool connectivity_ok = true;
  bool dependency_ok = true;
  bool mapping_consistent = true;
  bool gate_counts_ok = true;
  /// First problem found, empty when the report passes.
  std::string first_violation;

  bool passed() const {
    return connectivity_ok && dependency_ok && mapping_consistent && gate_counts_ok;
  }
};

/// Replays the mapped circuit against the plan: every 2-qubit gate on an
/// edge, routing SWAPs and bridges where the plan puts them, each original
/// gate matched on the current image of its logical qubits with the right
/// roles once its predecessors (under the plan's dependency kind) have run,
/// CNOT count equal to the original plus 3 per action, and the same
/// single-qubit gate multiset.
VerifyReport check_structural(const Circuit& original, const Circuit& mapped,
                              const CouplingGraph& coupling, const Plan& plan);

struct EquivalenceResult {
  bool skipped = false;
  bool equivalent = false;
  int used_qubits = 0;
  std::string detail;
};

/// Statevector comparison on the used physical qubits (initial images plus
/// every qubit a mapped gate touches), unmapped ones starting in |0>. Checks
/// every basis state of the logical register and 16 random states, up to a
/// global phase, with tolerance 1e-9. Skips when more than `limit` qubits
/// are used.
EquivalenceResult check_unitary_equivalence(const Circuit& original, const Circuit& mapped,
                                            const std::vector<Qubit>& initial_map,
                                            const std::vector<Qubit>& final_map,
                                            int limit = 10);

/// Dense statevector over a few qubits; qubit k is bit k of the index.
class StateVector {
 public:
  explicit StateVector(int num_qubits);
  int num_qubits() const { return n_; }
  std::vector<std::complex<double>>& amplitudes() { return amp_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }
  /// Applies a gate whose qubits index this register. Measures and
  /// barriers are ignored.
  void apply(const Gate& gate);

 private:
  void apply_1q(int q, const std::complex<double> (&u)[2][2]);
  int n_;
  std::vector<std::complex<double>> amp_;
};

struct OracleOptions {
  bool ancillary = true;
  bool bridges = false;
  bool relaxed = false;
  /// Execute every ready adjacent CNOT for free after each move. Without it
  /// single executions are separate zero-cost moves.
  bool greedy_closure = true;
};

inline OracleOptions oracle_options(const EncodeOptions& e) {
  return {e.ancillary, e.bridges, e.relaxed, true};
}

/// Breadth-first search over (mapping, executed entries). Returns the least
/// number of SWAP/bridge moves that executes the whole slice, or nullopt if
/// it exceeds cap.
std::optional<int> oracle_min_swaps(const Circuit& circuit, const CouplingGraph& coupling,
                                    const OracleOptions& options, int cap);

}  // namespace swapsat
