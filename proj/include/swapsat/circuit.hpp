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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace swapsat {

/// Qubit index. Logical in source circuits, physical in mapped ones.
using Qubit = int;

enum class GateKind {
  X, Y, Z, H, S, Sdg, T, Tdg,
  Rx, Ry, Rz, U1, U2, U3,
  Cx, Swap, Measure, Barrier,
};

/// QASM mnemonic of a gate kind ("cx", "tdg", ...).
std::string_view gate_name(GateKind kind);
/// Inverse of gate_name; nullopt for anything outside the supported set.
std::optional<GateKind> gate_kind_from_name(std::string_view name);
/// Number of angle parameters the kind takes.
std::size_t gate_param_count(GateKind kind);
bool is_unary(GateKind kind);

/// The basis in which a gate acts diagonally on one of its qubits. Two gates
/// sharing a qubit commute there when both report the same non-None axis.
enum class Axis { Z, X, None };

struct ClassicalBit {
  std::string reg;
  int index = 0;

  bool operator==(const ClassicalBit&) const = default;
};

struct ClassicalRegister {
  std::string name;
  int size = 0;

  bool operator==(const ClassicalRegister&) const = default;
};

struct Gate {
  GateKind kind = GateKind::X;
  /// Angle expressions exactly as written in the source.
  std::vector<std::string> params;
  /// cx: control first, data second. Barriers may list any number of qubits.
  std::vector<Qubit> qubits;
  /// Set for measures only.
  std::optional<ClassicalBit> cbit;
  /// Position in the owning circuit.
  std::size_t index = 0;

  std::string_view name() const { return gate_name(kind); }
  bool is_two_qubit() const {
    return kind == GateKind::Cx || kind == GateKind::Swap;
  }
  /// Commutation axis of this gate on the qubit at `position` of `qubits`.
  Axis axis_on(std::size_t position) const;

  bool operator==(const Gate&) const = default;
};

inline Gate make_gate(GateKind kind, std::vector<Qubit> qubits,
                      std::vector<std::string> params = {}) {
  Gate g;
  g.kind = kind;
  g.qubits = std::move(qubits);
  g.params = std::move(params);
  return g;
}

/// An ordered gate list over a single quantum register.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits, std::string qreg_name = "q",
                   std::string name = {});

  /// Appends a gate after validating arity, qubit range and distinctness.
  /// Sets gate.index. Throws InvalidArgument on violation.
  void append(Gate gate);
  void add_creg(ClassicalRegister reg);

  int num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::size_t i) const { return gates_.at(i); }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::string& qreg_name() const { return qreg_name_; }
  const std::vector<ClassicalRegister>& cregs() const { return cregs_; }

  std::size_t count(GateKind kind) const;

  /// Structural equality: registers and gate lists. The name is ignored.
  bool operator==(const Circuit& other) const;

 private:
  int num_qubits_ = 0;
  std::string qreg_name_ = "q";
  std::string name_;
  std::vector<ClassicalRegister> cregs_;
  std::vector<Gate> gates_;
};

/// Unordered qubit pair, stored with first < second.
struct QubitPair {
  Qubit first = 0;
  Qubit second = 0;

  static QubitPair of(Qubit a, Qubit b) {
    return a < b ? QubitPair{a, b} : QubitPair{b, a};
  }
  bool operator==(const QubitPair&) const = default;
  auto operator<=>(const QubitPair&) const = default;
};

/// One 2-qubit gate of the reduced circuit.
struct SliceEntry {
  std::size_t id = 0;
  Qubit control = 0;
  Qubit data = 0;
  std::size_t gate_index = 0;
  /// A swap gate already present in the input; routed like a cx but never
  /// bridged.
  bool is_swap = false;

  QubitPair pair() const { return QubitPair::of(control, data); }
};

/// A barrier between slice entries: it sits after the first `position`
/// entries.
struct Fence {
  std::size_t position = 0;
  std::vector<Qubit> qubits;
};

/// The reduced circuit: 2-qubit gates in source order, unary gates removed.
struct CnotSlice {
  int num_qubits = 0;
  std::vector<SliceEntry> cnots;
  std::vector<Fence> fences;

  std::size_t size() const { return cnots.size(); }
  bool empty() const { return cnots.empty(); }
  /// Logical qubit pair of entry i, for connectivity.
  QubitPair pair(std::size_t i) const { return cnots.at(i).pair(); }
  /// Distinct pairs over all entries, sorted.
  std::vector<QubitPair> logical_pairs() const;
};

CnotSlice extract_cnot_slice(const Circuit& circuit);

/// Longest chain of qubit-sharing gates. Every gate costs 1 except barriers,
/// which cost 0 but still synchronise their qubits.
std::size_t circuit_depth(const Circuit& circuit);

/// cx count with each swap gate counted as 3 CNOTs.
std::size_t cnot_equivalent_count(const Circuit& circuit);

}  // namespace swapsat
