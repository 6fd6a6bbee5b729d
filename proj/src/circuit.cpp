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

#include "swapsat/circuit.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "swapsat/errors.hpp"

namespace swapsat {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::size_t params;
};

constexpr std::array<KindInfo, 18> kKinds{{
    {GateKind::X, "x", 0},         {GateKind::Y, "y", 0},
    {GateKind::Z, "z", 0},         {GateKind::H, "h", 0},
    {GateKind::S, "s", 0},         {GateKind::Sdg, "sdg", 0},
    {GateKind::T, "t", 0},         {GateKind::Tdg, "tdg", 0},
    {GateKind::Rx, "rx", 1},       {GateKind::Ry, "ry", 1},
    {GateKind::Rz, "rz", 1},       {GateKind::U1, "u1", 1},
    {GateKind::U2, "u2", 2},       {GateKind::U3, "u3", 3},
    {GateKind::Cx, "cx", 0},       {GateKind::Swap, "swap", 0},
    {GateKind::Measure, "measure", 0}, {GateKind::Barrier, "barrier", 0},
}};

const KindInfo& info(GateKind kind) {
  return kKinds[static_cast<std::size_t>(kind)];
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) return k.kind;
  }
  return std::nullopt;
}

std::size_t gate_param_count(GateKind kind) { return info(kind).params; }

bool is_unary(GateKind kind) {
  return kind != GateKind::Cx && kind != GateKind::Swap &&
         kind != GateKind::Measure && kind != GateKind::Barrier;
}

Axis Gate::axis_on(std::size_t position) const {
  switch (kind) {
    case GateKind::Cx:
      return position == 0 ? Axis::Z : Axis::X;
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz:
    case GateKind::U1:
      return Axis::Z;
    case GateKind::X:
    case GateKind::Rx:
      return Axis::X;
    default:
      return Axis::None;
  }
}

Circuit::Circuit(int num_qubits, std::string qreg_name, std::string name)
    : num_qubits_(num_qubits),
      qreg_name_(std::move(qreg_name)),
      name_(std::move(name)) {
  if (num_qubits < 0) throw InvalidArgument("negative qubit count");
}

void Circuit::append(Gate gate) {
  const std::string_view name = gate.name();
  const std::size_t arity = gate.qubits.size();
  if (gate.kind == GateKind::Barrier) {
    if (arity == 0) throw InvalidArgument("barrier without qubits");
  } else if (gate.is_two_qubit()) {
    if (arity != 2)
      throw InvalidArgument(std::string(name) + " needs exactly 2 qubits");
  } else if (arity != 1) {
    throw InvalidArgument(std::string(name) + " needs exactly 1 qubit");
  }
  if (gate.params.size() != gate_param_count(gate.kind))
    throw InvalidArgument(std::string(name) + ": wrong parameter count");
  if ((gate.kind == GateKind::Measure) != gate.cbit.has_value())
    throw InvalidArgument("classical target only allowed on measure");
  std::set<Qubit> seen;
  for (Qubit q : gate.qubits) {
    if (q < 0 || q >= num_qubits_)
      throw InvalidArgument(std::string(name) + ": qubit " +
                            std::to_string(q) + " out of range");
    if (!seen.insert(q).second)
      throw InvalidArgument(std::string(name) + ": repeated qubit " +
                            std::to_string(q));
  }
  gate.index = gates_.size();
  gates_.push_back(std::move(gate));
}

void Circuit::add_creg(ClassicalRegister reg) {
  if (reg.size <= 0) throw InvalidArgument("creg size must be positive");
  cregs_.push_back(std::move(reg));
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [kind](const Gate& g) { return g.kind == kind; }));
}

bool Circuit::operator==(const Circuit& other) const {
  return num_qubits_ == other.num_qubits_ &&
         qreg_name_ == other.qreg_name_ && cregs_ == other.cregs_ &&
         gates_ == other.gates_;
}

std::vector<QubitPair> CnotSlice::logical_pairs() const {
  std::set<QubitPair> pairs;
  for (const auto& c : cnots) pairs.insert(c.pair());
  return {pairs.begin(), pairs.end()};
}

CnotSlice extract_cnot_slice(const Circuit& circuit) {
  CnotSlice slice;
  slice.num_qubits = circuit.num_qubits();
  for (const Gate& g : circuit.gates()) {
    if (g.is_two_qubit()) {
      slice.cnots.push_back({slice.cnots.size(), g.qubits[0], g.qubits[1],
                             g.index, g.kind == GateKind::Swap});
    } else if (g.kind == GateKind::Barrier) {
      slice.fences.push_back({slice.cnots.size(), g.qubits});
    }
  }
  return slice;
}

std::size_t circuit_depth(const Circuit& circuit) {
  std::vector<std::size_t> level(static_cast<std::size_t>(circuit.num_qubits()), 0);
  std::size_t depth = 0;
  for (const Gate& g : circuit.gates()) {
    std::size_t start = 0;
    for (Qubit q : g.qubits) start = std::max(start, level[q]);
    const std::size_t end = start + (g.kind == GateKind::Barrier ? 0 : 1);
    for (Qubit q : g.qubits) level[q] = end;
    depth = std::max(depth, end);
  }
  return depth;
}

std::size_t cnot_equivalent_count(const Circuit& circuit) {
  return circuit.count(GateKind::Cx) + 3 * circuit.count(GateKind::Swap);
}

}  // namespace swapsat
