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
#include <string>
#include <string_view>
#include <vector>

#include "swapsat/circuit.hpp"
#include "swapsat/coupling.hpp"
#include "swapsat/dependency.hpp"

namespace swapsat {

enum class ActionKind { None, Swap, Bridge };

/// The routing action opening a time step.
struct Action {
  ActionKind kind = ActionKind::None;
  /// Swap: the physical edge.
  QubitPair swap{};
  /// Bridge: the slice entry it executes and its physical qubits.
  std::size_t cnot = 0;
  Qubit control = -1;
  Qubit middle = -1;
  Qubit data = -1;

  static Action make_swap(Qubit a, Qubit b) {
    Action x;
    x.kind = ActionKind::Swap;
    x.swap = QubitPair::of(a, b);
    return x;
  }
  static Action make_bridge(std::size_t cnot, Qubit control, Qubit middle, Qubit data) {
    Action x;
    x.kind = ActionKind::Bridge;
    x.cnot = cnot;
    x.control = control;
    x.middle = middle;
    x.data = data;
    return x;
  }
  bool operator==(const Action&) const = default;
};

struct PlanStep {
  Action action;
  /// Slice entries executed in this step, ascending.
  std::vector<std::size_t> cnots;

  bool operator==(const PlanStep&) const = default;
};

/// A decoded parallel plan: initial placement, then per step one action and
/// a group of CNOTs executed under the mapping that holds after the action.
struct Plan {
  int num_physical = 0;
  DagKind dependencies = DagKind::Strict;
  /// logical -> physical
  std::vector<Qubit> initial_map;
  std::vector<PlanStep> steps;
  std::vector<Qubit> final_map;

  std::size_t num_swaps() const;
  std::size_t num_bridges() const;
  std::size_t num_actions() const { return num_swaps() + num_bridges(); }
  /// Mapping in force during step t, after its action.
  std::vector<Qubit> map_at(std::size_t t) const;

  bool operator==(const Plan&) const = default;
};

std::string plan_to_json(const Plan& plan);
/// Throws ParseError on malformed input.
Plan plan_from_json(std::string_view text);

/// Checks every plan invariant against the circuit it claims to route:
/// injective maps, one action per step after the first, SWAPs on edges,
/// bridges over distance-2 images with a common neighbour, each entry in
/// exactly one step, dependencies respected, CNOTs on adjacent images and a
/// final map equal to the replayed one. Throws InvalidArgument.
void validate_plan(const Plan& plan, const Circuit& circuit, const CouplingGraph& coupling);

}  // namespace swapsat
