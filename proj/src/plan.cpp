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

#include "swapsat/plan.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "swapsat/errors.hpp"

namespace swapsat {

using json = nlohmann::ordered_json;

std::size_t Plan::num_swaps() const {
  return std::count_if(steps.begin(), steps.end(),
                       [](const PlanStep& s) { return s.action.kind == ActionKind::Swap; });
}

std::size_t Plan::num_bridges() const {
  return std::count_if(steps.begin(), steps.end(),
                       [](const PlanStep& s) { return s.action.kind == ActionKind::Bridge; });
}

std::vector<Qubit> Plan::map_at(std::size_t t) const {
  if (t >= steps.size()) throw InvalidArgument("plan has no step " + std::to_string(t));
  std::vector<Qubit> map = initial_map;
  for (std::size_t s = 1; s <= t; ++s) {
    const Action& a = steps[s].action;
    if (a.kind != ActionKind::Swap) continue;
    for (Qubit& p : map) {
      if (p == a.swap.first) p = a.swap.second;
      else if (p == a.swap.second) p = a.swap.first;
    }
  }
  return map;
}

std::string plan_to_json(const Plan& plan) {
  json steps = json::array();
  for (const PlanStep& s : plan.steps) {
    json action;
    switch (s.action.kind) {
      case ActionKind::None:
        action = nullptr;
        break;
      case ActionKind::Swap:
        action = {{"type", "swap"}, {"qubits", {s.action.swap.first, s.action.swap.second}}};
        break;
      case ActionKind::Bridge:
        action = {{"type", "bridge"},
                  {"cnot", s.action.cnot},
                  {"qubits", {s.action.control, s.action.middle, s.action.data}}};
        break;
    }
    steps.push_back({{"action", action}, {"cnots", s.cnots}});
  }
  const json j = {{"num_physical", plan.num_physical},
                  {"dependencies", plan.dependencies == DagKind::Relaxed ? "relaxed" : "strict"},
                  {"initial_map", plan.initial_map},
                  {"final_map", plan.final_map},
                  {"steps", steps}};
  return j.dump(2) + "\n";
}

Plan plan_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    Plan plan;
    plan.num_physical = j.at("num_physical").get<int>();
    const std::string deps = j.at("dependencies").get<std::string>();
    if (deps != "strict" && deps != "relaxed") throw ParseError("unknown dependencies '" + deps + "'");
    plan.dependencies = deps == "relaxed" ? DagKind::Relaxed : DagKind::Strict;
    plan.initial_map = j.at("initial_map").get<std::vector<Qubit>>();
    plan.final_map = j.at("final_map").get<std::vector<Qubit>>();
    for (const json& s : j.at("steps")) {
      PlanStep step;
      step.cnots = s.at("cnots").get<std::vector<std::size_t>>();
      const json& a = s.at("action");
      if (!a.is_null()) {
        const std::string type = a.at("type").get<std::string>();
        const auto q = a.at("qubits").get<std::vector<Qubit>>();
        if (type == "swap" && q.size() == 2) {
          step.action = Action::make_swap(q[0], q[1]);
        } else if (type == "bridge" && q.size() == 3) {
          step.action = Action::make_bridge(a.at("cnot").get<std::size_t>(), q[0], q[1], q[2]);
        } else {
          throw ParseError("bad action '" + type + "'");
        }
      }
      plan.steps.push_back(std::move(step));
    }
    return plan;
  } catch (const json::exception& e) {
    throw ParseError(std::string("plan JSON: ") + e.what());
  }
}

namespace {

[[noreturn]] void reject(const std::string& why) { throw InvalidArgument("invalid plan: " + why); }

void check_map(const std::vector<Qubit>& map, int num_logical, int num_physical,
               const std::string& what) {
  if (static_cast<int>(map.size()) != num_logical) reject(what + " has the wrong size");
  std::set<Qubit> seen;
  for (Qubit p : map) {
    if (p < 0 || p >= num_physical) reject(what + " uses qubit " + std::to_string(p));
    if (!seen.insert(p).second) reject(what + " is not injective");
  }
}

}  // namespace

void validate_plan(const Plan& plan, const Circuit& circuit, const CouplingGraph& coupling) {
  if (plan.num_physical != coupling.num_physical()) reject("platform size mismatch");
  if (plan.steps.empty()) reject("no steps");
  check_map(plan.initial_map, circuit.num_qubits(), coupling.num_physical(), "initial map");
  check_map(plan.final_map, circuit.num_qubits(), coupling.num_physical(), "final map");
  const CnotSlice slice = extract_cnot_slice(circuit);
  const DepDag dag = build_dag(circuit, plan.dependencies);
  std::vector<int> step_of(slice.size(), -1);
  for (std::size_t t = 0; t < plan.steps.size(); ++t)
    for (std::size_t i : plan.steps[t].cnots) {
      if (i >= slice.size()) reject("unknown CNOT " + std::to_string(i));
      if (step_of[i] >= 0) reject("CNOT " + std::to_string(i) + " scheduled twice");
      step_of[i] = static_cast<int>(t);
    }
  for (std::size_t i = 0; i < slice.size(); ++i) {
    if (step_of[i] < 0) reject("CNOT " + std::to_string(i) + " never scheduled");
    for (std::size_t j : dag.pre(i))
      if (step_of[j] > step_of[i])
        reject("CNOT " + std::to_string(i) + " runs before its predecessor " + std::to_string(j));
  }
  const BridgePaths paths = distance2_pairs(coupling);
  for (std::size_t t = 0; t < plan.steps.size(); ++t) {
    const PlanStep& step = plan.steps[t];
    const Action& a = step.action;
    if ((t == 0) != (a.kind == ActionKind::None))
      reject("step " + std::to_string(t) + " has the wrong action kind");
    if (a.kind == ActionKind::Swap && !coupling.adjacent(a.swap.first, a.swap.second))
      reject("SWAP on a non-edge at step " + std::to_string(t));
    const std::vector<Qubit> map = plan.map_at(t);
    for (std::size_t i : step.cnots) {
      const Qubit pc = map[slice.cnots[i].control], pd = map[slice.cnots[i].data];
      if (a.kind == ActionKind::Bridge && a.cnot == i) {
        if (slice.cnots[i].is_swap) reject("bridge over a swap gate");
        if (a.control != pc || a.data != pd) reject("bridge endpoints differ from the mapping");
        if (!paths.contains(pc, pd)) reject("bridge endpoints are not at distance 2");
        if (!coupling.adjacent(pc, a.middle) || !coupling.adjacent(a.middle, pd))
          reject("bridge middle is not a common neighbour");
      } else if (!coupling.adjacent(pc, pd)) {
        reject("CNOT " + std::to_string(i) + " on non-adjacent qubits at step " + std::to_string(t));
      }
    }
    if (a.kind == ActionKind::Bridge &&
        std::find(step.cnots.begin(), step.cnots.end(), a.cnot) == step.cnots.end())
      reject("bridged CNOT is not scheduled in its step");
  }
  if (plan.map_at(plan.steps.size() - 1) != plan.final_map) reject("final map does not replay");
}

}  // namespace swapsat
