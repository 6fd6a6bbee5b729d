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

#include "swapsat/synthesis.hpp"

#include <algorithm>
#include <queue>

#include <json.hpp>

#include "swapsat/dependency.hpp"
#include "swapsat/errors.hpp"

namespace swapsat {

std::string_view status_name(SynthesisStatus s) {
  switch (s) {
    case SynthesisStatus::Optimal: return "optimal";
    case SynthesisStatus::Timeout: return "timeout";
    case SynthesisStatus::StepLimit: return "step_limit";
  }
  return "unknown";
}

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// The unique physical qubit holding l at step t.
Qubit decode_position(const std::vector<bool>& model, const VarRegistry& reg, Qubit l, int t) {
  Qubit found = -1;
  for (int p = 0; p < reg.num_physical(); ++p) {
    if (!model.at(reg.map(l, p, t))) continue;
    if (found >= 0) throw InternalError("logical qubit mapped twice in the model");
    found = p;
  }
  if (found < 0) throw InternalError("logical qubit unmapped in the model");
  return found;
}

}  // namespace

Plan decode_model(const std::vector<bool>& model, const Encoder& encoder, int t_final) {
  const VarRegistry& reg = encoder.registry();
  const CnotSlice& slice = encoder.slice();
  const auto& edges = encoder.coupling().edges();
  if (t_final < 0 || t_final >= reg.num_steps()) throw InvalidArgument("step out of range");
  Plan plan;
  plan.num_physical = reg.num_physical();
  plan.dependencies = encoder.options().dag_kind();
  for (Qubit l = 0; l < reg.num_logical(); ++l)
    plan.initial_map.push_back(decode_position(model, reg, l, 0));
  std::vector<Qubit> map = plan.initial_map;
  std::vector<int> step_of(slice.size(), -1);
  for (int t = 0; t <= t_final; ++t) {
    const StepVars& v = reg.step(t);
    PlanStep step;
    int chosen = 0;
    for (std::size_t e = 0; e < v.swap.size(); ++e) {
      if (!model[v.swap[e]]) continue;
      ++chosen;
      step.action = Action::make_swap(edges[e].first, edges[e].second);
    }
    int bridged = -1;
    for (std::size_t i = 0; i < v.bridge.size(); ++i) {
      if (v.bridge[i] == 0 || !model[v.bridge[i]]) continue;
      ++chosen;
      bridged = static_cast<int>(i);
    }
    if (chosen != (t == 0 ? 0 : 1)) throw InternalError("model has " + std::to_string(chosen) + " actions at step " + std::to_string(t));
    if (step.action.kind == ActionKind::Swap) {
      for (Qubit& p : map) {
        if (p == step.action.swap.first) p = step.action.swap.second;
        else if (p == step.action.swap.second) p = step.action.swap.first;
      }
    }
    for (Qubit l = 0; l < reg.num_logical(); ++l)
      if (decode_position(model, reg, l, t) != map[l])
        throw InternalError("model mapping does not follow its SWAPs at step " + std::to_string(t));
    if (bridged >= 0) {
      const SliceEntry& e = slice.cnots[bridged];
      const Qubit c = map[e.control], d = map[e.data];
      step.action = Action::make_bridge(static_cast<std::size_t>(bridged), c,
                                        encoder.bridge_paths().first_middle(c, d), d);
    }
    for (std::size_t i = 0; i < slice.size(); ++i) {
      if (!model[v.current[i]]) continue;
      if (step_of[i] >= 0) throw InternalError("CNOT current at two steps");
      step_of[i] = t;
      step.cnots.push_back(i);
    }
    plan.steps.push_back(std::move(step));
  }
  for (std::size_t i = 0; i < slice.size(); ++i)
    if (step_of[i] < 0) throw InternalError("CNOT " + std::to_string(i) + " never current");
  plan.final_map = map;
  return plan;
}

Circuit reconstruct(const Plan& plan, const Circuit& circuit) {
  const CnotSlice slice = extract_cnot_slice(circuit);
  const DepDag dag = build_dag(circuit, plan.dependencies);
  const GateOrder order(circuit, plan.dependencies);
  const auto closure = dag.ancestors();
  Circuit out(plan.num_physical, circuit.qreg_name(), circuit.name());
  for (const auto& reg : circuit.cregs()) out.add_creg(reg);

  std::vector<bool> emitted(circuit.size(), false);
  std::vector<Qubit> map = plan.initial_map;
  auto emit = [&](const Gate& g) {
    Gate copy = g;
    for (Qubit& q : copy.qubits) q = map.at(q);
    out.append(std::move(copy));
    emitted[g.index] = true;
  };
  auto cx = [&](Qubit c, Qubit d) { out.append(make_gate(GateKind::Cx, {c, d})); };
  auto emit_pending_ancestors = [&](std::size_t gate) {
    order.ancestors(gate).for_each([&](std::size_t a) {
      if (emitted[a]) return;
      const Gate& g = circuit.gate(a);
      if (g.is_two_qubit()) throw InvalidArgument("plan runs a CNOT before one it depends on");
      if (g.kind != GateKind::Measure) emit(g);
    });
  };

  for (std::size_t t = 0; t < plan.steps.size(); ++t) {
    const PlanStep& step = plan.steps[t];
    if (step.action.kind == ActionKind::Swap) {
      const auto [a, b] = step.action.swap;
      out.append(make_gate(GateKind::Swap, {a, b}));
      for (Qubit& p : map) {
        if (p == a) p = b;
        else if (p == b) p = a;
      }
    }
    // Kahn over the step's entries, smallest index first.
    std::vector<std::size_t> indegree(step.cnots.size(), 0);
    for (std::size_t x = 0; x < step.cnots.size(); ++x)
      for (std::size_t y = 0; y < step.cnots.size(); ++y)
        if (closure[step.cnots[y]].test(step.cnots[x])) ++indegree[y];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t y = 0; y < step.cnots.size(); ++y)
      if (indegree[y] == 0) ready.push(y);
    while (!ready.empty()) {
      const std::size_t x = ready.top();
      ready.pop();
      const SliceEntry& entry = slice.cnots.at(step.cnots[x]);
      const Gate& g = circuit.gate(entry.gate_index);
      emit_pending_ancestors(g.index);
      if (step.action.kind == ActionKind::Bridge && step.action.cnot == entry.id) {
        const Qubit c = step.action.control, m = step.action.middle, d = step.action.data;
        cx(m, d);
        cx(c, m);
        cx(m, d);
        cx(c, m);
        emitted[g.index] = true;
      } else {
        emit(g);
      }
      for (std::size_t y = 0; y < step.cnots.size(); ++y)
        if (closure[step.cnots[y]].test(step.cnots[x]) && --indegree[y] == 0) ready.push(y);
    }
  }
  for (const Gate& g : circuit.gates())
    if (!emitted[g.index] && g.kind != GateKind::Measure) {
      if (g.is_two_qubit()) throw InvalidArgument("plan does not schedule every CNOT");
      emit(g);
    }
  for (const Gate& g : circuit.gates())
    if (!emitted[g.index]) emit(g);
  return out;
}

Metrics compute_metrics(const Circuit& original, const Plan& plan, const Circuit& mapped) {
  Metrics m;
  m.circuit = original.name();
  m.swaps = plan.num_swaps();
  m.bridges = plan.num_bridges();
  m.added_cnots = 3 * (m.swaps + m.bridges);
  m.cnot_total = cnot_equivalent_count(mapped);
  m.depth_before = circuit_depth(original);
  m.depth_after = circuit_depth(mapped);
  m.lower_bound = m.swaps + m.bridges;
  return m;
}

std::string metrics_to_json(const MappedResult& result, bool include_timing) {
  using json = nlohmann::ordered_json;
  const Metrics& m = result.metrics;
  const bool solved = result.status == SynthesisStatus::Optimal;
  json j;
  j["schema_version"] = 1;
  j["circuit"] = m.circuit;
  j["platform"] = m.platform;
  j["combo"] = m.combo;
  j["ancillary"] = m.ancillary;
  j["solver"] = m.solver;
  j["status"] = status_name(m.status);
  j["swaps"] = solved ? json(m.swaps) : json(nullptr);
  j["bridges"] = solved ? json(m.bridges) : json(nullptr);
  j["added_cnots"] = solved ? json(m.added_cnots) : json(nullptr);
  j["cnot_total"] = solved ? json(m.cnot_total) : json(nullptr);
  j["depth_before"] = m.depth_before;
  j["depth_after"] = solved ? json(m.depth_after) : json(nullptr);
  j["lower_bound"] = m.lower_bound;
  j["num_vars"] = m.num_vars;
  j["num_clauses"] = m.num_clauses;
  if (include_timing) {
    j["step_times"] = m.step_times;
    j["total_time"] = m.total_time;
  }
  j["plan"] = result.plan ? json::parse(plan_to_json(*result.plan)) : json(nullptr);
  return j.dump(2) + "\n";
}

Synthesizer::Synthesizer(const Circuit& circuit, const CouplingGraph& coupling,
                         SynthesisOptions options, std::unique_ptr<SatBackend> backend)
    : circuit_(circuit),
      coupling_(coupling),
      options_(options),
      backend_(backend ? std::move(backend) : std::make_unique<InternalBackend>()),
      encoder_(circuit, coupling, options.encode) {}

MappedResult Synthesizer::run() {
  const auto start = Clock::now();
  Budget budget;
  if (options_.time_limit)
    budget.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*options_.time_limit));
  MappedResult result;
  Metrics& m = result.metrics;
  auto finish = [&](SynthesisStatus status, std::size_t lower_bound) {
    result.status = status;
    m.status = status;
    m.lower_bound = lower_bound;
    m.circuit = circuit_.name();
    m.platform = coupling_.name();
    m.combo = options_.encode.combo_name();
    m.ancillary = options_.encode.ancillary;
    m.solver = backend_->name();
    m.num_vars = static_cast<std::size_t>(encoder_.cnf().num_vars());
    m.num_clauses = encoder_.cnf().num_clauses();
    m.total_time = seconds_since(start);
    if (status != SynthesisStatus::Optimal) m.depth_before = circuit_depth(circuit_);
    return result;
  };

  for (int t = encoder_.num_steps(); ; ++t) {
    if (t > options_.max_steps) return finish(SynthesisStatus::StepLimit, static_cast<std::size_t>(t));
    if (budget.expired()) return finish(SynthesisStatus::Timeout, static_cast<std::size_t>(t));
    encoder_.build_next_step();
    const auto step_start = Clock::now();
    const std::vector<Lit> assume{encoder_.assumption(t)};
    const SolveResult r = backend_->solve(encoder_.cnf(), assume, budget);
    m.step_times.push_back(seconds_since(step_start));
    if (r.status == SatStatus::Unknown) return finish(SynthesisStatus::Timeout, static_cast<std::size_t>(t));
    if (r.status == SatStatus::Unsat) continue;

    Plan plan = decode_model(r.model, encoder_, t);
    validate_plan(plan, circuit_, coupling_);
    Circuit mapped = reconstruct(plan, circuit_);
    const std::vector<double> times = std::move(m.step_times);
    m = compute_metrics(circuit_, plan, mapped);
    m.step_times = times;
    result.plan = std::move(plan);
    result.mapped = std::move(mapped);
    return finish(SynthesisStatus::Optimal, static_cast<std::size_t>(t));
  }
}

MappedResult synthesize(const Circuit& circuit, const CouplingGraph& coupling,
                        const SynthesisOptions& options, std::unique_ptr<SatBackend> backend) {
  return Synthesizer(circuit, coupling, options, std::move(backend)).run();
}

SatStatus certify_optimal(const Circuit& circuit, const CouplingGraph& coupling,
                          const EncodeOptions& options, std::size_t k, SatBackend& backend,
                          const Budget& budget) {
  if (k == 0) return SatStatus::Unsat;
  Encoder fresh(circuit, coupling, options);
  for (std::size_t t = 0; t < k; ++t) fresh.build_next_step();
  const std::vector<Lit> assume{fresh.assumption(static_cast<int>(k) - 1)};
  return backend.solve(fresh.cnf(), assume, budget).status;
}

}  // namespace swapsat
