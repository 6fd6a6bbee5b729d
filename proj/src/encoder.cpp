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

#include "swapsat/encoder.hpp"

#include <sstream>

#include "swapsat/errors.hpp"

namespace swapsat {

std::string EncodeOptions::combo_name() const {
  std::string name = "S";
  if (bridges) name += "+B";
  if (relaxed) name += "+R";
  return name;
}

VarRegistry::VarRegistry(int num_logical, int num_physical,
                         std::vector<QubitPair> logical_pairs)
    : num_logical_(num_logical),
      num_physical_(num_physical),
      logical_pairs_(std::move(logical_pairs)) {
  for (std::size_t k = 0; k < logical_pairs_.size(); ++k) pair_index_[logical_pairs_[k]] = k;
}

std::size_t VarRegistry::pair_index(Qubit a, Qubit b) const {
  const auto it = pair_index_.find(QubitPair::of(a, b));
  if (it == pair_index_.end())
    throw InvalidArgument("no CNOT acts on logical pair (" + std::to_string(a) + "," +
                          std::to_string(b) + ")");
  return it->second;
}

const StepVars& VarRegistry::step(int t) const {
  if (t < 0 || t >= num_steps())
    throw InvalidArgument("time step " + std::to_string(t) + " is not built");
  return steps_[t];
}

std::string VarRegistry::dump() const {
  std::ostringstream out;
  auto line = [&](const std::string& sym, int t, int id) {
    if (id != 0) out << sym << "@" << t << " = " << id << "\n";
  };
  for (int t = 0; t < num_steps(); ++t) {
    const StepVars& v = steps_[t];
    for (int l = 0; l < num_logical_; ++l)
      for (int p = 0; p < num_physical_; ++p)
        line("m[l" + std::to_string(l) + ",p" + std::to_string(p) + "]", t, v.map[l * num_physical_ + p]);
    for (std::size_t p = 0; p < v.mapped.size(); ++p) line("mapped[p" + std::to_string(p) + "]", t, v.mapped[p]);
    for (std::size_t p = 0; p < v.touch.size(); ++p) line("u[p" + std::to_string(p) + "]", t, v.touch[p]);
    for (std::size_t e = 0; e < v.swap.size(); ++e) line("s[e" + std::to_string(e) + "]", t, v.swap[e]);
    for (std::size_t i = 0; i < v.current.size(); ++i) {
      const std::string idx = "[" + std::to_string(i) + "]";
      line("c" + idx, t, v.current[i]);
      line("a" + idx, t, v.advanced[i]);
      line("d" + idx, t, v.delayed[i]);
      if (i < v.bridge.size()) line("br" + idx, t, v.bridge[i]);
    }
    for (std::size_t k = 0; k < v.pair.size(); ++k) {
      const std::string idx = "[l" + std::to_string(logical_pairs_[k].first) + ",l" +
                              std::to_string(logical_pairs_[k].second) + "]";
      line("pair" + idx, t, v.pair[k]);
      if (k < v.pair2.size()) line("pair2" + idx, t, v.pair2[k]);
    }
    line("alpha", t, v.assumption);
  }
  return out.str();
}

Encoder::Encoder(const Circuit& circuit, const CouplingGraph& coupling, EncodeOptions options)
    : circuit_(circuit),
      coupling_(coupling),
      options_(options),
      slice_(extract_cnot_slice(circuit)),
      dag_(build_dag(circuit, options.dag_kind())),
      registry_(circuit.num_qubits(), coupling.num_physical(), slice_.logical_pairs()) {
  if (circuit.num_qubits() > coupling.num_physical())
    throw InfeasibleError("circuit has " + std::to_string(circuit.num_qubits()) +
                          " qubits but the platform only " +
                          std::to_string(coupling.num_physical()));
  if (options_.bridges) bridge_paths_ = distance2_pairs(coupling_);
  pair_has_cx_.assign(registry_.logical_pairs().size(), false);
  for (const SliceEntry& e : slice_.cnots) {
    entry_pair_.push_back(registry_.pair_index(e.control, e.data));
    if (!e.is_swap) pair_has_cx_[entry_pair_.back()] = true;
  }
  bool any_cx = false;
  for (bool b : pair_has_cx_) any_cx |= b;
  bridges_active_ = options_.bridges && !bridge_paths_.empty() && any_cx;
}

Lit Encoder::assumption(int t) const { return registry_.assumption(t); }

std::size_t Encoder::clause_bound_per_step() const {
  const std::size_t nl = circuit_.num_qubits(), np = coupling_.num_physical();
  const std::size_t cp = coupling_.edges().size(), cl = registry_.logical_pairs().size();
  const std::size_t m = slice_.size(), e = dag_.num_edges();
  return 10 * (nl * np + cp * nl + cl * np * np + m * (np + 1) + e + np + cp + 1);
}

void Encoder::build_next_step() {
  const int t = num_steps();
  const int nl = circuit_.num_qubits(), np = coupling_.num_physical();
  const std::size_t m = slice_.size(), npairs = registry_.logical_pairs().size();
  StepVars v;
  auto fresh = [&](std::vector<int>& out, std::size_t n) {
    out.resize(n);
    for (auto& x : out) x = cnf_.new_var();
  };
  fresh(v.map, static_cast<std::size_t>(nl) * np);
  fresh(v.mapped, np);
  if (t > 0) {
    fresh(v.touch, np);
    fresh(v.swap, coupling_.edges().size());
  }
  fresh(v.current, m);
  fresh(v.advanced, m);
  fresh(v.delayed, m);
  fresh(v.pair, npairs);
  if (t > 0 && bridges_active_) {
    v.pair2.assign(npairs, 0);
    for (std::size_t k = 0; k < npairs; ++k)
      if (pair_has_cx_[k]) v.pair2[k] = cnf_.new_var();
    v.bridge.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      if (!slice_.cnots[i].is_swap) v.bridge[i] = cnf_.new_var();
  }
  v.assumption = cnf_.new_var();

  StepVars& stored = registry_.add_step();
  stored = std::move(v);
  const StepVars& cur = stored;
  const StepVars* prev = t > 0 ? &registry_.step(t - 1) : nullptr;

  add_mapping(cur);
  bool possible = true;
  if (prev) {
    add_swaps(*prev, cur);
    possible = !cur.swap.empty() || !cur.bridge.empty();
  }
  // Physical qubit occupancy.
  for (int p = 0; p < np; ++p) {
    std::vector<Lit> any{-cur.mapped[p]};
    for (int l = 0; l < nl; ++l) {
      any.push_back(cur.map[l * np + p]);
      cnf_.add_clause({-cur.map[l * np + p], cur.mapped[p]});
    }
    cnf_.add_clause(any);
  }
  add_connections(cur);
  add_dependencies(prev, cur);
  add_assumption(cur, possible);
  cnf_.mark();
}

void Encoder::add_mapping(const StepVars& v) {
  const int nl = circuit_.num_qubits(), np = coupling_.num_physical();
  std::vector<Lit> lits;
  for (int l = 0; l < nl; ++l) {
    lits.assign(v.map.begin() + l * np, v.map.begin() + (l + 1) * np);
    exactly_one(cnf_, lits);
  }
  for (int p = 0; p < np; ++p) {
    lits.clear();
    for (int l = 0; l < nl; ++l) lits.push_back(v.map[l * np + p]);
    if (!lits.empty()) at_most_one(cnf_, lits);
  }
}

void Encoder::add_swaps(const StepVars& prev, const StepVars& v) {
  const int nl = circuit_.num_qubits(), np = coupling_.num_physical();
  const auto& edges = coupling_.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    cnf_.add_clause({-v.swap[e], v.touch[edges[e].first]});
    cnf_.add_clause({-v.swap[e], v.touch[edges[e].second]});
  }
  std::vector<Lit> actions(v.swap.begin(), v.swap.end());
  for (int b : v.bridge)
    if (b != 0) actions.push_back(b);
  if (!actions.empty()) exactly_one(cnf_, actions);
  if (bridges_active_) {
    if (np > 2) at_most_k(cnf_, v.touch, 2);
    for (int b : v.bridge) {
      if (b == 0) continue;
      for (int p = 0; p < np; ++p) cnf_.add_clause({-b, -v.touch[p]});
    }
  } else if (!edges.empty()) {
    exactly_two(cnf_, v.touch);
  }
  // A SWAP exchanges the occupants of its endpoints.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Qubit a = edges[e].first, b = edges[e].second;
    for (int l = 0; l < nl; ++l) {
      for (auto [from, to] : {std::pair{a, b}, std::pair{b, a}}) {
        const Lit before = prev.map[l * np + from], after = v.map[l * np + to];
        cnf_.add_clause({-v.swap[e], -before, after});
        cnf_.add_clause({-v.swap[e], before, -after});
      }
    }
  }
  // Untouched qubits keep their occupants.
  for (int p = 0; p < np; ++p)
    for (int l = 0; l < nl; ++l) {
      const Lit before = prev.map[l * np + p], after = v.map[l * np + p];
      cnf_.add_clause({v.touch[p], -before, after});
      cnf_.add_clause({v.touch[p], before, -after});
    }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const Lit ma = v.mapped[edges[e].first], mb = v.mapped[edges[e].second];
    if (options_.ancillary) {
      cnf_.add_clause({-v.swap[e], ma, mb});
    } else {
      cnf_.add_clause({-v.swap[e], ma});
      cnf_.add_clause({-v.swap[e], mb});
    }
  }
}

void Encoder::add_connections(const StepVars& v) {
  const int np = coupling_.num_physical();
  const auto& pairs = registry_.logical_pairs();
  const bool with_bridges = !v.bridge.empty();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const Qubit l = pairs[k].first, r = pairs[k].second;
    for (int p = 0; p < np; ++p)
      for (int q = 0; q < np; ++q) {
        if (p == q) continue;
        const Lit ml = v.map[l * np + p], mr = v.map[r * np + q];
        cnf_.add_clause({-ml, -mr, coupling_.adjacent(p, q) ? v.pair[k] : -v.pair[k]});
        if (with_bridges && v.pair2[k] != 0)
          cnf_.add_clause({-ml, -mr, bridge_paths_.contains(p, q) ? v.pair2[k] : -v.pair2[k]});
      }
  }
  for (std::size_t i = 0; i < slice_.size(); ++i) {
    const std::size_t k = entry_pair_[i];
    const int br = with_bridges ? v.bridge[i] : 0;
    if (br != 0) {
      cnf_.add_clause({-v.current[i], v.pair[k], br});
      cnf_.add_clause({-br, v.current[i]});
      cnf_.add_clause({-br, v.pair2[k]});
    } else {
      cnf_.add_clause({-v.current[i], v.pair[k]});
    }
  }
}

void Encoder::add_dependencies(const StepVars* prev, const StepVars& v) {
  for (std::size_t i = 0; i < slice_.size(); ++i) {
    const Lit c = v.current[i], a = v.advanced[i], d = v.delayed[i];
    exactly_one(cnf_, std::vector<Lit>{c, a, d});
    for (std::size_t j : dag_.pre(i)) {
      cnf_.add_clause({-c, v.advanced[j], v.current[j]});
      cnf_.add_clause({-a, v.advanced[j]});
    }
    for (std::size_t j : dag_.suc(i)) {
      cnf_.add_clause({-c, v.current[j], v.delayed[j]});
      cnf_.add_clause({-d, v.delayed[j]});
    }
    std::vector<Lit> blocked{-d, -v.pair[entry_pair_[i]]};
    for (std::size_t j : dag_.pre(i)) blocked.push_back(v.delayed[j]);
    cnf_.add_clause(blocked);
    if (!prev) {
      cnf_.add_clause({-a});
      continue;
    }
    cnf_.add_clause({-a, prev->current[i], prev->advanced[i]});
    cnf_.add_clause({-prev->delayed[i], c, d});
    // Once done, an entry stays done.
    cnf_.add_clause({-prev->current[i], a});
    cnf_.add_clause({-prev->advanced[i], a});
  }
}

void Encoder::add_assumption(const StepVars& v, bool step_possible) {
  const Lit alpha = v.assumption;
  if (v.delayed.empty()) {
    cnf_.add_clause({alpha});
  } else {
    std::vector<Lit> some_delay{alpha};
    for (Lit d : v.delayed) {
      cnf_.add_clause({-alpha, -d});
      some_delay.push_back(d);
    }
    cnf_.add_clause(some_delay);
  }
  if (!step_possible) cnf_.add_clause({-alpha});
}

}  // namespace swapsat
