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

#include "swapsat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "swapsat/dependency.hpp"
#include "swapsat/errors.hpp"
#include "swapsat/qasm.hpp"

namespace swapsat {

namespace {

using UnaryKey = std::pair<GateKind, std::vector<std::string>>;

std::multiset<UnaryKey> unary_multiset(const Circuit& c) {
  std::multiset<UnaryKey> out;
  for (const Gate& g : c.gates())
    if (is_unary(g.kind)) out.insert({g.kind, g.params});
  return out;
}

class Replay {
 public:
  Replay(const Circuit& original, const Plan& plan, VerifyReport& report)
      : original_(original),
        plan_(plan),
        report_(report),
        slice_(extract_cnot_slice(original)),
        order_(original, plan.dependencies),
        executed_(original.size(), false),
        step_of_(slice_.size(), -1),
        map_(plan.initial_map),
        inv_(plan.num_physical, -1) {
    for (std::size_t t = 0; t < plan.steps.size(); ++t)
      for (std::size_t i : plan.steps[t].cnots) step_of_[i] = static_cast<int>(t);
    for (std::size_t l = 0; l < map_.size(); ++l) inv_[map_[l]] = static_cast<Qubit>(l);
  }

  void run(const Circuit& mapped) {
    const auto& gates = mapped.gates();
    for (std::size_t k = 0; k < gates.size() && report_.passed(); ++k) {
      const Gate& g = gates[k];
      switch (g.kind) {
        case GateKind::Barrier: barrier(g); break;
        case GateKind::Measure: measure(g); break;
        case GateKind::Swap: swap_gate(g); break;
        case GateKind::Cx:
          advance_over_bridges();
          if (matches_bridge(gates, k)) {
            k += 3;
          } else {
            cnot(g);
          }
          break;
        default: unary(g); break;
      }
    }
    if (!report_.passed()) return;
    advance_over_bridges();
    if (t_ + 1 != plan_.steps.size()) return fail(&VerifyReport::mapping_consistent, "mapped circuit stops before the last plan step");
    for (std::size_t t = 1; t < plan_.steps.size(); ++t)
      if (plan_.steps[t].action.kind == ActionKind::Bridge && !bridge_done_.contains(t))
        return fail(&VerifyReport::mapping_consistent, "bridge of step " + std::to_string(t) + " missing");
    for (const Gate& g : original_.gates())
      if (!executed_[g.index])
        return fail(&VerifyReport::gate_counts_ok, "original gate " + std::to_string(g.index) + " (" + std::string(g.name()) + ") missing");
    if (map_ != plan_.final_map) fail(&VerifyReport::mapping_consistent, "final mapping differs from the plan");
  }

 private:
  void fail(bool VerifyReport::*field, const std::string& why) {
    report_.*field = false;
    if (report_.first_violation.empty()) report_.first_violation = why;
  }

  bool ready(std::size_t g) const {
    bool ok = true;
    order_.ancestors(g).for_each([&](std::size_t a) {
      const GateKind kind = original_.gate(a).kind;
      if (!executed_[a] && kind != GateKind::Measure && kind != GateKind::Barrier) ok = false;
    });
    return ok;
  }

  bool step_done(std::size_t t) const {
    for (std::size_t i : plan_.steps[t].cnots)
      if (!executed_[slice_.cnots[i].gate_index]) return false;
    return true;
  }

  void advance_over_bridges() {
    while (t_ + 1 < plan_.steps.size() && plan_.steps[t_ + 1].action.kind == ActionKind::Bridge && step_done(t_)) ++t_;
  }

  Qubit logical(Qubit p, const char* what) {
    if (p < 0 || p >= static_cast<Qubit>(inv_.size()) || inv_[p] < 0) {
      fail(&VerifyReport::mapping_consistent, std::string(what) + " on unmapped physical qubit " + std::to_string(p));
      return -1;
    }
    return inv_[p];
  }

  void apply_swap(Qubit a, Qubit b) {
    std::swap(inv_[a], inv_[b]);
    if (inv_[a] >= 0) map_[inv_[a]] = a;
    if (inv_[b] >= 0) map_[inv_[b]] = b;
  }

  void barrier(const Gate& g) {
    std::set<Qubit> logicals;
    for (Qubit p : g.qubits) {
      const Qubit l = logical(p, "barrier");
      if (l < 0) return;
      logicals.insert(l);
    }
    for (const Gate& o : original_.gates())
      if (o.kind == GateKind::Barrier && !executed_[o.index] &&
          std::set<Qubit>(o.qubits.begin(), o.qubits.end()) == logicals) {
        executed_[o.index] = true;
        return;
      }
    fail(&VerifyReport::gate_counts_ok, "unexpected barrier");
  }

  void measure(const Gate& g) {
    const Qubit l = logical(g.qubits[0], "measure");
    if (l < 0) return;
    for (const Gate& o : original_.gates())
      if (o.kind == GateKind::Measure && !executed_[o.index] && o.qubits[0] == l && o.cbit == g.cbit) {
        executed_[o.index] = true;
        return;
      }
    fail(&VerifyReport::mapping_consistent, "measure of logical " + std::to_string(l) + " does not match the original");
  }

  // Finds the unexecuted slice entry matching roles at the current step.
  void execute_entry(Qubit lc, Qubit ld, bool is_swap, const std::string& what) {
    std::optional<std::size_t> unready, other_step, flipped;
    for (const SliceEntry& e : slice_.cnots) {
      if (executed_[e.gate_index] || e.is_swap != is_swap) continue;
      const bool same = e.control == lc && e.data == ld;
      const bool reversed = e.control == ld && e.data == lc;
      if (!same && !(is_swap && reversed)) {
        if (reversed && !flipped) flipped = e.id;
        continue;
      }
      if (step_of_[e.id] != static_cast<int>(t_)) {
        if (!other_step) other_step = e.id;
        continue;
      }
      if (!ready(e.gate_index)) {
        if (!unready) unready = e.id;
        continue;
      }
      executed_[e.gate_index] = true;
      return;
    }
    if (unready) return fail(&VerifyReport::dependency_ok, what + " runs before its predecessors (entry " + std::to_string(*unready) + ")");
    if (other_step) return fail(&VerifyReport::mapping_consistent, what + " is not scheduled at step " + std::to_string(t_));
    if (flipped) return fail(&VerifyReport::mapping_consistent, what + " has control and data swapped");
    fail(&VerifyReport::mapping_consistent, what + " matches no original gate");
  }

  void swap_gate(const Gate& g) {
    const Qubit a = g.qubits[0], b = g.qubits[1];
    if (t_ + 1 < plan_.steps.size() && step_done(t_)) {
      const Action& next = plan_.steps[t_ + 1].action;
      if (next.kind == ActionKind::Swap && next.swap == QubitPair::of(a, b)) {
        ++t_;
        apply_swap(a, b);
        return;
      }
    }
    const Qubit la = logical(a, "swap"), lb = logical(b, "swap");
    if (la < 0 || lb < 0) return;
    execute_entry(la, lb, true, "swap on physical (" + std::to_string(a) + "," + std::to_string(b) + ")");
  }

  bool matches_bridge(const std::vector<Gate>& gates, std::size_t k) {
    const Action& a = plan_.steps[t_].action;
    if (a.kind != ActionKind::Bridge || bridge_done_.contains(t_) || k + 3 >= gates.size()) return false;
    const std::vector<std::vector<Qubit>> ladder{{a.middle, a.data}, {a.control, a.middle},
                                                 {a.middle, a.data}, {a.control, a.middle}};
    for (std::size_t j = 0; j < 4; ++j)
      if (gates[k + j].kind != GateKind::Cx || gates[k + j].qubits != ladder[j]) return false;
    const SliceEntry& e = slice_.cnots.at(a.cnot);
    if (executed_[e.gate_index] || !ready(e.gate_index)) return false;
    if (map_[e.control] != a.control || map_[e.data] != a.data) {
      fail(&VerifyReport::mapping_consistent, "bridge endpoints do not hold the CNOT's qubits");
      return true;
    }
    executed_[e.gate_index] = true;
    bridge_done_.insert(t_);
    return true;
  }

  void cnot(const Gate& g) {
    const Qubit lc = logical(g.qubits[0], "cx"), ld = logical(g.qubits[1], "cx");
    if (lc < 0 || ld < 0) return;
    execute_entry(lc, ld, false, "cx on physical (" + std::to_string(g.qubits[0]) + "," + std::to_string(g.qubits[1]) + ")");
  }

  void unary(const Gate& g) {
    const Qubit l = logical(g.qubits[0], std::string(g.name()).c_str());
    if (l < 0) return;
    bool blocked = false;
    for (const Gate& o : original_.gates()) {
      if (executed_[o.index] || o.kind != g.kind || o.params != g.params || o.qubits[0] != l) continue;
      if (!ready(o.index)) {
        blocked = true;
        continue;
      }
      executed_[o.index] = true;
      return;
    }
    if (blocked) return fail(&VerifyReport::dependency_ok, std::string(g.name()) + " on logical " + std::to_string(l) + " runs too early");
    fail(&VerifyReport::gate_counts_ok, "unexpected " + std::string(g.name()) + " on logical " + std::to_string(l));
  }

  const Circuit& original_;
  const Plan& plan_;
  VerifyReport& report_;
  CnotSlice slice_;
  GateOrder order_;
  std::vector<bool> executed_;
  std::vector<int> step_of_;
  std::vector<Qubit> map_, inv_;
  std::size_t t_ = 0;
  std::set<std::size_t> bridge_done_;
};

}  // namespace

VerifyReport check_structural(const Circuit& original, const Circuit& mapped,
                              const CouplingGraph& coupling, const Plan& plan) {
  VerifyReport report;
  auto fail = [&](bool VerifyReport::*field, const std::string& why) {
    report.*field = false;
    if (report.first_violation.empty()) report.first_violation = why;
  };
  if (mapped.num_qubits() != coupling.num_physical()) {
    fail(&VerifyReport::mapping_consistent, "mapped circuit width differs from the platform");
    return report;
  }
  for (const Gate& g : mapped.gates())
    if (g.is_two_qubit() && !coupling.adjacent(g.qubits[0], g.qubits[1]))
      fail(&VerifyReport::connectivity_ok, std::string(g.name()) + " on non-adjacent qubits (" +
                                               std::to_string(g.qubits[0]) + "," + std::to_string(g.qubits[1]) + ")");
  if (cnot_equivalent_count(mapped) != cnot_equivalent_count(original) + 3 * plan.num_actions())
    fail(&VerifyReport::gate_counts_ok, "CNOT count is not original + 3 per action");
  if (unary_multiset(mapped) != unary_multiset(original))
    fail(&VerifyReport::gate_counts_ok, "single-qubit gates differ from the original");
  try {
    validate_plan(plan, original, coupling);
  } catch (const InvalidArgument& e) {
    fail(&VerifyReport::mapping_consistent, e.what());
    return report;
  }
  if (!report.passed()) return report;
  Replay(original, plan, report).run(mapped);
  return report;
}

StateVector::StateVector(int num_qubits) : n_(num_qubits), amp_(std::size_t{1} << num_qubits) {
  amp_[0] = 1.0;
}

void StateVector::apply_1q(int q, const std::complex<double> (&u)[2][2]) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    if (i & bit) continue;
    const auto a0 = amp_[i], a1 = amp_[i | bit];
    amp_[i] = u[0][0] * a0 + u[0][1] * a1;
    amp_[i | bit] = u[1][0] * a0 + u[1][1] * a1;
  }
}

void StateVector::apply(const Gate& g) {
  using C = std::complex<double>;
  const C i1{0, 1};
  auto angle = [&](std::size_t k) { return evaluate_angle(g.params.at(k)); };
  auto diag = [&](C a, C b) {
    const C u[2][2] = {{a, 0}, {0, b}};
    apply_1q(g.qubits[0], u);
  };
  auto u3 = [&](double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const C u[2][2] = {{c, -std::exp(i1 * lambda) * s},
                       {std::exp(i1 * phi) * s, std::exp(i1 * (phi + lambda)) * c}};
    apply_1q(g.qubits[0], u);
  };
  constexpr double pi = std::numbers::pi;
  switch (g.kind) {
    case GateKind::X: { const C u[2][2] = {{0, 1}, {1, 0}}; apply_1q(g.qubits[0], u); break; }
    case GateKind::Y: { const C u[2][2] = {{0, -i1}, {i1, 0}}; apply_1q(g.qubits[0], u); break; }
    case GateKind::Z: diag(1, -1); break;
    case GateKind::H: {
      const double r = 1 / std::sqrt(2.0);
      const C u[2][2] = {{r, r}, {r, -r}};
      apply_1q(g.qubits[0], u);
      break;
    }
    case GateKind::S: diag(1, i1); break;
    case GateKind::Sdg: diag(1, -i1); break;
    case GateKind::T: diag(1, std::exp(i1 * (pi / 4))); break;
    case GateKind::Tdg: diag(1, std::exp(-i1 * (pi / 4))); break;
    case GateKind::Rx: {
      const double t = angle(0);
      const C u[2][2] = {{std::cos(t / 2), -i1 * std::sin(t / 2)}, {-i1 * std::sin(t / 2), std::cos(t / 2)}};
      apply_1q(g.qubits[0], u);
      break;
    }
    case GateKind::Ry: {
      const double t = angle(0);
      const C u[2][2] = {{std::cos(t / 2), -std::sin(t / 2)}, {std::sin(t / 2), std::cos(t / 2)}};
      apply_1q(g.qubits[0], u);
      break;
    }
    case GateKind::Rz: {
      const double t = angle(0);
      diag(std::exp(-i1 * (t / 2)), std::exp(i1 * (t / 2)));
      break;
    }
    case GateKind::U1: diag(1, std::exp(i1 * angle(0))); break;
    case GateKind::U2: u3(pi / 2, angle(0), angle(1)); break;
    case GateKind::U3: u3(angle(0), angle(1), angle(2)); break;
    case GateKind::Cx: {
      const std::size_t c = std::size_t{1} << g.qubits[0], d = std::size_t{1} << g.qubits[1];
      for (std::size_t i = 0; i < amp_.size(); ++i)
        if ((i & c) && !(i & d)) std::swap(amp_[i], amp_[i | d]);
      break;
    }
    case GateKind::Swap: {
      const std::size_t a = std::size_t{1} << g.qubits[0], b = std::size_t{1} << g.qubits[1];
      for (std::size_t i = 0; i < amp_.size(); ++i)
        if ((i & a) && !(i & b)) std::swap(amp_[i], amp_[(i & ~a) | b]);
      break;
    }
    case GateKind::Measure:
    case GateKind::Barrier:
      break;
  }
}

EquivalenceResult check_unitary_equivalence(const Circuit& original, const Circuit& mapped,
                                            const std::vector<Qubit>& initial_map,
                                            const std::vector<Qubit>& final_map, int limit) {
  EquivalenceResult result;
  std::set<Qubit> used(initial_map.begin(), initial_map.end());
  for (const Gate& g : mapped.gates())
    if (g.kind != GateKind::Barrier && g.kind != GateKind::Measure) used.insert(g.qubits.begin(), g.qubits.end());
  result.used_qubits = static_cast<int>(used.size());
  if (result.used_qubits > limit) {
    result.skipped = true;
    result.detail = std::to_string(result.used_qubits) + " used qubits exceed the limit of " + std::to_string(limit);
    return result;
  }
  std::map<Qubit, int> pack;
  for (Qubit p : used) pack.emplace(p, static_cast<int>(pack.size()));
  for (Qubit p : final_map)
    if (!pack.contains(p)) {
      result.detail = "final map leaves the used qubits";
      return result;
    }
  const int nl = original.num_qubits(), nu = result.used_qubits;
  std::vector<Gate> packed;
  for (const Gate& g : mapped.gates()) {
    if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure) continue;
    Gate copy = g;
    for (Qubit& q : copy.qubits) q = pack.at(q);
    packed.push_back(std::move(copy));
  }
  auto place = [&](const std::vector<std::complex<double>>& logical, const std::vector<Qubit>& map) {
    std::vector<std::complex<double>> out(std::size_t{1} << nu);
    for (std::size_t x = 0; x < logical.size(); ++x) {
      std::size_t y = 0;
      for (int l = 0; l < nl; ++l)
        if ((x >> l) & 1) y |= std::size_t{1} << pack.at(map[l]);
      out[y] = logical[x];
    }
    return out;
  };
  auto compare = [&](const std::vector<std::complex<double>>& input, const std::string& label) {
    StateVector orig(nl);
    orig.amplitudes() = input;
    for (const Gate& g : original.gates()) orig.apply(g);
    StateVector phys(nu);
    phys.amplitudes() = place(input, initial_map);
    for (const Gate& g : packed) phys.apply(g);
    const auto expected = place(orig.amplitudes(), final_map);
    std::complex<double> overlap = 0;
    for (std::size_t i = 0; i < expected.size(); ++i) overlap += std::conj(expected[i]) * phys.amplitudes()[i];
    if (std::abs(overlap) > 1 - 1e-9) return true;
    result.detail = "states differ for input " + label + " (overlap " + std::to_string(std::abs(overlap)) + ")";
    return false;
  };
  const std::size_t dim = std::size_t{1} << nl;
  for (std::size_t x = 0; x < dim; ++x) {
    std::vector<std::complex<double>> basis(dim);
    basis[x] = 1;
    if (!compare(basis, "|" + std::to_string(x) + ">")) return result;
  }
  std::mt19937 rng(12345);
  std::normal_distribution<double> normal;
  for (int k = 0; k < 16; ++k) {
    std::vector<std::complex<double>> psi(dim);
    double norm = 0;
    for (auto& a : psi) {
      a = {normal(rng), normal(rng)};
      norm += std::norm(a);
    }
    for (auto& a : psi) a /= std::sqrt(norm);
    if (!compare(psi, "random #" + std::to_string(k))) return result;
  }
  result.equivalent = true;
  return result;
}

namespace {

struct OracleState {
  std::vector<Qubit> map;
  std::uint64_t done = 0;

  std::string key() const {
    std::string k(map.begin(), map.end());
    k.append(reinterpret_cast<const char*>(&done), sizeof done);
    return k;
  }
};

class OracleSearch {
 public:
  OracleSearch(const Circuit& circuit, const CouplingGraph& coupling, const OracleOptions& options)
      : coupling_(coupling),
        options_(options),
        slice_(extract_cnot_slice(circuit)),
        paths_(distance2_pairs(coupling)),
        nl_(circuit.num_qubits()) {
    if (slice_.size() > 64) throw InvalidArgument("oracle supports at most 64 two-qubit gates");
    if (coupling.num_physical() > 255) throw InvalidArgument("oracle supports at most 255 physical qubits");
    if (nl_ > coupling.num_physical()) throw InfeasibleError("circuit needs more qubits than the platform has");
    const DepDag dag = build_dag(circuit, options.relaxed ? DagKind::Relaxed : DagKind::Strict);
    preds_.resize(slice_.size());
    for (std::size_t i = 0; i < slice_.size(); ++i)
      for (std::size_t j : dag.pre(i)) preds_[i] |= bit(j);
    full_ = slice_.empty() ? 0 : (~std::uint64_t{0} >> (64 - slice_.size()));
  }

  std::optional<int> run(int cap) {
    if (slice_.empty()) return 0;
    return options_.greedy_closure ? run_greedy(cap) : run_zero_one(cap);
  }

 private:
  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  bool ready(const OracleState& s, std::size_t i) const {
    return !(s.done & bit(i)) && (preds_[i] & ~s.done) == 0;
  }
  bool executable(const OracleState& s, std::size_t i) const {
    const SliceEntry& e = slice_.cnots[i];
    return ready(s, i) && coupling_.adjacent(s.map[e.control], s.map[e.data]);
  }

  void close(OracleState& s) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < slice_.size(); ++i)
        if (executable(s, i)) {
          s.done |= bit(i);
          changed = true;
        }
    }
  }

  template <typename F>
  void each_start(F&& f) const {
    const int np = coupling_.num_physical();
    std::vector<Qubit> map(nl_);
    std::vector<bool> used(np, false);
    auto rec = [&](auto&& self, int l) -> void {
      if (l == nl_) {
        f(OracleState{map, 0});
        return;
      }
      for (Qubit p = 0; p < np; ++p) {
        if (used[p]) continue;
        used[p] = true;
        map[l] = p;
        self(self, l + 1);
        used[p] = false;
      }
    };
    rec(rec, 0);
  }

  // Unit-cost moves: routing swaps and bridged executions.
  template <typename F>
  void each_move(const OracleState& s, F&& f) const {
    std::vector<Qubit> inv(coupling_.num_physical(), -1);
    for (int l = 0; l < nl_; ++l) inv[s.map[l]] = l;
    for (const QubitPair& e : coupling_.edges()) {
      const bool a = inv[e.first] >= 0, b = inv[e.second] >= 0;
      if (options_.ancillary ? !(a || b) : !(a && b)) continue;
      OracleState n = s;
      if (a) n.map[inv[e.first]] = e.second;
      if (b) n.map[inv[e.second]] = e.first;
      f(std::move(n));
    }
    if (!options_.bridges) return;
    for (std::size_t i = 0; i < slice_.size(); ++i) {
      const SliceEntry& e = slice_.cnots[i];
      if (e.is_swap || !ready(s, i) || !paths_.contains(s.map[e.control], s.map[e.data])) continue;
      OracleState n = s;
      n.done |= bit(i);
      f(std::move(n));
    }
  }

  std::optional<int> run_greedy(int cap) {
    std::unordered_set<std::string> seen;
    std::vector<OracleState> frontier;
    bool solved = false;
    each_start([&](OracleState s) {
      close(s);
      if (s.done == full_) solved = true;
      if (seen.insert(s.key()).second) frontier.push_back(std::move(s));
    });
    if (solved) return 0;
    for (int depth = 1; depth <= cap && !frontier.empty(); ++depth) {
      std::vector<OracleState> next;
      for (const OracleState& s : frontier) {
        each_move(s, [&](OracleState n) {
          close(n);
          if (n.done == full_) solved = true;
          if (seen.insert(n.key()).second) next.push_back(std::move(n));
        });
        if (solved) return depth;
      }
      frontier = std::move(next);
    }
    return std::nullopt;
  }

  std::optional<int> run_zero_one(int cap) {
    std::unordered_map<std::string, int> dist;
    std::deque<std::pair<OracleState, int>> queue;
    auto push = [&](OracleState s, int d, bool front) {
      const std::string k = s.key();
      auto it = dist.find(k);
      if (it != dist.end() && it->second <= d) return;
      dist[k] = d;
      if (front) queue.emplace_front(std::move(s), d);
      else queue.emplace_back(std::move(s), d);
    };
    each_start([&](OracleState s) { push(std::move(s), 0, false); });
    while (!queue.empty()) {
      auto [s, d] = std::move(queue.front());
      queue.pop_front();
      if (dist.at(s.key()) < d) continue;
      if (s.done == full_) return d;
      for (std::size_t i = 0; i < slice_.size(); ++i)
        if (executable(s, i)) {
          OracleState n = s;
          n.done |= bit(i);
          push(std::move(n), d, true);
        }
      if (d + 1 > cap) continue;
      each_move(s, [&](OracleState n) { push(std::move(n), d + 1, false); });
    }
    return std::nullopt;
  }

  const CouplingGraph& coupling_;
  OracleOptions options_;
  CnotSlice slice_;
  BridgePaths paths_;
  int nl_;
  std::vector<std::uint64_t> preds_;
  std::uint64_t full_ = 0;
};

}  // namespace

std::optional<int> oracle_min_swaps(const Circuit& circuit, const CouplingGraph& coupling,
                                    const OracleOptions& options, int cap) {
  return OracleSearch(circuit, coupling, options).run(cap);
}

}  // namespace swapsat
