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

#include <gtest/gtest.h>

#include <random>

#include "support/fixtures.hpp"
#include "support/random_circuit.hpp"
#include "swapsat/errors.hpp"
#include "swapsat/synthesis.hpp"
#include "swapsat/verify.hpp"

namespace swapsat {
namespace {

using testing::or_circuit;
using testing::or_measured_circuit;

struct Routed {
  Circuit original;
  CouplingGraph coupling;
  Plan plan;
  Circuit mapped;
};

Routed route(const Circuit& c, const CouplingGraph& g, EncodeOptions e = {}) {
  SynthesisOptions o;
  o.encode = e;
  MappedResult r = synthesize(c, g, o);
  EXPECT_EQ(r.status, SynthesisStatus::Optimal);
  return {c, g, *r.plan, *r.mapped};
}

Circuit with_gates(const Circuit& like, std::vector<Gate> gates) {
  Circuit out(like.num_qubits(), like.qreg_name(), like.name());
  for (const auto& reg : like.cregs()) out.add_creg(reg);
  for (Gate& g : gates) out.append(std::move(g));
  return out;
}

std::size_t first_index(const Circuit& c, GateKind kind) {
  for (const Gate& g : c.gates())
    if (g.kind == kind) return g.index;
  ADD_FAILURE() << "no " << gate_name(kind);
  return 0;
}

TEST(Structural, AcceptsSynthesizedOr) {
  for (bool bridges : {false, true})
    for (bool relaxed : {false, true}) {
      EncodeOptions e;
      e.bridges = bridges;
      e.relaxed = relaxed;
      for (const char* platform : {"linear-3", "melbourne"}) {
        Routed r = route(or_measured_circuit(), load_coupling(platform), e);
        VerifyReport rep = check_structural(r.original, r.mapped, r.coupling, r.plan);
        EXPECT_TRUE(rep.passed()) << platform << " " << e.combo_name() << ": " << rep.first_violation;
        EXPECT_TRUE(rep.first_violation.empty());
      }
    }
}

TEST(Structural, RejectsNonAdjacentCnot) {
  Routed r = route(or_circuit(), linear_coupling(3));
  auto gates = r.mapped.gates();
  const std::size_t k = first_index(r.mapped, GateKind::Cx);
  gates[k].qubits = {0, 2};
  VerifyReport rep = check_structural(r.original, with_gates(r.mapped, gates), r.coupling, r.plan);
  EXPECT_FALSE(rep.connectivity_ok);
  EXPECT_FALSE(rep.passed());
  EXPECT_NE(rep.first_violation.find("non-adjacent"), std::string::npos);
}

TEST(Structural, RejectsFlippedRoles) {
  Routed r = route(or_circuit(), linear_coupling(3));
  auto gates = r.mapped.gates();
  const std::size_t k = first_index(r.mapped, GateKind::Cx);
  std::swap(gates[k].qubits[0], gates[k].qubits[1]);
  VerifyReport rep = check_structural(r.original, with_gates(r.mapped, gates), r.coupling, r.plan);
  EXPECT_FALSE(rep.mapping_consistent);
  EXPECT_NE(rep.first_violation.find("swapped"), std::string::npos);
}

TEST(Structural, RejectsMissingRoutingSwap) {
  Routed r = route(or_circuit(), linear_coupling(3));
  ASSERT_EQ(r.plan.num_swaps(), 2U);
  auto gates = r.mapped.gates();
  gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(first_index(r.mapped, GateKind::Swap)));
  VerifyReport rep = check_structural(r.original, with_gates(r.mapped, gates), r.coupling, r.plan);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.gate_counts_ok);
}

TEST(Structural, RejectsUnaryMovedPastItsSuccessor) {
  Routed r = route(or_circuit(), linear_coupling(3));
  auto gates = r.mapped.gates();
  // The last gate of Or is h q[2], which must follow the final cx on q[2].
  // Move it to the front.
  std::size_t h = gates.size();
  for (std::size_t k = gates.size(); k-- > 0;)
    if (gates[k].kind == GateKind::H) {
      h = k;
      break;
    }
  ASSERT_LT(h, gates.size());
  Gate moved = gates[h];
  gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(h));
  // Emit it on the physical qubit holding logical 2 at the start.
  moved.qubits = {r.plan.initial_map[2]};
  gates.insert(gates.begin(), moved);
  VerifyReport rep = check_structural(r.original, with_gates(r.mapped, gates), r.coupling, r.plan);
  EXPECT_FALSE(rep.dependency_ok) << rep.first_violation;
}

TEST(Structural, RejectsChangedAngleAndExtraGate) {
  Circuit c(2);
  c.append(make_gate(GateKind::Rz, {0}, {"pi/4"}));
  c.append(make_gate(GateKind::Cx, {0, 1}));
  Routed r = route(c, linear_coupling(2));
  auto gates = r.mapped.gates();
  gates[first_index(r.mapped, GateKind::Rz)].params = {"pi/8"};
  EXPECT_FALSE(check_structural(c, with_gates(r.mapped, gates), r.coupling, r.plan).gate_counts_ok);
  gates = r.mapped.gates();
  gates.push_back(make_gate(GateKind::Cx, {0, 1}));
  EXPECT_FALSE(check_structural(c, with_gates(r.mapped, gates), r.coupling, r.plan).gate_counts_ok);
}

TEST(Structural, RejectsReorderedDependentCnots) {
  Circuit c(3);
  c.append(make_gate(GateKind::Cx, {0, 1}));
  c.append(make_gate(GateKind::H, {1}));
  c.append(make_gate(GateKind::Cx, {1, 2}));
  Routed r = route(c, linear_coupling(3));
  ASSERT_EQ(r.plan.num_actions(), 0U);
  auto gates = r.mapped.gates();
  ASSERT_EQ(gates.size(), 3U);
  std::swap(gates[0], gates[2]);
  VerifyReport rep = check_structural(c, with_gates(r.mapped, gates), r.coupling, r.plan);
  EXPECT_FALSE(rep.dependency_ok);
}

TEST(Structural, RejectsPlanThatDisagreesWithCircuit) {
  Routed r = route(or_circuit(), linear_coupling(3));
  Plan p = r.plan;
  p.final_map = p.initial_map;
  VerifyReport rep = check_structural(r.original, r.mapped, r.coupling, p);
  EXPECT_FALSE(rep.mapping_consistent);
  EXPECT_NE(rep.first_violation.find("invalid plan"), std::string::npos);
}

TEST(Structural, RejectsWrongWidth) {
  Routed r = route(or_circuit(), linear_coupling(3));
  EXPECT_FALSE(check_structural(r.original, r.mapped, linear_coupling(4), r.plan).passed());
}

TEST(StateVector, SwapEqualsThreeCnots) {
  std::mt19937 rng(3);
  std::normal_distribution<double> n;
  StateVector a(3), b(3);
  for (auto& x : a.amplitudes()) x = {n(rng), n(rng)};
  b.amplitudes() = a.amplitudes();
  a.apply(make_gate(GateKind::Swap, {0, 2}));
  b.apply(make_gate(GateKind::Cx, {0, 2}));
  b.apply(make_gate(GateKind::Cx, {2, 0}));
  b.apply(make_gate(GateKind::Cx, {0, 2}));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 0, 1e-12);
}

TEST(StateVector, BridgeLadderEqualsDistantCnot) {
  // CX(m,d) CX(c,m) CX(m,d) CX(c,m) == CX(c,d) for every middle state.
  std::mt19937 rng(4);
  std::normal_distribution<double> n;
  StateVector a(3), b(3);
  for (auto& x : a.amplitudes()) x = {n(rng), n(rng)};
  b.amplitudes() = a.amplitudes();
  a.apply(make_gate(GateKind::Cx, {0, 2}));
  for (auto q : std::vector<std::vector<Qubit>>{{1, 2}, {0, 1}, {1, 2}, {0, 1}})
    b.apply(make_gate(GateKind::Cx, q));
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 0, 1e-12);
}

TEST(StateVector, InversePairsCancel) {
  const std::vector<std::pair<Gate, Gate>> pairs{
      {make_gate(GateKind::S, {0}), make_gate(GateKind::Sdg, {0})},
      {make_gate(GateKind::T, {0}), make_gate(GateKind::Tdg, {0})},
      {make_gate(GateKind::Rx, {0}, {"0.7"}), make_gate(GateKind::Rx, {0}, {"-0.7"})},
      {make_gate(GateKind::Ry, {0}, {"pi/3"}), make_gate(GateKind::Ry, {0}, {"-pi/3"})},
      {make_gate(GateKind::U3, {0}, {"0.4", "0.9", "1.3"}), make_gate(GateKind::U3, {0}, {"-0.4", "-1.3", "-0.9"})},
      {make_gate(GateKind::H, {0}), make_gate(GateKind::H, {0})},
      {make_gate(GateKind::Y, {0}), make_gate(GateKind::Y, {0})},
  };
  for (const auto& [g, inv] : pairs) {
    StateVector s(1);
    s.amplitudes() = {{0.6, 0.0}, {0.0, 0.8}};
    s.apply(g);
    s.apply(inv);
    EXPECT_NEAR(std::abs(s.amplitudes()[0] - std::complex<double>(0.6, 0)), 0, 1e-12) << g.name();
    EXPECT_NEAR(std::abs(s.amplitudes()[1] - std::complex<double>(0, 0.8)), 0, 1e-12) << g.name();
  }
}

TEST(StateVector, RotationsMatchNamedGates) {
  // Up to global phase: rz(pi/2) ~ s, u1(pi/4) == t, u2(0,pi) == h.
  auto close_up_to_phase = [](const StateVector& a, const StateVector& b) {
    std::complex<double> o = 0;
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) o += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    return std::abs(o) > 1 - 1e-12;
  };
  const std::vector<std::pair<Gate, Gate>> same{
      {make_gate(GateKind::Rz, {0}, {"pi/2"}), make_gate(GateKind::S, {0})},
      {make_gate(GateKind::U1, {0}, {"pi/4"}), make_gate(GateKind::T, {0})},
      {make_gate(GateKind::U2, {0}, {"0", "pi"}), make_gate(GateKind::H, {0})},
      {make_gate(GateKind::Rx, {0}, {"pi"}), make_gate(GateKind::X, {0})},
  };
  for (const auto& [g, h] : same) {
    StateVector a(1), b(1);
    a.amplitudes() = b.amplitudes() = {{0.6, 0.0}, {0.0, 0.8}};
    a.apply(g);
    b.apply(h);
    EXPECT_TRUE(close_up_to_phase(a, b)) << g.name();
  }
}

TEST(Unitary, SynthesizedCircuitsAreEquivalent) {
  std::mt19937 rng(11);
  for (int it = 0; it < 20; ++it) {
    testing::RandomCircuitSpec spec;
    spec.qubits = 3 + it % 2;
    spec.cnots = 5;
    spec.swap_rate = 0.1;
    spec.barrier_rate = 0.1;
    Circuit c = testing::random_circuit(rng, spec);
    EncodeOptions e;
    e.bridges = it % 2;
    e.relaxed = it % 3 == 0;
    Routed r = route(c, grid_coupling(2, 3), e);
    EquivalenceResult eq = check_unitary_equivalence(c, r.mapped, r.plan.initial_map, r.plan.final_map);
    EXPECT_FALSE(eq.skipped);
    EXPECT_TRUE(eq.equivalent) << eq.detail;
  }
}

TEST(Unitary, DetectsMutations) {
  Routed r = route(or_circuit(), linear_coupling(3));
  auto gates = r.mapped.gates();
  const std::size_t k = first_index(r.mapped, GateKind::T);
  gates[k].kind = GateKind::Tdg;
  EquivalenceResult eq = check_unitary_equivalence(r.original, with_gates(r.mapped, gates),
                                                   r.plan.initial_map, r.plan.final_map);
  EXPECT_FALSE(eq.equivalent);
  EXPECT_FALSE(eq.detail.empty());
  EXPECT_FALSE(check_unitary_equivalence(r.original, r.mapped, r.plan.initial_map, r.plan.initial_map).equivalent);
}

TEST(Unitary, SkipsWideCircuits) {
  Circuit c(12);
  for (int q = 0; q + 1 < 12; ++q) c.append(make_gate(GateKind::Cx, {q, q + 1}));
  Routed r = route(c, linear_coupling(12));
  EquivalenceResult eq = check_unitary_equivalence(c, r.mapped, r.plan.initial_map, r.plan.final_map);
  EXPECT_TRUE(eq.skipped);
  EXPECT_EQ(eq.used_qubits, 12);
  EXPECT_TRUE(check_unitary_equivalence(c, r.mapped, r.plan.initial_map, r.plan.final_map, 12).equivalent);
}

TEST(Oracle, OrOnLine) {
  const CouplingGraph line = linear_coupling(3);
  OracleOptions o;
  EXPECT_EQ(oracle_min_swaps(or_circuit(), line, o, 10), 2);
  o.relaxed = true;
  EXPECT_EQ(oracle_min_swaps(or_circuit(), line, o, 10), 1);
  o.greedy_closure = false;
  EXPECT_EQ(oracle_min_swaps(or_circuit(), line, o, 10), 1);
  o.relaxed = false;
  EXPECT_EQ(oracle_min_swaps(or_circuit(), line, o, 10), 2);
  EXPECT_EQ(oracle_min_swaps(or_circuit(), line, o, 1), std::nullopt);
}

TEST(Oracle, TrivialCases) {
  Circuit empty(2);
  EXPECT_EQ(oracle_min_swaps(empty, linear_coupling(2), {}, 0), 0);
  Circuit triangle(3);
  triangle.append(make_gate(GateKind::Cx, {0, 1}));
  triangle.append(make_gate(GateKind::Cx, {1, 2}));
  triangle.append(make_gate(GateKind::Cx, {2, 0}));
  EXPECT_EQ(oracle_min_swaps(triangle, complete_coupling(3), {}, 5), 0);
  EXPECT_EQ(oracle_min_swaps(triangle, linear_coupling(3), {}, 5), 1);
  OracleOptions b;
  b.bridges = true;
  EXPECT_EQ(oracle_min_swaps(triangle, linear_coupling(3), b, 5), 1);
  EXPECT_THROW(oracle_min_swaps(triangle, linear_coupling(2), {}, 5), InfeasibleError);
}

TEST(Oracle, AncillaryModeMatters) {
  // Star with an idle leaf: without ancillas the centre qubit can only
  // trade places with mapped qubits.
  Circuit c(3);
  c.append(make_gate(GateKind::Cx, {0, 1}));
  c.append(make_gate(GateKind::Cx, {1, 2}));
  c.append(make_gate(GateKind::Cx, {2, 0}));
  c.append(make_gate(GateKind::Cx, {0, 1}));
  const CouplingGraph line = linear_coupling(4);
  OracleOptions anc, plain;
  plain.ancillary = false;
  const auto a = oracle_min_swaps(c, line, anc, 6);
  const auto p = oracle_min_swaps(c, line, plain, 6);
  ASSERT_TRUE(a && p);
  EXPECT_LE(*a, *p);
}

TEST(Oracle, AgreesWithItsNonGreedyVariant) {
  std::mt19937 rng(5);
  for (int it = 0; it < 40; ++it) {
    testing::RandomCircuitSpec spec;
    spec.qubits = 3 + it % 2;
    spec.cnots = 3 + it % 5;
    Circuit c = testing::random_circuit(rng, spec);
    OracleOptions o;
    o.bridges = it % 2;
    o.relaxed = it % 3 == 0;
    o.ancillary = it % 5 != 0;
    const auto greedy = oracle_min_swaps(c, linear_coupling(4), o, 12);
    o.greedy_closure = false;
    EXPECT_EQ(greedy, oracle_min_swaps(c, linear_coupling(4), o, 12)) << it;
  }
}

}  // namespace
}  // namespace swapsat
