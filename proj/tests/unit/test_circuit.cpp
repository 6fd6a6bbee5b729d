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

#include <cmath>
#include <numbers>

#include "support/fixtures.hpp"
#include "swapsat/errors.hpp"
#include "swapsat/qasm.hpp"

namespace swapsat {
namespace {

constexpr const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

// Longest path over gates, each gate a node with edges to later gates sharing
// a qubit (barriers weigh 0). Quadratic and independent of circuit_depth.
std::size_t brute_force_depth(const Circuit& c) {
  const auto& g = c.gates();
  std::vector<std::size_t> best(g.size(), 0);
  std::size_t answer = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::size_t w = g[j].kind == GateKind::Barrier ? 0 : 1;
    std::size_t longest = 0;
    for (std::size_t i = 0; i < j; ++i) {
      bool share = false;
      for (Qubit a : g[i].qubits)
        for (Qubit b : g[j].qubits) share |= a == b;
      if (share) longest = std::max(longest, best[i]);
    }
    best[j] = longest + w;
    answer = std::max(answer, best[j]);
  }
  return answer;
}

TEST(Qasm, ParsesOrCircuit) {
  const Circuit c = testing::or_circuit();
  EXPECT_EQ(c.num_qubits(), 3);
  EXPECT_EQ(c.size(), 17u);
  EXPECT_EQ(c.count(GateKind::Cx), 6u);
  EXPECT_EQ(c.name(), "or");
}

TEST(Qasm, EmptyBody) {
  const Circuit c = parse_qasm(std::string(kHeader) + "qreg q[4];\n");
  EXPECT_EQ(c.num_qubits(), 4);
  EXPECT_TRUE(c.empty());
  EXPECT_EQ(emit_qasm(c), std::string(kHeader) + "qreg q[4];\n");
}

TEST(Qasm, RejectsUnsupported) {
  const std::string base = std::string(kHeader) + "qreg q[3];\n";
  try {
    parse_qasm(base + "ccx q[0],q[1],q[2];\n");
    FAIL() << "expected rejection";
  } catch (const UnsupportedError& e) {
    EXPECT_EQ(e.construct(), "ccx");
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse_qasm(base + "creg c[1];\nif(c==1) x q[0];\n"), UnsupportedError);
  EXPECT_THROW(parse_qasm(base + "opaque foo a;\n"), UnsupportedError);
  EXPECT_THROW(parse_qasm(base + "gate foo a { x a; }\n"), UnsupportedError);
  EXPECT_THROW(parse_qasm(base + "qreg r[2];\n"), UnsupportedError);
  EXPECT_THROW(parse_qasm(base + "reset q[0];\n"), UnsupportedError);
}

TEST(Qasm, SyntaxErrorsCarryPosition) {
  const std::string base = std::string(kHeader) + "qreg q[3];\n";
  try {
    parse_qasm(base + "x q[0]\nh q[1];\n");
    FAIL() << "expected syntax error";
  } catch (const UnsupportedError&) {
    FAIL() << "wrong error class";
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 0u);
  }
  EXPECT_THROW(parse_qasm(base + "x q[3];\n"), ParseError);
  EXPECT_THROW(parse_qasm(base + "cx q[0],q[0];\n"), ParseError);
  EXPECT_THROW(parse_qasm(base + "rz q[0];\n"), ParseError);
  EXPECT_THROW(parse_qasm("x q[0];\n"), ParseError);
}

TEST(Qasm, MeasuresMustBeTerminal) {
  const std::string base = std::string(kHeader) + "qreg q[2];\ncreg c[2];\n";
  EXPECT_THROW(parse_qasm(base + "measure q[0] -> c[0];\nx q[0];\n"), ParseError);
  EXPECT_NO_THROW(parse_qasm(base + "measure q[0] -> c[0];\nx q[1];\nbarrier q;\n"));
}

TEST(Qasm, RoundTripKeepsParameterText) {
  const std::string text = std::string(kHeader) +
                           "qreg q[2];\ncreg c[2];\nrz(pi/4) q[1];\nu3(0.1, -pi/2, 2*pi) q[0];\n"
                           "cx q[0],q[1];\nbarrier q[0],q[1];\nmeasure q[1] -> c[0];\n";
  const Circuit c = parse_qasm(text);
  EXPECT_EQ(c.gate(0).params.at(0), "pi/4");
  const std::string emitted = emit_qasm(c);
  EXPECT_NE(emitted.find("rz(pi/4) q[1];"), std::string::npos);
  EXPECT_EQ(parse_qasm(emitted), c);
  const Circuit orc = testing::or_measured_circuit();
  EXPECT_EQ(parse_qasm(emit_qasm(orc)), orc);
}

TEST(Qasm, BroadcastsRegisterArguments) {
  const Circuit c = testing::or_measured_circuit();
  EXPECT_EQ(c.count(GateKind::Measure), 3u);
  EXPECT_EQ(c.count(GateKind::Barrier), 1u);
  const Gate& m = c.gates().back();
  EXPECT_EQ(m.qubits, std::vector<Qubit>{2});
  EXPECT_EQ(m.cbit->index, 2);
}

TEST(Qasm, AngleEvaluation) {
  EXPECT_NEAR(evaluate_angle("pi/4"), std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(evaluate_angle("-(pi - 1.5e-1) * 2"), -2 * (std::numbers::pi - 0.15), 1e-12);
  EXPECT_NEAR(evaluate_angle("3"), 3.0, 0);
  EXPECT_THROW(evaluate_angle("sin(pi)"), ParseError);
  EXPECT_THROW(evaluate_angle("pi +"), ParseError);
}

TEST(Slice, OrCircuitPairs) {
  const CnotSlice slice = extract_cnot_slice(testing::or_circuit());
  ASSERT_EQ(slice.size(), 6u);
  const std::vector<std::pair<Qubit, Qubit>> expected{{2, 1}, {0, 1}, {2, 0},
                                                      {2, 1}, {2, 0}, {0, 1}};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(slice.cnots[i].id, i);
    EXPECT_EQ(slice.cnots[i].control, expected[i].first);
    EXPECT_EQ(slice.cnots[i].data, expected[i].second);
  }
  EXPECT_EQ(slice.cnots[0].gate_index, 4u);
  EXPECT_EQ(slice.logical_pairs().size(), 3u);
}

TEST(Slice, EmptyAndSingle) {
  Circuit c(2);
  c.append({GateKind::H, {}, {0}});
  EXPECT_TRUE(extract_cnot_slice(c).empty());
  c.append({GateKind::Cx, {}, {1, 0}});
  const auto s = extract_cnot_slice(c);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.pair(0), QubitPair::of(0, 1));
}

TEST(Circuit, AppendValidates) {
  Circuit c(2);
  EXPECT_THROW(c.append({GateKind::Cx, {}, {0}}), InvalidArgument);
  EXPECT_THROW(c.append({GateKind::X, {}, {2}}), InvalidArgument);
  EXPECT_THROW(c.append({GateKind::Rz, {}, {0}}), InvalidArgument);
  c.append({GateKind::Rz, {"0.5"}, {0}});
  EXPECT_EQ(c.gate(0).index, 0u);
}

TEST(Depth, MatchesBruteForce) {
  EXPECT_EQ(circuit_depth(Circuit(3)), 0u);
  Circuit par(4);
  for (int q = 0; q < 4; ++q) par.append({GateKind::H, {}, {q}});
  EXPECT_EQ(circuit_depth(par), 1u);
  for (const Circuit& c : {testing::or_circuit(), testing::or_measured_circuit()})
    EXPECT_EQ(circuit_depth(c), brute_force_depth(c));
}

TEST(Depth, CnotEquivalentCount) {
  Circuit c(3);
  c.append({GateKind::Cx, {}, {0, 1}});
  c.append({GateKind::Swap, {}, {1, 2}});
  EXPECT_EQ(cnot_equivalent_count(c), 4u);
}

}  // namespace
}  // namespace swapsat
