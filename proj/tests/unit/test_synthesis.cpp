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

#include <json.hpp>
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

SynthesisOptions with(bool bridges, bool relaxed, bool ancillary = true) {
  SynthesisOptions o;
  o.encode.bridges = bridges;
  o.encode.relaxed = relaxed;
  o.encode.ancillary = ancillary;
  return o;
}

TEST(Synthesis, OrOnLineAllCombos) {
  const CouplingGraph line = linear_coupling(3);
  const std::vector<std::pair<SynthesisOptions, std::size_t>> cases{
      {with(false, false), 2}, {with(true, false), 2}, {with(false, true), 1}, {with(true, true), 1}};
  for (const auto& [o, cost] : cases) {
    MappedResult r = synthesize(or_circuit(), line, o);
    ASSERT_EQ(r.status, SynthesisStatus::Optimal);
    EXPECT_EQ(r.plan->num_actions(), cost) << o.encode.combo_name();
    EXPECT_EQ(r.metrics.lower_bound, cost);
    EXPECT_EQ(r.metrics.added_cnots, 3 * cost);
    EXPECT_EQ(r.metrics.cnot_total, 6 + 3 * cost);
    EXPECT_EQ(r.metrics.combo, o.encode.combo_name());
    EXPECT_EQ(r.metrics.solver, "internal");
    EXPECT_EQ(r.metrics.step_times.size(), cost + 1);
    EXPECT_EQ(r.plan->steps.size(), cost + 1);
    EXPECT_EQ(r.metrics.depth_before, circuit_depth(or_circuit()));
    EXPECT_EQ(r.metrics.depth_after, circuit_depth(*r.mapped));
    EXPECT_TRUE(check_structural(or_circuit(), *r.mapped, line, *r.plan).passed());
  }
}

TEST(Synthesis, BridgesOnMelbourne) {
  MappedResult r = synthesize(or_circuit(), load_coupling("melbourne"), with(true, false));
  ASSERT_EQ(r.status, SynthesisStatus::Optimal);
  EXPECT_EQ(r.plan->num_actions(), 2U);
  EXPECT_EQ(r.metrics.platform, "melbourne");
}

TEST(Synthesis, NoRoutingNeeded) {
  Circuit c(2);
  c.append(make_gate(GateKind::H, {0}));
  c.append(make_gate(GateKind::Cx, {0, 1}));
  MappedResult r = synthesize(c, linear_coupling(4), {});
  ASSERT_EQ(r.status, SynthesisStatus::Optimal);
  EXPECT_EQ(r.plan->num_actions(), 0U);
  EXPECT_EQ(r.mapped->num_qubits(), 4);
  EXPECT_EQ(r.mapped->size(), 2U);
  Circuit unary(1);
  unary.append(make_gate(GateKind::X, {0}));
  EXPECT_EQ(synthesize(unary, linear_coupling(1), {}).status, SynthesisStatus::Optimal);
}

TEST(Synthesis, MeasuresStayLast) {
  MappedResult r = synthesize(or_measured_circuit(), linear_coupling(3), {});
  ASSERT_EQ(r.status, SynthesisStatus::Optimal);
  const auto& gates = r.mapped->gates();
  std::size_t first_measure = gates.size();
  for (std::size_t k = 0; k < gates.size(); ++k)
    if (gates[k].kind == GateKind::Measure) first_measure = std::min(first_measure, k);
  for (std::size_t k = first_measure; k < gates.size(); ++k) EXPECT_EQ(gates[k].kind, GateKind::Measure);
  EXPECT_EQ(r.mapped->count(GateKind::Measure), 3U);
  // Each cbit is measured from the final image of its logical qubit.
  for (std::size_t k = first_measure; k < gates.size(); ++k) {
    const int l = gates[k].cbit->index;
    EXPECT_EQ(gates[k].qubits[0], r.plan->final_map[l]);
  }
}

TEST(Synthesis, StepLimitAndTimeout) {
  SynthesisOptions o;
  o.max_steps = 1;
  MappedResult r = synthesize(or_circuit(), linear_coupling(3), o);
  EXPECT_EQ(r.status, SynthesisStatus::StepLimit);
  EXPECT_FALSE(r.plan);
  EXPECT_EQ(r.metrics.lower_bound, 2U);
  o = {};
  o.time_limit = 0.0;
  r = synthesize(or_circuit(), linear_coupling(3), o);
  EXPECT_EQ(r.status, SynthesisStatus::Timeout);
  EXPECT_EQ(r.metrics.lower_bound, 0U);
  EXPECT_FALSE(r.mapped);
  const auto j = nlohmann::json::parse(metrics_to_json(r));
  EXPECT_TRUE(j["swaps"].is_null());
  EXPECT_TRUE(j["plan"].is_null());
  EXPECT_EQ(j["status"], "timeout");
}

TEST(Synthesis, MetricsJson) {
  MappedResult r = synthesize(or_circuit(), linear_coupling(3), with(false, true));
  const auto j = nlohmann::json::parse(metrics_to_json(r));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_EQ(j["swaps"], 1);
  EXPECT_EQ(j["combo"], "S+R");
  EXPECT_EQ(j["plan"]["dependencies"], "relaxed");
  EXPECT_TRUE(j.contains("total_time"));
  const std::string a = metrics_to_json(r, false);
  EXPECT_EQ(a.find("time"), std::string::npos);
  MappedResult again = synthesize(or_circuit(), linear_coupling(3), with(false, true));
  EXPECT_EQ(a, metrics_to_json(again, false));
  EXPECT_EQ(plan_from_json(plan_to_json(*r.plan)), *r.plan);
}

TEST(Synthesis, DecodeRejectsBrokenModel) {
  Encoder enc(or_circuit(), linear_coupling(3), {});
  enc.build_next_step();
  std::vector<bool> empty(enc.cnf().num_vars() + 1, false);
  EXPECT_THROW(decode_model(empty, enc, 0), InternalError);
  EXPECT_THROW(decode_model(empty, enc, 3), InvalidArgument);
}

TEST(Synthesis, ReconstructFromJsonPlan) {
  MappedResult r = synthesize(or_circuit(), linear_coupling(3), {});
  const Plan p = plan_from_json(plan_to_json(*r.plan));
  EXPECT_EQ(reconstruct(p, or_circuit()), *r.mapped);
  Plan bad = p;
  bad.steps[1].action = Action::make_swap(0, 2);
  EXPECT_THROW(validate_plan(bad, or_circuit(), linear_coupling(3)), InvalidArgument);
}

TEST(Synthesis, CertifiesOptimum) {
  InternalBackend backend;
  const CouplingGraph line = linear_coupling(3);
  EXPECT_EQ(certify_optimal(or_circuit(), line, {}, 0, backend), SatStatus::Unsat);
  EXPECT_EQ(certify_optimal(or_circuit(), line, {}, 2, backend), SatStatus::Unsat);
  EXPECT_EQ(certify_optimal(or_circuit(), line, {}, 3, backend), SatStatus::Sat);
}

TEST(Synthesis, ExternalBackendAgrees) {
  if (std::string(SWAPSAT_TEST_SOLVER).empty()) GTEST_SKIP() << "no python interpreter";
  MappedResult r = synthesize(or_circuit(), linear_coupling(3), {},
                              std::make_unique<ExternalBackend>(SWAPSAT_TEST_SOLVER));
  ASSERT_EQ(r.status, SynthesisStatus::Optimal);
  EXPECT_EQ(r.plan->num_actions(), 2U);
  EXPECT_EQ(r.metrics.solver.rfind("external", 0), 0U);
  EXPECT_TRUE(check_structural(or_circuit(), *r.mapped, linear_coupling(3), *r.plan).passed());
}

TEST(Synthesis, InfeasibleWidth) {
  EXPECT_THROW(synthesize(or_circuit(), linear_coupling(2), {}), InfeasibleError);
}

TEST(Synthesis, MatchesOracleOnRandomCircuits) {
  std::mt19937 rng(2024);
  for (int it = 0; it < 24; ++it) {
    testing::RandomCircuitSpec spec;
    spec.qubits = 3 + it % 2;
    spec.cnots = 4 + it % 4;
    spec.swap_rate = 0.1;
    Circuit c = testing::random_circuit(rng, spec);
    const CouplingGraph g = it % 3 == 0 ? grid_coupling(2, 2) : linear_coupling(4);
    const SynthesisOptions o = with(it & 1, it & 2, !(it & 4));
    MappedResult r = synthesize(c, g, o);
    ASSERT_EQ(r.status, SynthesisStatus::Optimal);
    EXPECT_EQ(oracle_min_swaps(c, g, oracle_options(o.encode), 12), static_cast<int>(r.plan->num_actions())) << it;
    VerifyReport rep = check_structural(c, *r.mapped, g, *r.plan);
    EXPECT_TRUE(rep.passed()) << rep.first_violation;
    EXPECT_TRUE(check_unitary_equivalence(c, *r.mapped, r.plan->initial_map, r.plan->final_map).equivalent);
  }
}

}  // namespace
}  // namespace swapsat
