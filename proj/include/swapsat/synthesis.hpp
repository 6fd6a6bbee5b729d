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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "swapsat/circuit.hpp"
#include "swapsat/coupling.hpp"
#include "swapsat/encoder.hpp"
#include "swapsat/plan.hpp"
#include "swapsat/sat.hpp"

namespace swapsat {

struct SynthesisOptions {
  EncodeOptions encode;
  /// Wall-clock budget for the whole run, in seconds.
  std::optional<double> time_limit;
  /// Largest number of actions tried.
  int max_steps = 100;
};

enum class SynthesisStatus { Optimal, Timeout, StepLimit };

std::string_view status_name(SynthesisStatus s);

struct Metrics {
  std::string circuit;
  std::string platform;
  std::string combo;
  bool ancillary = true;
  std::string solver;
  SynthesisStatus status = SynthesisStatus::Optimal;
  std::size_t swaps = 0;
  std::size_t bridges = 0;
  /// 3 * (swaps + bridges)
  std::size_t added_cnots = 0;
  /// CNOTs of the mapped circuit, SWAP gates counted as 3.
  std::size_t cnot_total = 0;
  std::size_t depth_before = 0;
  std::size_t depth_after = 0;
  /// Every plan with fewer actions has been refuted.
  std::size_t lower_bound = 0;
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;
  std::vector<double> step_times;
  double total_time = 0;
};

struct MappedResult {
  SynthesisStatus status = SynthesisStatus::Optimal;
  /// Present when status is Optimal.
  std::optional<Plan> plan;
  std::optional<Circuit> mapped;
  Metrics metrics;
};

/// Runs the incremental loop: build step t, solve under its assumption,
/// stop at the first satisfiable t.
class Synthesizer {
 public:
  /// A null backend selects the internal solver.
  Synthesizer(const Circuit& circuit, const CouplingGraph& coupling, SynthesisOptions options,
              std::unique_ptr<SatBackend> backend = nullptr);

  MappedResult run();
  const Encoder& encoder() const { return encoder_; }
  SatBackend& backend() { return *backend_; }

 private:
  Circuit circuit_;
  CouplingGraph coupling_;
  SynthesisOptions options_;
  std::unique_ptr<SatBackend> backend_;
  Encoder encoder_;
};

MappedResult synthesize(const Circuit& circuit, const CouplingGraph& coupling,
                        const SynthesisOptions& options,
                        std::unique_ptr<SatBackend> backend = nullptr);

/// Reads a plan out of a model satisfying the first t_final + 1 steps under
/// assumption(t_final). Throws InternalError on an inconsistent model.
Plan decode_model(const std::vector<bool>& model, const Encoder& encoder, int t_final);

/// Physical circuit realizing the plan: per step the SWAP, then the step's
/// CNOTs in dependency order (bridges as a 4-CNOT ladder at their CNOT's
/// position), each preceded by its pending single-qubit ancestors. Leftover
/// gates follow, then measures relabeled by the final map.
Circuit reconstruct(const Plan& plan, const Circuit& circuit);

/// Gate counts and depths of a routed circuit. Timing fields stay zero.
Metrics compute_metrics(const Circuit& original, const Plan& plan, const Circuit& mapped);

/// JSON record, schema version 1. Timing fields are left out when
/// include_timing is false so that runs can be compared byte for byte.
std::string metrics_to_json(const MappedResult& result, bool include_timing = true);

/// Solves a fresh encoding of steps 0..k-1 under assumption(k-1). Unsat
/// certifies that k actions are optimal; k = 0 needs no certificate and
/// returns Unsat.
SatStatus certify_optimal(const Circuit& circuit, const CouplingGraph& coupling,
                          const EncodeOptions& options, std::size_t k, SatBackend& backend,
                          const Budget& budget = {});

}  // namespace swapsat
