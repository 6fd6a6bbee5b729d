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

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swapsat/cnf.hpp"

namespace swapsat {

enum class SatStatus { Sat, Unsat, Unknown };

std::string_view status_name(SatStatus s);

using Clock = std::chrono::steady_clock;

/// Limits for one solve call. Unset fields are unlimited.
struct Budget {
  std::optional<Clock::time_point> deadline;
  std::uint64_t max_conflicts = 0;  // 0: unlimited

  bool expired() const { return deadline && Clock::now() >= *deadline; }
};

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learnt_clauses = 0;
};

struct SolveResult {
  SatStatus status = SatStatus::Unknown;
  /// Indexed by variable id; index 0 is unused. Empty unless status is Sat.
  std::vector<bool> model;
  SolverStats stats;
};

/// Incremental CDCL solver: two watched literals, first-UIP learning, VSIDS,
/// phase saving, Luby restarts and activity-based learnt clause deletion.
/// Clauses may be added between solve calls; assumptions hold for one call.
class CdclSolver {
 public:
  CdclSolver();
  ~CdclSolver();
  CdclSolver(const CdclSolver&) = delete;
  CdclSolver& operator=(const CdclSolver&) = delete;

  /// Grows the variable set to at least n variables (ids 1..n).
  void reserve_vars(int n);
  int num_vars() const;

  /// Returns false once the clause set is unsatisfiable at the root.
  bool add_clause(std::span<const Lit> lits);

  SatStatus solve(std::span<const Lit> assumptions = {}, const Budget& budget = {});

  /// Model of the last Sat answer, indexed by variable id.
  const std::vector<bool>& model() const;
  const SolverStats& stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// A SAT oracle for a growing CnfInstance. Every Sat answer is checked
/// against all clauses and assumptions before it is returned.
class SatBackend {
 public:
  virtual ~SatBackend() = default;
  virtual std::string name() const = 0;
  virtual SolveResult solve(const CnfInstance& cnf, std::span<const Lit> assumptions,
                            const Budget& budget) = 0;
};

/// Keeps one CdclSolver alive across calls and only loads the clauses added
/// since the previous call. A different or shrunken instance resets it.
class InternalBackend final : public SatBackend {
 public:
  InternalBackend();
  ~InternalBackend() override;
  std::string name() const override { return "internal"; }
  SolveResult solve(const CnfInstance& cnf, std::span<const Lit> assumptions,
                    const Budget& budget) override;

 private:
  std::unique_ptr<CdclSolver> solver_;
  std::uint64_t source_ = 0;
  std::size_t loaded_ = 0;
};

/// Runs a DIMACS solver command per call. "{}" in the command is replaced by
/// the CNF path, otherwise the path is appended. Assumptions are written as
/// unit clauses. The solver must print an "s" line and, when satisfiable,
/// "v" lines.
class ExternalBackend final : public SatBackend {
 public:
  explicit ExternalBackend(std::string command);
  std::string name() const override { return "external:" + command_; }
  SolveResult solve(const CnfInstance& cnf, std::span<const Lit> assumptions,
                    const Budget& budget) override;

 private:
  std::string command_;
  unsigned calls_ = 0;
};

/// "internal" or "external:<command>". Throws InvalidArgument otherwise.
std::unique_ptr<SatBackend> make_backend(std::string_view spec);

/// Parses solver output ("s ..." and "v ..." lines) for a problem with
/// num_vars variables. Throws SolverError when no status line is present.
SolveResult parse_solver_output(std::string_view output, int num_vars);

}  // namespace swapsat
