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

#include "swapsat/sat.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "swapsat/errors.hpp"

namespace swapsat {

std::string_view status_name(SatStatus s) {
  switch (s) {
    case SatStatus::Sat: return "SAT";
    case SatStatus::Unsat: return "UNSAT";
    case SatStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

namespace {

// Empty string when the model satisfies everything, else a description.
std::string model_defect(const CnfInstance& cnf, std::span<const Lit> assumptions,
                         const std::vector<bool>& model) {
  if (model.size() < static_cast<std::size_t>(cnf.num_vars()) + 1)
    return "model is shorter than the variable count";
  for (Lit a : assumptions)
    if (model[std::abs(a)] != (a > 0)) return "assumption " + std::to_string(a) + " violated";
  for (std::size_t c = 0; c < cnf.num_clauses(); ++c) {
    bool sat = false;
    for (Lit l : cnf.clause(c)) {
      if (model[std::abs(l)] == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return "clause " + std::to_string(c) + " violated";
  }
  return {};
}

}  // namespace

InternalBackend::InternalBackend() : solver_(std::make_unique<CdclSolver>()) {}
InternalBackend::~InternalBackend() = default;

SolveResult InternalBackend::solve(const CnfInstance& cnf,
                                   std::span<const Lit> assumptions,
                                   const Budget& budget) {
  if (source_ != cnf.serial() || cnf.num_clauses() < loaded_) {
    solver_ = std::make_unique<CdclSolver>();
    source_ = cnf.serial();
    loaded_ = 0;
  }
  solver_->reserve_vars(cnf.num_vars());
  for (; loaded_ < cnf.num_clauses(); ++loaded_) solver_->add_clause(cnf.clause(loaded_));

  SolveResult result;
  result.status = solver_->solve(assumptions, budget);
  result.stats = solver_->stats();
  if (result.status == SatStatus::Sat) {
    result.model = solver_->model();
    result.model.resize(static_cast<std::size_t>(cnf.num_vars()) + 1, false);
    if (const std::string defect = model_defect(cnf, assumptions, result.model); !defect.empty())
      throw InternalError("internal solver returned a bad model: " + defect);
  }
  return result;
}

ExternalBackend::ExternalBackend(std::string command) : command_(std::move(command)) {
  if (command_.empty()) throw InvalidArgument("empty external solver command");
}

SolveResult parse_solver_output(std::string_view output, int num_vars) {
  SolveResult result;
  bool have_status = false;
  std::vector<Lit> values;
  std::istringstream in{std::string(output)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("s ", 0) == 0) {
      const std::string word = line.substr(2, line.find_last_not_of(" \r") - 1);
      if (word == "SATISFIABLE") result.status = SatStatus::Sat;
      else if (word == "UNSATISFIABLE") result.status = SatStatus::Unsat;
      else if (word == "UNKNOWN") result.status = SatStatus::Unknown;
      else throw SolverError("unrecognised status line: " + line);
      have_status = true;
    } else if (line.rfind("v ", 0) == 0 || line == "v") {
      std::istringstream lits(line.substr(1));
      long v = 0;
      while (lits >> v) {
        if (v != 0) values.push_back(static_cast<Lit>(v));
      }
    }
  }
  if (!have_status) throw SolverError("solver output has no status line");
  if (result.status == SatStatus::Sat) {
    result.model.assign(static_cast<std::size_t>(num_vars) + 1, false);
    for (Lit l : values) {
      if (std::abs(l) > num_vars) throw SolverError("model literal out of range: " + std::to_string(l));
      result.model[std::abs(l)] = l > 0;
    }
  }
  return result;
}

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

}  // namespace

SolveResult ExternalBackend::solve(const CnfInstance& cnf,
                                   std::span<const Lit> assumptions,
                                   const Budget& budget) {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() /
                        ("swapsat-" + std::to_string(::getpid()) + "-" +
                         std::to_string(calls_++) + ".cnf");
  {
    std::ofstream out(path);
    if (!out) throw SolverError("cannot write " + path.string());
    out << "p cnf " << cnf.num_vars() << " " << cnf.num_clauses() + assumptions.size() << "\n";
    for (std::size_t c = 0; c < cnf.num_clauses(); ++c) {
      for (Lit l : cnf.clause(c)) out << l << " ";
      out << "0\n";
    }
    for (Lit a : assumptions) out << a << " 0\n";
  }

  std::string command = command_;
  if (const auto pos = command.find("{}"); pos != std::string::npos)
    command.replace(pos, 2, path.string());
  else
    command += " " + path.string();
  if (budget.deadline) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        *budget.deadline - Clock::now());
    const double seconds = std::max<double>(0.001, left.count() / 1000.0);
    command = "timeout " + std::to_string(seconds) + " sh -c " + shell_quote(command);
  }

  std::string output;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (!pipe) {
    fs::remove(path);
    throw SolverError("cannot start external solver: " + command_);
  }
  char buffer[4096];
  std::size_t n = 0;
  while ((n = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
  const int status = ::pclose(pipe);
  std::error_code ignored;
  fs::remove(path, ignored);

  const bool timed_out = WIFEXITED(status) && WEXITSTATUS(status) == 124;
  if (timed_out && output.find("\ns ") == std::string::npos && output.rfind("s ", 0) != 0)
    return SolveResult{};

  SolveResult result = parse_solver_output(output, cnf.num_vars());
  if (result.status == SatStatus::Sat) {
    if (const std::string defect = model_defect(cnf, assumptions, result.model); !defect.empty())
      throw SolverError("external solver returned a bad model: " + defect);
  }
  return result;
}

std::unique_ptr<SatBackend> make_backend(std::string_view spec) {
  if (spec == "internal") return std::make_unique<InternalBackend>();
  constexpr std::string_view prefix = "external:";
  if (spec.starts_with(prefix)) return std::make_unique<ExternalBackend>(std::string(spec.substr(prefix.size())));
  throw InvalidArgument("unknown solver '" + std::string(spec) + "' (expected internal or external:<command>)");
}

}  // namespace swapsat
