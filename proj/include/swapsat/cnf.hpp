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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swapsat {

/// DIMACS-style literal: +v / -v for variable v >= 1.
using Lit = int;

/// Growing clause database. Clauses are only ever appended.
class CnfInstance {
 public:
  /// Fresh variable; ids start at 1 and increase by one.
  int new_var() { return ++num_vars_; }
  int num_vars() const { return num_vars_; }

  /// Throws InvalidArgument for an empty clause, a zero literal or a literal
  /// beyond num_vars().
  void add_clause(std::span<const Lit> lits);
  void add_clause(std::initializer_list<Lit> lits) {
    add_clause(std::span<const Lit>(lits.begin(), lits.size()));
  }

  std::size_t num_clauses() const { return offsets_.size() - 1; }
  std::span<const Lit> clause(std::size_t i) const {
    return {literals_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t num_literals() const { return literals_.size(); }

  /// Records the current clause count as a checkpoint (one per time step).
  void mark() { marks_.push_back(num_clauses()); }
  const std::vector<std::size_t>& marks() const { return marks_; }

  /// Same variable count and clause list; checkpoints are not compared.
  bool operator==(const CnfInstance& other) const {
    return num_vars_ == other.num_vars_ && literals_ == other.literals_ &&
           offsets_ == other.offsets_;
  }

  /// True iff every clause has a literal made true by `model`, indexed by
  /// variable id (index 0 unused).
  bool satisfied_by(const std::vector<bool>& model) const;

  /// Process-unique serial number. Copies and assignments get a new one, so
  /// equal serials mean the same clause list, possibly grown since.
  std::uint64_t serial() const { return serial_.value; }

 private:
  struct Serial {
    std::uint64_t value = next();
    Serial() = default;
    Serial(const Serial&) : value(next()) {}
    Serial& operator=(const Serial&) {
      value = next();
      return *this;
    }
    static std::uint64_t next();
  };

  Serial serial_;
  int num_vars_ = 0;
  std::vector<Lit> literals_;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::size_t> marks_;
};

/// Sequential-counter encoding of "exactly k of lits are true". The counter
/// registers are defined by biconditionals, so they are fixed by the inputs.
void exactly_k(CnfInstance& cnf, std::span<const Lit> lits, std::size_t k);
/// One-directional sequential counter (at most k).
void at_most_k(CnfInstance& cnf, std::span<const Lit> lits, std::size_t k);
/// Pairwise for up to 4 literals, sequential counter above.
void at_most_one(CnfInstance& cnf, std::span<const Lit> lits);
void exactly_one(CnfInstance& cnf, std::span<const Lit> lits);
inline void exactly_two(CnfInstance& cnf, std::span<const Lit> lits) {
  exactly_k(cnf, lits, 2);
}

/// "p cnf V C" header then one zero-terminated clause per line.
std::string to_dimacs(const CnfInstance& cnf);
/// Reads the format written by to_dimacs (and ordinary DIMACS with comments
/// and clauses split over lines). Throws ParseError.
CnfInstance parse_dimacs(std::string_view text);

}  // namespace swapsat
