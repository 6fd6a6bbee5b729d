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

#include "swapsat/cnf.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>

#include "swapsat/errors.hpp"

namespace swapsat {

std::uint64_t CnfInstance::Serial::next() {
  static std::atomic<std::uint64_t> counter{0};
  return ++counter;
}

void CnfInstance::add_clause(std::span<const Lit> lits) {
  if (lits.empty()) throw InvalidArgument("empty clause");
  for (Lit l : lits) {
    if (l == 0 || std::abs(l) > num_vars_)
      throw InvalidArgument("literal " + std::to_string(l) + " out of range (" +
                            std::to_string(num_vars_) + " variables)");
  }
  literals_.insert(literals_.end(), lits.begin(), lits.end());
  offsets_.push_back(literals_.size());
}

bool CnfInstance::satisfied_by(const std::vector<bool>& model) const {
  if (model.size() < static_cast<std::size_t>(num_vars_) + 1) return false;
  for (std::size_t c = 0; c < num_clauses(); ++c) {
    bool sat = false;
    for (Lit l : clause(c)) {
      if (model[std::abs(l)] == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

namespace {

// reg[i][j] (j < min(i+1, bound)) stands for "at least j+1 of lits[0..i]".
using Registers = std::vector<std::vector<Lit>>;

Registers make_registers(CnfInstance& cnf, std::size_t rows, std::size_t bound) {
  Registers reg(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    reg[i].resize(std::min(i + 1, bound));
    for (auto& v : reg[i]) v = cnf.new_var();
  }
  return reg;
}

void check_k(std::span<const Lit> lits, std::size_t k) {
  if (k > lits.size())
    throw InvalidArgument("cardinality bound " + std::to_string(k) +
                          " exceeds " + std::to_string(lits.size()) + " literals");
}

}  // namespace

void exactly_k(CnfInstance& cnf, std::span<const Lit> lits, std::size_t k) {
  check_k(lits, k);
  const std::size_t n = lits.size();
  if (k == 0 || k == n) {
    for (Lit x : lits) cnf.add_clause({k == 0 ? -x : x});
    return;
  }
  const Registers s = make_registers(cnf, n - 1, k);
  cnf.add_clause({-lits[0], s[0][0]});
  cnf.add_clause({lits[0], -s[0][0]});
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Lit x = lits[i];
    for (std::size_t j = 0; j < s[i].size(); ++j) {
      const bool has_same = j < s[i - 1].size();
      // Upward: the count never decreases and x adds one.
      if (has_same) cnf.add_clause({-s[i - 1][j], s[i][j]});
      if (j == 0)
        cnf.add_clause({-x, s[i][0]});
      else
        cnf.add_clause({-x, -s[i - 1][j - 1], s[i][j]});
      // Downward.
      if (has_same)
        cnf.add_clause({-s[i][j], s[i - 1][j], x});
      else
        cnf.add_clause({-s[i][j], x});
      if (j > 0) cnf.add_clause({-s[i][j], s[i - 1][j - 1]});
    }
  }
  // At least k over all n.
  const auto& last = s[n - 2];
  if (k - 1 < last.size()) cnf.add_clause({last[k - 1], lits[n - 1]});
  else cnf.add_clause({lits[n - 1]});
  if (k >= 2) {
    if (k - 1 < last.size()) cnf.add_clause({last[k - 1], last[k - 2]});
    else cnf.add_clause({last[k - 2]});
  }
  // At most k.
  for (std::size_t i = k; i < n; ++i) cnf.add_clause({-lits[i], -s[i - 1][k - 1]});
}

void at_most_k(CnfInstance& cnf, std::span<const Lit> lits, std::size_t k) {
  const std::size_t n = lits.size();
  if (k >= n) return;
  if (k == 0) {
    for (Lit x : lits) cnf.add_clause({-x});
    return;
  }
  const Registers s = make_registers(cnf, n - 1, k);
  cnf.add_clause({-lits[0], s[0][0]});
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < s[i].size(); ++j) {
      if (j < s[i - 1].size()) cnf.add_clause({-s[i - 1][j], s[i][j]});
      if (j == 0)
        cnf.add_clause({-lits[i], s[i][0]});
      else
        cnf.add_clause({-lits[i], -s[i - 1][j - 1], s[i][j]});
    }
  }
  for (std::size_t i = k; i < n; ++i) cnf.add_clause({-lits[i], -s[i - 1][k - 1]});
}

void at_most_one(CnfInstance& cnf, std::span<const Lit> lits) {
  if (lits.size() <= 4) {
    for (std::size_t i = 0; i < lits.size(); ++i)
      for (std::size_t j = i + 1; j < lits.size(); ++j)
        cnf.add_clause({-lits[i], -lits[j]});
    return;
  }
  at_most_k(cnf, lits, 1);
}

void exactly_one(CnfInstance& cnf, std::span<const Lit> lits) {
  if (lits.empty()) throw InvalidArgument("exactly_one over no literals");
  cnf.add_clause(lits);
  at_most_one(cnf, lits);
}

std::string to_dimacs(const CnfInstance& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars() << " " << cnf.num_clauses() << "\n";
  for (std::size_t c = 0; c < cnf.num_clauses(); ++c) {
    for (Lit l : cnf.clause(c)) out << l << " ";
    out << "0\n";
  }
  return out.str();
}

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  long declared_vars = -1, declared_clauses = -1;
  CnfInstance cnf;
  std::vector<Lit> current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string first;
    if (!(words >> first) || first == "c" || first[0] == 'c') continue;
    if (first == "p") {
      std::string fmt;
      if (declared_vars >= 0 || !(words >> fmt >> declared_vars >> declared_clauses) ||
          fmt != "cnf" || declared_vars < 0 || declared_clauses < 0)
        throw ParseError("bad DIMACS header", line_no, 1);
      for (long v = 0; v < declared_vars; ++v) cnf.new_var();
      continue;
    }
    if (declared_vars < 0) throw ParseError("clause before DIMACS header", line_no, 1);
    std::istringstream lits(line);
    long value = 0;
    while (lits >> value) {
      if (value == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no, 1);
        try {
          cnf.add_clause(current);
        } catch (const InvalidArgument& e) {
          throw ParseError(e.what(), line_no, 1);
        }
        current.clear();
      } else {
        current.push_back(static_cast<Lit>(value));
      }
    }
    if (!lits.eof()) throw ParseError("bad literal", line_no, 1);
  }
  if (declared_vars < 0) throw ParseError("missing DIMACS header");
  if (!current.empty()) throw ParseError("unterminated clause", line_no, 1);
  if (static_cast<long>(cnf.num_clauses()) != declared_clauses)
    throw ParseError("clause count does not match header");
  return cnf;
}

}  // namespace swapsat
