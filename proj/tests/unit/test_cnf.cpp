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

#include <bit>
#include <numeric>

#include "support/dpll.hpp"
#include "swapsat/cnf.hpp"
#include "swapsat/errors.hpp"

namespace swapsat {
namespace {

std::vector<Lit> fresh(CnfInstance& cnf, int n) {
  std::vector<Lit> v(n);
  for (auto& x : v) x = cnf.new_var();
  return v;
}

// Counts, over all assignments of the inputs, how many extend to a model,
// and checks each extension is unique when `functional` is set.
void check_cardinality(int n, int k, bool exact, bool functional) {
  CnfInstance cnf;
  const auto xs = fresh(cnf, n);
  if (exact) exactly_k(cnf, xs, k);
  else at_most_k(cnf, xs, k);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<Lit> fixed;
    for (int i = 0; i < n; ++i) fixed.push_back((mask >> i) & 1 ? xs[i] : -xs[i]);
    const int ones = std::popcount(mask);
    const bool want = exact ? ones == k : ones <= k;
    CnfInstance restricted = cnf;
    for (Lit l : fixed) restricted.add_clause({l});
    int models = 0;
    testing::Dpll(restricted).enumerate([&](const std::vector<bool>&) {
      ++models;
      return models < 3;
    });
    EXPECT_EQ(models > 0, want) << "n=" << n << " k=" << k << " mask=" << mask;
    if (want && functional) EXPECT_EQ(models, 1) << "n=" << n << " k=" << k << " mask=" << mask;
  }
}

TEST(Cnf, RejectsBadClauses) {
  CnfInstance cnf;
  cnf.new_var();
  EXPECT_THROW(cnf.add_clause({}), InvalidArgument);
  EXPECT_THROW(cnf.add_clause({0}), InvalidArgument);
  EXPECT_THROW(cnf.add_clause({2}), InvalidArgument);
  cnf.add_clause({-1});
  EXPECT_EQ(cnf.num_clauses(), 1u);
}

TEST(Cnf, ExactlyKIsCorrectAndFunctional) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) check_cardinality(n, k, true, true);
}

TEST(Cnf, AtMostK) {
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) check_cardinality(n, k, false, false);
}

TEST(Cnf, ExactlyKRejectsLargeBound) {
  CnfInstance cnf;
  const auto xs = fresh(cnf, 3);
  EXPECT_THROW(exactly_k(cnf, xs, 4), InvalidArgument);
}

TEST(Cnf, ExactlyOneBothRegimes) {
  for (int n : {2, 4, 5, 9}) {
    CnfInstance cnf;
    const auto xs = fresh(cnf, n);
    exactly_one(cnf, xs);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      CnfInstance r = cnf;
      for (int i = 0; i < n; ++i) r.add_clause({(mask >> i) & 1 ? xs[i] : -xs[i]});
      EXPECT_EQ(testing::Dpll(r).solve(), std::popcount(mask) == 1);
    }
  }
}

TEST(Cnf, DimacsRoundTrip) {
  CnfInstance cnf;
  const auto xs = fresh(cnf, 6);
  exactly_k(cnf, xs, 3);
  cnf.add_clause({1, -2, 5});
  const auto back = parse_dimacs(to_dimacs(cnf));
  EXPECT_EQ(back, cnf);
}

TEST(Cnf, DimacsParserErrors) {
  EXPECT_THROW(parse_dimacs("1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);
  const auto ok = parse_dimacs("c hello\np cnf 3 2\n1 -2\n 3 0\n-1 0\n");
  EXPECT_EQ(ok.num_clauses(), 2u);
  EXPECT_EQ(ok.clause(0).size(), 3u);
}

}  // namespace
}  // namespace swapsat
