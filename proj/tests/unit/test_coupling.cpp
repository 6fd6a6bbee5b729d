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

#include <filesystem>
#include <fstream>

#include "support/fixtures.hpp"
#include "swapsat/coupling.hpp"
#include "swapsat/errors.hpp"

namespace swapsat {
namespace {

std::vector<QubitPair> pairs(std::initializer_list<std::pair<int, int>> list) {
  std::vector<QubitPair> out;
  for (auto [a, b] : list) out.push_back(QubitPair::of(a, b));
  return out;
}

TEST(Coupling, Generators) {
  EXPECT_EQ(load_coupling("linear-3").edges(), pairs({{0, 1}, {1, 2}}));
  const auto g = load_coupling("grid-2x2");
  EXPECT_EQ(g.num_physical(), 4);
  EXPECT_EQ(g.edges(), pairs({{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  for (int n = 2; n < 9; ++n) EXPECT_EQ(linear_coupling(n).edges().size(), std::size_t(n - 1));
  for (int r = 1; r < 5; ++r)
    for (int c = 1; c < 5; ++c)
      EXPECT_EQ(grid_coupling(r, c).edges().size(), std::size_t(r * (c - 1) + c * (r - 1)));
  EXPECT_EQ(load_coupling("complete-5").edges().size(), 10u);
}

TEST(Coupling, BuiltinPlatforms) {
  const std::map<std::string, int> sizes{
      {"melbourne", 14}, {"sycamore54", 54}, {"rigetti80", 80}, {"eagle127", 127}};
  for (const auto& [name, n] : sizes) {
    const auto g = load_coupling(name);
    EXPECT_EQ(g.num_physical(), n) << name;
    EXPECT_TRUE(g.is_connected()) << name;
    EXPECT_EQ(g.name(), name);
  }
  EXPECT_EQ(builtin_platform_names().size(), 4u);
}

TEST(Coupling, RejectsBadInput) {
  EXPECT_THROW(load_coupling("nowhere"), InvalidArgument);
  EXPECT_THROW(CouplingGraph(3, pairs({{0, 0}})), InvalidArgument);
  EXPECT_THROW(CouplingGraph(3, {QubitPair{0, 3}}), InvalidArgument);
  EXPECT_THROW(CouplingGraph(3, pairs({{0, 1}, {1, 0}})), InvalidArgument);
  EXPECT_THROW(coupling_from_json("{\"num_qubits\": 2}"), ParseError);
  EXPECT_THROW(coupling_from_json("not json"), ParseError);
  EXPECT_THROW(load_coupling("file:/does/not/exist.json"), Error);
}

TEST(Coupling, JsonRoundTripAndFile) {
  const auto g = load_coupling("melbourne");
  const auto back = coupling_from_json(coupling_to_json(g));
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_EQ(back.num_physical(), g.num_physical());
  const auto path = std::filesystem::temp_directory_path() / "swapsat-coupling-test.json";
  std::ofstream(path) << "{\"name\": \"tri\", \"num_qubits\": 3, \"edges\": [[0,1],[1,2],[2,0]]}";
  const auto t = load_coupling("file:" + path.string());
  EXPECT_EQ(t.edges().size(), 3u);
  EXPECT_EQ(t.name(), "tri");
  std::filesystem::remove(path);
}

TEST(Coupling, Distance2Pairs) {
  const auto lin = distance2_pairs(linear_coupling(3));
  ASSERT_EQ(lin.size(), 1u);
  EXPECT_EQ(lin.middles.at(QubitPair::of(0, 2)), std::vector<Qubit>{1});
  EXPECT_TRUE(distance2_pairs(complete_coupling(4)).empty());
  const auto grid = distance2_pairs(grid_coupling(2, 2));
  ASSERT_EQ(grid.size(), 2u);
  EXPECT_EQ(grid.middles.at(QubitPair::of(0, 3)), (std::vector<Qubit>{1, 2}));
  EXPECT_EQ(grid.middles.at(QubitPair::of(1, 2)), (std::vector<Qubit>{0, 3}));
  EXPECT_EQ(grid.first_middle(3, 0), 1);
}

TEST(Coupling, Distance2InvariantsOnPlatforms) {
  for (const auto& name : builtin_platform_names()) {
    const auto g = load_coupling(name);
    const auto d2 = distance2_pairs(g);
    // Independent check by exhaustive common-neighbour enumeration.
    std::size_t expected = 0;
    for (int a = 0; a < g.num_physical(); ++a)
      for (int b = a + 1; b < g.num_physical(); ++b) {
        if (g.adjacent(a, b)) continue;
        std::vector<Qubit> mids;
        for (int m = 0; m < g.num_physical(); ++m)
          if (g.adjacent(a, m) && g.adjacent(m, b)) mids.push_back(m);
        if (mids.empty()) continue;
        ++expected;
        ASSERT_TRUE(d2.contains(a, b));
        EXPECT_EQ(d2.middles.at(QubitPair::of(a, b)), mids);
      }
    EXPECT_EQ(d2.size(), expected) << name;
  }
}

}  // namespace
}  // namespace swapsat
