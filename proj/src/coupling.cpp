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

#include "swapsat/coupling.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "builtin_platforms.hpp"
#include "swapsat/errors.hpp"

namespace swapsat {

CouplingGraph::CouplingGraph(int num_physical, std::vector<QubitPair> edges,
                             std::string name)
    : num_physical_(num_physical), name_(std::move(name)) {
  if (num_physical <= 0)
    throw InvalidArgument("coupling graph needs at least one qubit");
  const auto n = static_cast<std::size_t>(num_physical);
  neighbors_.resize(n);
  edge_id_.assign(n * n, -1);
  for (auto& e : edges) {
    if (e.first == e.second)
      throw InvalidArgument("self-loop on qubit " + std::to_string(e.first));
    e = QubitPair::of(e.first, e.second);
    if (e.first < 0 || e.second >= num_physical)
      throw InvalidArgument("edge (" + std::to_string(e.first) + "," +
                            std::to_string(e.second) + ") out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidArgument("duplicate edge in coupling graph");
  edges_ = std::move(edges);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [a, b] = edges_[i];
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
    edge_id_[a * n + b] = edge_id_[b * n + a] = static_cast<int>(i);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

bool CouplingGraph::adjacent(Qubit a, Qubit b) const {
  return edge_index(a, b).has_value();
}

std::optional<std::size_t> CouplingGraph::edge_index(Qubit a, Qubit b) const {
  if (a < 0 || b < 0 || a >= num_physical_ || b >= num_physical_)
    return std::nullopt;
  const int id = edge_id_[static_cast<std::size_t>(a) * num_physical_ + b];
  if (id < 0) return std::nullopt;
  return static_cast<std::size_t>(id);
}

bool CouplingGraph::is_connected() const {
  std::vector<bool> seen(neighbors_.size(), false);
  std::vector<Qubit> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const Qubit p = stack.back();
    stack.pop_back();
    for (Qubit q : neighbors_[p]) {
      if (!seen[q]) {
        seen[q] = true;
        ++visited;
        stack.push_back(q);
      }
    }
  }
  return visited == neighbors_.size();
}

Qubit BridgePaths::first_middle(Qubit a, Qubit b) const {
  const auto it = middles.find(QubitPair::of(a, b));
  if (it == middles.end())
    throw InvalidArgument("qubits " + std::to_string(a) + " and " +
                          std::to_string(b) + " are not at distance 2");
  return it->second.front();
}

BridgePaths distance2_pairs(const CouplingGraph& graph) {
  BridgePaths paths;
  for (Qubit m = 0; m < graph.num_physical(); ++m) {
    const auto& nb = graph.neighbors(m);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!graph.adjacent(nb[i], nb[j]))
          paths.middles[QubitPair::of(nb[i], nb[j])].push_back(m);
      }
    }
  }
  return paths;
}

CouplingGraph linear_coupling(int n) {
  std::vector<QubitPair> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return {n, std::move(edges), "linear-" + std::to_string(n)};
}

CouplingGraph grid_coupling(int rows, int cols) {
  if (rows <= 0 || cols <= 0) throw InvalidArgument("grid dimensions must be positive");
  std::vector<QubitPair> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int q = r * cols + c;
      if (c + 1 < cols) edges.push_back({q, q + 1});
      if (r + 1 < rows) edges.push_back({q, q + cols});
    }
  }
  return {rows * cols, std::move(edges),
          "grid-" + std::to_string(rows) + "x" + std::to_string(cols)};
}

CouplingGraph complete_coupling(int n) {
  std::vector<QubitPair> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return {n, std::move(edges), "complete-" + std::to_string(n)};
}

CouplingGraph coupling_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("coupling file: ") + e.what());
  }
  try {
    const int n = doc.at("num_qubits").get<int>();
    std::vector<QubitPair> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw ParseError("coupling file: every edge must be a pair");
      edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return {n, std::move(edges), doc.value("name", std::string{})};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("coupling file: ") + e.what());
  }
}

std::string coupling_to_json(const CouplingGraph& graph) {
  nlohmann::json doc;
  doc["name"] = graph.name();
  doc["num_qubits"] = graph.num_physical();
  doc["edges"] = nlohmann::json::array();
  for (const auto& e : graph.edges()) doc["edges"].push_back({e.first, e.second});
  return doc.dump();
}

std::vector<std::string> builtin_platform_names() {
  std::vector<std::string> names;
  for (const auto& p : detail::builtin_platforms()) names.emplace_back(p.name);
  return names;
}

namespace {

int parse_positive(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0)
    throw InvalidArgument("bad platform spec '" + std::string(spec) + "'");
  return value;
}

}  // namespace

CouplingGraph load_coupling(std::string_view spec) {
  for (const auto& p : detail::builtin_platforms()) {
    if (p.name == spec) return coupling_from_json(p.json);
  }
  if (spec.starts_with("file:")) {
    const std::string path(spec.substr(5));
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open coupling file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return coupling_from_json(buffer.str());
  }
  if (spec.starts_with("linear-")) return linear_coupling(parse_positive(spec.substr(7), spec));
  if (spec.starts_with("complete-"))
    return complete_coupling(parse_positive(spec.substr(9), spec));
  if (spec.starts_with("grid-")) {
    const auto dims = spec.substr(5);
    const auto x = dims.find('x');
    if (x == std::string_view::npos)
      throw InvalidArgument("bad platform spec '" + std::string(spec) + "'");
    return grid_coupling(parse_positive(dims.substr(0, x), spec),
                         parse_positive(dims.substr(x + 1), spec));
  }
  throw InvalidArgument("unknown platform '" + std::string(spec) + "'");
}

}  // namespace swapsat
