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

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "swapsat/errors.hpp"
#include "swapsat/qasm.hpp"
#include "swapsat/synthesis.hpp"
#include "swapsat/verify.hpp"

namespace fs = std::filesystem;
using namespace swapsat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitMismatch = 3;

struct Routing {
  bool bridges = false;
  bool relaxed = false;
  bool no_ancillas = false;

  void attach(CLI::App& app) {
    app.add_flag("--bridges", bridges, "Allow bridge gates (B)");
    app.add_flag("--relaxed", relaxed, "Use commutation-relaxed dependencies (R)");
    app.add_flag("--no-ancillas", no_ancillas, "Forbid SWAPs with unmapped qubits");
  }
  EncodeOptions encode() const {
    EncodeOptions e;
    e.bridges = bridges;
    e.relaxed = relaxed;
    e.ancillary = !no_ancillas;
    return e;
  }
};

struct SolverFlags {
  std::string solver;
  std::optional<double> time_limit;
  int max_steps = 100;

  void attach(CLI::App& app) {
    const char* env = std::getenv("SWAPSAT_SOLVER");
    solver = env && *env ? env : "internal";
    app.add_option("--solver", solver, "internal or external:<command> (default from SWAPSAT_SOLVER)")
        ->capture_default_str();
    app.add_option("--time-limit", time_limit, "Wall-clock budget in seconds")->check(CLI::NonNegativeNumber);
    app.add_option("--max-steps", max_steps, "Largest action count tried")->capture_default_str()
        ->check(CLI::NonNegativeNumber);
  }
  SynthesisOptions synthesis(const EncodeOptions& e) const {
    SynthesisOptions o;
    o.encode = e;
    o.time_limit = time_limit;
    o.max_steps = max_steps;
    return o;
  }
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
  if (!out) throw InvalidArgument("cannot write " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

std::string summary_line(const MappedResult& r) {
  const Metrics& m = r.metrics;
  if (r.status == SynthesisStatus::Optimal)
    return plural(m.swaps, "SWAP") + " + " + plural(m.bridges, "bridge") + " (optimal), depth " +
           std::to_string(m.depth_after) + ", " + seconds(m.total_time) + " s";
  return std::string(status_name(r.status)) + ": at least " + plural(m.lower_bound, "action") +
         " needed, " + seconds(m.total_time) + " s";
}

// Prints the structural and unitary verdicts; true when nothing failed.
bool report_verification(const Circuit& original, const Circuit& mapped, const CouplingGraph& g,
                         const Plan& plan, int unitary_limit, std::ostream& out) {
  const VerifyReport rep = check_structural(original, mapped, g, plan);
  auto line = [&](const char* what, bool ok) { out << what << ": " << (ok ? "ok" : "FAILED") << "\n"; };
  line("connectivity", rep.connectivity_ok);
  line("dependencies", rep.dependency_ok);
  line("mapping", rep.mapping_consistent);
  line("gate counts", rep.gate_counts_ok);
  if (!rep.passed()) out << "first violation: " << rep.first_violation << "\n";
  const EquivalenceResult eq =
      check_unitary_equivalence(original, mapped, plan.initial_map, plan.final_map, unitary_limit);
  if (eq.skipped) {
    out << "unitary: skipped (" << eq.detail << ")\n";
  } else if (eq.equivalent) {
    out << "unitary: equivalent on " << eq.used_qubits << " qubits\n";
  } else {
    out << "unitary: NOT equivalent: " << eq.detail << "\n";
  }
  return rep.passed() && (eq.skipped || eq.equivalent);
}

struct MapCommand {
  std::string circuit, platform, output, metrics, dump_dimacs;
  Routing routing;
  SolverFlags solver;
  bool verify = false;
  bool no_timing = false;

  void attach(CLI::App& app) {
    app.add_option("--circuit", circuit, "OpenQASM 2.0 input")->required()->check(CLI::ExistingFile);
    app.add_option("--platform", platform, "Built-in name, linear-N, grid-RxC, complete-N or file:PATH")
        ->required();
    routing.attach(app);
    solver.attach(app);
    app.add_option("--output", output, "Write the mapped circuit here");
    app.add_option("--metrics", metrics, "Write the metrics JSON here");
    app.add_option("--dump-dimacs", dump_dimacs, "Write the final CNF here and its variable table to PATH.vars");
    app.add_flag("--verify", verify, "Check the result structurally and by simulation");
    app.add_flag("--no-timing", no_timing, "Leave timing fields out of the metrics");
  }

  int run() const {
    const Circuit c = load_qasm(circuit);
    const CouplingGraph g = load_coupling(platform);
    Synthesizer synth(c, g, solver.synthesis(routing.encode()), make_backend(solver.solver));
    const MappedResult r = synth.run();
    if (!dump_dimacs.empty()) {
      std::string header = "c swapsat encoding, assumption literal per step:";
      for (int t = 0; t < synth.encoder().num_steps(); ++t)
        header += " " + std::to_string(synth.encoder().assumption(t));
      write_file(dump_dimacs, header + "\n" + to_dimacs(synth.encoder().cnf()));
      write_file(dump_dimacs + ".vars", synth.encoder().registry().dump());
    }
    if (!metrics.empty()) write_file(metrics, metrics_to_json(r, !no_timing));
    std::cout << c.name() << " on " << g.name() << " [" << routing.encode().combo_name()
              << (routing.no_ancillas ? ", no ancillas" : "") << "]: " << summary_line(r) << "\n";
    if (r.status != SynthesisStatus::Optimal) return kExitIncomplete;
    if (!output.empty()) write_file(output, emit_qasm(*r.mapped));
    if (verify && !report_verification(c, *r.mapped, g, *r.plan, 10, std::cout)) return kExitError;
    return kExitOk;
  }
};

struct VerifyCommand {
  std::string original, mapped, plan, platform;
  int unitary_limit = 10;

  void attach(CLI::App& app) {
    app.add_option("--original", original, "Source circuit")->required()->check(CLI::ExistingFile);
    app.add_option("--mapped", mapped, "Routed circuit")->required()->check(CLI::ExistingFile);
    app.add_option("--plan", plan, "Plan JSON, or a metrics JSON embedding one")->required()
        ->check(CLI::ExistingFile);
    app.add_option("--platform", platform, "Platform the circuit was routed for")->required();
    app.add_option("--unitary-limit", unitary_limit, "Largest used-qubit count simulated")
        ->capture_default_str();
  }

  int run() const {
    const Circuit a = load_qasm(original);
    const Circuit b = load_qasm(mapped);
    const CouplingGraph g = load_coupling(platform);
    std::string text = read_file(plan);
    const auto doc = nlohmann::json::parse(text, nullptr, false);
    if (!doc.is_discarded() && doc.is_object() && doc.contains("plan")) {
      if (doc["plan"].is_null()) throw InvalidArgument(plan + " holds no plan");
      text = doc["plan"].dump();
    }
    const bool ok = report_verification(a, b, g, plan_from_json(text), unitary_limit, std::cout);
    std::cout << (ok ? "verified" : "verification FAILED") << "\n";
    return ok ? kExitOk : kExitMismatch;
  }
};

struct OracleCommand {
  std::string circuit, platform;
  Routing routing;
  int cap = 20;
  bool non_greedy = false;

  void attach(CLI::App& app) {
    app.add_option("--circuit", circuit, "OpenQASM 2.0 input")->required()->check(CLI::ExistingFile);
    app.add_option("--platform", platform, "Platform spec")->required();
    routing.attach(app);
    app.add_option("--cap", cap, "Give up beyond this many actions")->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--non-greedy", non_greedy, "Execute CNOTs one at a time instead of closing greedily");
  }

  int run() const {
    OracleOptions o = oracle_options(routing.encode());
    o.greedy_closure = !non_greedy;
    const auto n = oracle_min_swaps(load_qasm(circuit), load_coupling(platform), o, cap);
    if (!n) {
      std::cout << "oracle: > " << cap << "\n";
      return kExitIncomplete;
    }
    std::cout << "oracle: " << *n << "\n";
    return kExitOk;
  }
};

struct BenchRow {
  std::string circuit, platform, combo, status, detail;
  std::optional<int> qubits;
  std::optional<std::size_t> cx, swaps, bridges, depth;
  std::optional<double> time;
  bool ancillary = true;
};

struct BenchCommand {
  std::string circuits_dir;
  std::vector<std::string> circuit_files;
  std::vector<std::string> platforms{"melbourne"};
  std::vector<std::string> combos{"S", "S+B", "S+R", "S+B+R"};
  std::string format = "csv";
  std::string output;
  bool no_ancillas = false;
  bool no_timing = false;
  SolverFlags solver;

  void attach(CLI::App& app) {
    auto* dir = app.add_option("--circuits", circuits_dir, "Directory of .qasm files")->check(CLI::ExistingDirectory);
    auto* files = app.add_option("--circuit", circuit_files, "Individual circuit files");
    dir->excludes(files);
    app.add_option("--platform", platforms, "Platforms (comma separated)")->delimiter(',')->capture_default_str();
    app.add_option("--combos", combos, "Option combinations (comma separated)")->delimiter(',')
        ->check(CLI::IsMember({"S", "S+B", "S+R", "S+B+R"}))->capture_default_str();
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--output", output, "Write the table here instead of stdout");
    app.add_flag("--no-ancillas", no_ancillas, "Forbid SWAPs with unmapped qubits");
    app.add_flag("--no-timing", no_timing, "Leave the time column empty");
    solver.attach(app);
  }

  std::vector<std::string> inputs() const {
    if (circuits_dir.empty()) return circuit_files;
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(circuits_dir))
      if (e.is_regular_file() && e.path().extension() == ".qasm") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
  }

  BenchRow run_row(const std::string& path, const std::optional<Circuit>& circuit, const std::string& load_error,
                   const std::string& platform, const std::string& combo) const {
    BenchRow row;
    row.circuit = fs::path(path).stem().string();
    row.platform = platform;
    row.combo = combo;
    row.ancillary = !no_ancillas;
    if (!circuit) {
      row.status = "error";
      row.detail = load_error;
      return row;
    }
    row.qubits = circuit->num_qubits();
    row.cx = cnot_equivalent_count(*circuit);
    try {
      EncodeOptions e;
      e.bridges = combo.find('B') != std::string::npos;
      e.relaxed = combo.find('R') != std::string::npos;
      e.ancillary = !no_ancillas;
      const CouplingGraph g = load_coupling(platform);
      const MappedResult r = synthesize(*circuit, g, solver.synthesis(e), make_backend(solver.solver));
      row.status = status_name(r.status);
      if (!no_timing) row.time = r.metrics.total_time;
      if (r.status != SynthesisStatus::Optimal) {
        row.detail = "lower bound " + std::to_string(r.metrics.lower_bound);
        return row;
      }
      row.swaps = r.metrics.swaps;
      row.bridges = r.metrics.bridges;
      row.depth = r.metrics.depth_after;
      const VerifyReport rep = check_structural(*circuit, *r.mapped, g, *r.plan);
      if (!rep.passed()) {
        row.status = "verify_failed";
        row.detail = rep.first_violation;
      }
    } catch (const std::exception& ex) {
      row.status = "error";
      row.detail = ex.what();
    }
    return row;
  }

  static std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
  }

  template <typename T>
  static std::string opt(const std::optional<T>& v) {
    if (!v) return "";
    if constexpr (std::is_floating_point_v<T>) return seconds(*v);
    else return std::to_string(*v);
  }

  std::string render(const std::vector<BenchRow>& rows) const {
    if (format == "json") {
      nlohmann::ordered_json table = nlohmann::ordered_json::array();
      auto value = [](const auto& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
      for (const BenchRow& r : rows)
        table.push_back({{"circuit", r.circuit}, {"qubits", value(r.qubits)}, {"cx", value(r.cx)},
                         {"platform", r.platform}, {"combo", r.combo}, {"ancillary", r.ancillary},
                         {"swaps", value(r.swaps)}, {"bridges", value(r.bridges)}, {"depth", value(r.depth)},
                         {"time", value(r.time)}, {"status", r.status}, {"detail", r.detail}});
      return table.dump(2) + "\n";
    }
    std::string out = "circuit,qubits,cx,platform,combo,ancillary,swaps,bridges,depth,time,status,detail\n";
    for (const BenchRow& r : rows)
      out += csv_field(r.circuit) + "," + opt(r.qubits) + "," + opt(r.cx) + "," + csv_field(r.platform) + "," +
             r.combo + "," + (r.ancillary ? "true" : "false") + "," + opt(r.swaps) + "," + opt(r.bridges) + "," +
             opt(r.depth) + "," + opt(r.time) + "," + r.status + "," + csv_field(r.detail) + "\n";
    return out;
  }

  int run() const {
    std::vector<BenchRow> rows;
    for (const std::string& path : inputs()) {
      std::optional<Circuit> circuit;
      std::string load_error;
      try {
        circuit = load_qasm(path);
      } catch (const std::exception& ex) {
        load_error = ex.what();
      }
      for (const std::string& platform : platforms)
        for (const std::string& combo : combos) {
          rows.push_back(run_row(path, circuit, load_error, platform, combo));
          std::cerr << rows.back().circuit << " " << platform << " " << combo << ": " << rows.back().status << "\n";
        }
    }
    const std::string table = render(rows);
    if (output.empty()) {
      std::cout << table;
    } else {
      write_file(output, table);
    }
    return kExitOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal qubit routing with an incremental SAT encoding"};
  app.require_subcommand(1);
  MapCommand map;
  VerifyCommand verify;
  OracleCommand oracle;
  BenchCommand bench;
  map.attach(*app.add_subcommand("map", "Route a circuit with the fewest SWAPs"));
  verify.attach(*app.add_subcommand("verify", "Check a routed circuit against its source and plan"));
  oracle.attach(*app.add_subcommand("oracle", "Exact search for the least action count on small instances"));
  bench.attach(*app.add_subcommand("bench", "Route a set of circuits over platforms and option combinations"));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }
  try {
    if (app.got_subcommand("map")) return map.run();
    if (app.got_subcommand("verify")) return verify.run();
    if (app.got_subcommand("oracle")) return oracle.run();
    return bench.run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
