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

#include <string>

#include "swapsat/circuit.hpp"
#include "swapsat/qasm.hpp"

namespace swapsat::testing {

inline std::string source_path(const std::string& relative) {
  return std::string(SWAPSAT_SOURCE_DIR) + "/" + relative;
}

inline Circuit or_circuit() { return load_qasm(source_path("benchmarks/or.qasm")); }
inline Circuit or_measured_circuit() {
  return load_qasm(source_path("benchmarks/or_measured.qasm"));
}

}  // namespace swapsat::testing
