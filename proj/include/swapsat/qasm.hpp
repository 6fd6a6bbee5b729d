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
#include <string_view>

#include "swapsat/circuit.hpp"

namespace swapsat {

/// Parses the supported OpenQASM 2.0 subset: one qreg, any number of cregs,
/// the gates of GateKind, terminal measures and barriers. Anything else is
/// rejected with UnsupportedError (named construct) or ParseError (syntax),
/// both carrying the line and column of the offending token.
Circuit parse_qasm(std::string_view text, std::string name = {});

/// Reads and parses a file; the circuit is named after the file stem.
Circuit load_qasm(const std::string& path);

/// Emits OpenQASM 2.0 text. parse_qasm(emit_qasm(c)) == c.
std::string emit_qasm(const Circuit& circuit);

/// Evaluates an angle expression made of numeric literals, `pi`, parentheses
/// and + - * /. Throws ParseError on anything else.
double evaluate_angle(std::string_view expression);

}  // namespace swapsat
