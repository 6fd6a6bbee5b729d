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

#include "swapsat/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include "swapsat/errors.hpp"

namespace swapsat {

namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
  std::size_t offset = 0;
  std::size_t end = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      t.offset = pos_;
      if (pos_ >= text_.size()) {
        t.kind = Tok::End;
        t.end = pos_;
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::Ident;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_'))
          advance();
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
        t.kind = Tok::Number;
        lex_number();
      } else if (c == '"') {
        t.kind = Tok::String;
        advance();
        while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n')
          advance();
        if (pos_ >= text_.size() || text_[pos_] != '"')
          throw ParseError("unterminated string", t.line, t.column);
        advance();
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        t.kind = Tok::Symbol;
        advance();
        advance();
      } else if (c == '=' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
        t.kind = Tok::Symbol;
        advance();
        advance();
      } else if (std::string_view(";,()[]{}+-*/^").find(c) != std::string_view::npos) {
        t.kind = Tok::Symbol;
        advance();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         t.line, t.column);
      }
      t.end = pos_;
      t.text = std::string(text_.substr(t.offset, t.end - t.offset));
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (text_.substr(pos_, 2) == "/*") {
        const std::size_t line = line_, column = column_;
        advance();
        advance();
        while (pos_ < text_.size() && text_.substr(pos_, 2) != "*/") advance();
        if (pos_ >= text_.size())
          throw ParseError("unterminated comment", line, column);
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  void lex_number() {
    auto digits = [&] {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        advance();
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      advance();
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      advance();
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-'))
        advance();
      digits();
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Recursive-descent evaluator over a token range.
class AngleEvaluator {
 public:
  AngleEvaluator(const std::vector<Token>& toks, std::size_t begin,
                 std::size_t end)
      : toks_(toks), pos_(begin), end_(end) {}

  double run() {
    if (pos_ >= end_) fail("empty expression");
    const double v = expr();
    if (pos_ != end_) fail("unexpected token '" + toks_[pos_].text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at(std::string_view sym) const {
    return pos_ < end_ && toks_[pos_].kind == Tok::Symbol &&
           toks_[pos_].text == sym;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = toks_[std::min(pos_, end_ == 0 ? 0 : end_ - 1)];
    throw ParseError("bad angle expression: " + msg, t.line, t.column);
  }

  double expr() {
    double v = term();
    while (at("+") || at("-")) {
      const bool plus = peek().text == "+";
      ++pos_;
      const double rhs = term();
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  double term() {
    double v = unary();
    while (at("*") || at("/")) {
      const bool mul = peek().text == "*";
      ++pos_;
      const double rhs = unary();
      v = mul ? v * rhs : v / rhs;
    }
    return v;
  }

  double unary() {
    if (at("-")) {
      ++pos_;
      return -unary();
    }
    if (at("+")) {
      ++pos_;
      return unary();
    }
    return primary();
  }

  double primary() {
    if (pos_ >= end_) fail("unexpected end");
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      ++pos_;
      try {
        std::size_t used = 0;
        const double v = std::stod(t.text, &used);
        if (used != t.text.size()) fail("bad number '" + t.text + "'");
        return v;
      } catch (const std::logic_error&) {
        fail("bad number '" + t.text + "'");
      }
    }
    if (t.kind == Tok::Ident && t.text == "pi") {
      ++pos_;
      return std::numbers::pi;
    }
    if (at("(")) {
      ++pos_;
      const double v = expr();
      if (!at(")")) fail("missing ')'");
      ++pos_;
      return v;
    }
    fail("unexpected token '" + t.text + "'");
  }

  const std::vector<Token>& toks_;
  std::size_t pos_;
  std::size_t end_;
};

struct Argument {
  std::string reg;
  std::optional<int> index;
  const Token* where = nullptr;
};

class Parser {
 public:
  Parser(std::string_view text, std::string name)
      : text_(text), toks_(Lexer(text).run()), name_(std::move(name)) {}

  Circuit run() {
    if (is_ident("OPENQASM")) header();
    while (peek().kind != Tok::End) statement();
    if (!circuit_) circuit_.emplace(0, "q", name_);
    for (auto& reg : pending_cregs_) circuit_->add_creg(reg);
    return std::move(*circuit_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is_ident(std::string_view s) const {
    return peek().kind == Tok::Ident && peek().text == s;
  }
  bool is_symbol(std::string_view s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw ParseError(msg, t.line, t.column);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, peek()); }

  const Token& expect_symbol(std::string_view s) {
    if (!is_symbol(s))
      fail("expected '" + std::string(s) + "' but found '" + describe(peek()) +
           "'");
    return next();
  }
  const Token& expect_ident() {
    if (peek().kind != Tok::Ident)
      fail("expected identifier but found '" + describe(peek()) + "'");
    return next();
  }
  int expect_int() {
    const Token& t = peek();
    if (t.kind != Tok::Number ||
        !std::all_of(t.text.begin(), t.text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      fail("expected integer but found '" + describe(t) + "'");
    next();
    return std::stoi(t.text);
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : t.text;
  }

  void header() {
    next();
    const Token& v = peek();
    if (v.kind != Tok::Number) fail("expected version number");
    next();
    if (v.text != "2.0" && v.text != "2")
      throw UnsupportedError("OPENQASM " + v.text, v.line, v.column);
    expect_symbol(";");
  }

  void statement() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail("expected statement but found '" + describe(t) + "'");
    const std::string& word = t.text;
    if (word == "include") {
      next();
      const Token& file = peek();
      if (file.kind != Tok::String) fail("expected file name");
      next();
      if (file.text != "\"qelib1.inc\"")
        throw UnsupportedError("include " + file.text, file.line, file.column);
      expect_symbol(";");
    } else if (word == "qreg") {
      next();
      const Token& id = expect_ident();
      expect_symbol("[");
      const int size = expect_int();
      expect_symbol("]");
      expect_symbol(";");
      if (circuit_) throw UnsupportedError("second qreg", t.line, t.column);
      circuit_.emplace(size, id.text, name_);
      measured_.assign(static_cast<std::size_t>(size), false);
    } else if (word == "creg") {
      next();
      const Token& id = expect_ident();
      expect_symbol("[");
      const int size = expect_int();
      expect_symbol("]");
      expect_symbol(";");
      if (size <= 0) fail("creg size must be positive", id);
      for (const auto& r : pending_cregs_)
        if (r.name == id.text) fail("duplicate creg '" + id.text + "'", id);
      pending_cregs_.push_back({id.text, size});
    } else if (word == "gate" || word == "opaque" || word == "if" ||
               word == "reset" || word == "OPENQASM" || word == "U" ||
               word == "CX") {
      throw UnsupportedError(word, t.line, t.column);
    } else if (word == "measure") {
      next();
      measure(t);
    } else if (word == "barrier") {
      next();
      barrier(t);
    } else {
      gate(t);
    }
  }

  Argument argument() {
    Argument a;
    a.where = &peek();
    a.reg = expect_ident().text;
    if (is_symbol("[")) {
      next();
      a.index = expect_int();
      expect_symbol("]");
    }
    return a;
  }

  std::vector<Argument> argument_list() {
    std::vector<Argument> args{argument()};
    while (is_symbol(",")) {
      next();
      args.push_back(argument());
    }
    return args;
  }

  Circuit& need_qreg(const Token& t) {
    if (!circuit_) fail("qreg must be declared before it is used", t);
    return *circuit_;
  }

  // Resolves a quantum argument to qubit indices (all of them for a bare
  // register name).
  std::vector<Qubit> qubits_of(const Argument& a) {
    Circuit& c = need_qreg(*a.where);
    if (a.reg != c.qreg_name())
      fail("unknown quantum register '" + a.reg + "'", *a.where);
    if (a.index) {
      if (*a.index >= c.num_qubits())
        fail("qubit index " + std::to_string(*a.index) + " out of range",
             *a.where);
      return {*a.index};
    }
    std::vector<Qubit> all(static_cast<std::size_t>(c.num_qubits()));
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Qubit>(i);
    return all;
  }

  void push(Gate g, const Token& where) {
    if (g.kind != GateKind::Barrier) {
      for (Qubit q : g.qubits) {
        if (measured_[q])
          fail("gate '" + std::string(g.name()) + "' after measure on qubit " +
                   std::to_string(q) + " (measures must be terminal)",
               where);
      }
    }
    try {
      circuit_->append(std::move(g));
    } catch (const InvalidArgument& e) {
      fail(e.what(), where);
    }
  }

  void measure(const Token& start) {
    const Argument src = argument();
    expect_symbol("->");
    const Argument dst = argument();
    expect_symbol(";");
    const std::vector<Qubit> qs = qubits_of(src);
    const ClassicalRegister* reg = nullptr;
    for (const auto& r : pending_cregs_)
      if (r.name == dst.reg) reg = &r;
    if (!reg) fail("unknown classical register '" + dst.reg + "'", *dst.where);
    std::vector<int> bits;
    if (dst.index) {
      if (*dst.index >= reg->size) fail("classical index out of range", *dst.where);
      bits.push_back(*dst.index);
    } else {
      for (int i = 0; i < reg->size; ++i) bits.push_back(i);
    }
    if (bits.size() != qs.size())
      fail("measure register sizes differ", start);
    for (std::size_t i = 0; i < qs.size(); ++i) {
      Gate g;
      g.kind = GateKind::Measure;
      g.qubits = {qs[i]};
      g.cbit = ClassicalBit{reg->name, bits[i]};
      push(std::move(g), start);
      measured_[qs[i]] = true;
    }
  }

  void barrier(const Token& start) {
    const auto args = argument_list();
    expect_symbol(";");
    Gate g;
    g.kind = GateKind::Barrier;
    for (const auto& a : args) {
      for (Qubit q : qubits_of(a)) {
        if (std::find(g.qubits.begin(), g.qubits.end(), q) == g.qubits.end())
          g.qubits.push_back(q);
      }
    }
    push(std::move(g), start);
  }

  void gate(const Token& start) {
    const Token& id = next();
    const auto kind = gate_kind_from_name(id.text);
    if (!kind || *kind == GateKind::Measure || *kind == GateKind::Barrier)
      throw UnsupportedError(id.text, id.line, id.column);
    std::vector<std::string> params;
    if (is_symbol("(")) params = parameters();
    if (params.size() != gate_param_count(*kind))
      fail(id.text + " takes " + std::to_string(gate_param_count(*kind)) +
               " parameter(s), got " + std::to_string(params.size()),
           id);
    const auto args = argument_list();
    expect_symbol(";");
    const bool two = *kind == GateKind::Cx || *kind == GateKind::Swap;
    if (two) {
      if (args.size() != 2) fail(id.text + " takes 2 qubit arguments", id);
      if (!args[0].index || !args[1].index)
        fail("register broadcast is not supported for " + id.text, id);
      Gate g;
      g.kind = *kind;
      g.params = params;
      g.qubits = {qubits_of(args[0])[0], qubits_of(args[1])[0]};
      push(std::move(g), start);
      return;
    }
    if (args.size() != 1) fail(id.text + " takes 1 qubit argument", id);
    for (Qubit q : qubits_of(args[0])) {
      Gate g;
      g.kind = *kind;
      g.params = params;
      g.qubits = {q};
      push(std::move(g), start);
    }
  }

  std::vector<std::string> parameters() {
    expect_symbol("(");
    std::vector<std::string> out;
    std::size_t begin = pos_;
    int depth = 0;
    while (true) {
      const Token& t = peek();
      if (t.kind == Tok::End) fail("unterminated parameter list");
      if (t.kind == Tok::Symbol && depth == 0 && (t.text == "," || t.text == ")")) {
        if (begin == pos_) fail("empty parameter");
        AngleEvaluator(toks_, begin, pos_).run();
        const std::size_t from = toks_[begin].offset;
        const std::size_t to = toks_[pos_ - 1].end;
        out.emplace_back(text_.substr(from, to - from));
        next();
        if (t.text == ")") return out;
        begin = pos_;
        continue;
      }
      if (t.kind == Tok::Symbol && t.text == "(") ++depth;
      if (t.kind == Tok::Symbol && t.text == ")") --depth;
      next();
    }
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string name_;
  std::optional<Circuit> circuit_;
  std::vector<ClassicalRegister> pending_cregs_;
  std::vector<bool> measured_;
};

}  // namespace

Circuit parse_qasm(std::string_view text, std::string name) {
  return Parser(text, std::move(name)).run();
}

Circuit load_qasm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_qasm(buffer.str(), std::filesystem::path(path).stem().string());
}

std::string emit_qasm(const Circuit& circuit) {
  std::ostringstream out;
  const std::string& q = circuit.qreg_name();
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out << "qreg " << q << "[" << circuit.num_qubits() << "];\n";
  for (const auto& r : circuit.cregs())
    out << "creg " << r.name << "[" << r.size << "];\n";
  for (const Gate& g : circuit.gates()) {
    out << g.name();
    if (!g.params.empty()) {
      out << "(";
      for (std::size_t i = 0; i < g.params.size(); ++i)
        out << (i ? "," : "") << g.params[i];
      out << ")";
    }
    out << " ";
    for (std::size_t i = 0; i < g.qubits.size(); ++i)
      out << (i ? "," : "") << q << "[" << g.qubits[i] << "]";
    if (g.cbit) out << " -> " << g.cbit->reg << "[" << g.cbit->index << "]";
    out << ";\n";
  }
  return out.str();
}

double evaluate_angle(std::string_view expression) {
  const auto toks = Lexer(expression).run();
  return AngleEvaluator(toks, 0, toks.size() - 1).run();
}

}  // namespace swapsat
