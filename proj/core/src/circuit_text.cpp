// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#include "ndc/circuit_text.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

#include "ndc/errors.hpp"

namespace ndc {
namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

[[noreturn]] void fail(int line_no, const std::string& message) {
  std::ostringstream msg;
  msg << "line " << line_no << ": " << message;
  throw ParseError(msg.str());
}

int parse_int(int line_no, const std::string& tok, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    fail(line_no, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

double parse_double(int line_no, const std::string& tok) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size())
    fail(line_no, "expected an angle, got '" + tok + "'");
  return value;
}

void need_args(int line_no, const std::vector<std::string>& tokens,
               std::size_t count) {
  if (tokens.size() != count + 1) {
    std::ostringstream msg;
    msg << "'" << tokens[0] << "' takes " << count << " argument"
        << (count == 1 ? "" : "s") << ", got " << (tokens.size() - 1);
    fail(line_no, msg.str());
  }
}

// Parses a plain gate (no cif, meas or barrier) from tokens[from..].
std::optional<Instruction> parse_plain_gate(
    int line_no, const std::vector<std::string>& tokens, std::size_t from) {
  const std::string& op = tokens[from];
  const std::size_t argc = tokens.size() - from - 1;
  auto arg_int = [&](std::size_t i, const char* what) {
    return parse_int(line_no, tokens[from + 1 + i], what);
  };
  auto expect = [&](std::size_t count) {
    if (argc != count) {
      std::ostringstream msg;
      msg << "'" << op << "' takes " << count << " argument"
          << (count == 1 ? "" : "s") << ", got " << argc;
      fail(line_no, msg.str());
    }
  };
  if (op == "ry" || op == "rz") {
    expect(2);
    double angle = parse_double(line_no, tokens[from + 1]);
    int w = parse_int(line_no, tokens[from + 2], "a wire index");
    return op == "ry" ? ry(w, angle) : rz(w, angle);
  }
  if (op == "h" || op == "x" || op == "sx" || op == "t") {
    expect(1);
    int w = arg_int(0, "a wire index");
    if (op == "h") return h(w);
    if (op == "x") return x(w);
    if (op == "sx") return sx(w);
    return t(w);
  }
  if (op == "cx" || op == "swap") {
    expect(2);
    int a = arg_int(0, "a wire index");
    int b = arg_int(1, "a wire index");
    return op == "cx" ? cx(a, b) : swap_gate(a, b);
  }
  return std::nullopt;
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<Circuit> circuit;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!circuit) {
      if (tokens.size() != 4 || tokens[0] != "wires" || tokens[2] != "clbits")
        fail(line_no, "expected header 'wires N clbits M', got '" + tokens[0] +
                          "...'");
      int wires = parse_int(line_no, tokens[1], "a wire count");
      int clbits = parse_int(line_no, tokens[3], "a classical bit count");
      try {
        circuit.emplace(wires, clbits);
      } catch (const ValidationError& e) {
        fail(line_no, e.what());
      }
      continue;
    }
    const std::string& op = tokens[0];
    try {
      if (auto plain = parse_plain_gate(line_no, tokens, 0)) {
        circuit->add(*plain);
      } else if (op == "meas") {
        need_args(line_no, tokens, 2);
        int w = parse_int(line_no, tokens[1], "a wire index");
        int b = parse_int(line_no, tokens[2], "a classical bit index");
        circuit->add(measure(w, b));
      } else if (op == "barrier") {
        need_args(line_no, tokens, 0);
        circuit->add(barrier());
      } else if (op == "cif") {
        if (tokens.size() < 4)
          fail(line_no, "'cif' takes a bit, a value and a gate");
        int bit = parse_int(line_no, tokens[1], "a classical bit index");
        int value = parse_int(line_no, tokens[2], "a bit value");
        if (value != 0 && value != 1)
          fail(line_no, "cif value must be 0 or 1, got '" + tokens[2] + "'");
        auto inner = parse_plain_gate(line_no, tokens, 3);
        if (!inner)
          fail(line_no, "unknown or non-unitary cif gate '" + tokens[3] + "'");
        circuit->add(cif(bit, value != 0, *inner));
      } else {
        fail(line_no, "unknown mnemonic '" + op + "'");
      }
    } catch (const ValidationError& e) {
      fail(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError("empty input: missing 'wires N clbits M'");
  return *circuit;
}

Circuit parse_circuit_string(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

Circuit parse_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_circuit(in);
}

namespace {

std::string format_angle(double angle) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", angle);
  return buf;
}

void emit_plain(std::ostream& out, GateKind kind, const Instruction& ins) {
  out << gate_name(kind);
  if (kind == GateKind::RotY || kind == GateKind::RotZ)
    out << ' ' << format_angle(ins.angle);
  out << ' ' << ins.w0;
  if (kind == GateKind::Cnot || kind == GateKind::Swap) out << ' ' << ins.w1;
}

}  // namespace

std::string emit_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "wires " << c.wires() << " clbits " << c.clbits() << '\n';
  for (const auto& ins : c.instructions()) {
    switch (ins.kind) {
      case GateKind::Measure:
        out << "meas " << ins.w0 << ' ' << ins.clbit;
        break;
      case GateKind::Barrier:
        out << "barrier";
        break;
      case GateKind::ClassicallyControlled:
        out << "cif " << ins.clbit << ' ' << (ins.required_value ? 1 : 0)
            << ' ';
        emit_plain(out, ins.inner, ins);
        break;
      default:
        emit_plain(out, ins.kind, ins);
        break;
    }
    out << '\n';
  }
  return out.str();
}

void write_circuit_file(const Circuit& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << emit_circuit(c);
}

}  // namespace ndc
