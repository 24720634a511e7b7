// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ndcbench Authors

#pragma once

#include <iosfwd>
#include <string>

#include "ndc/circuit.hpp"

namespace ndc {

// Line-oriented textual circuit format.
//
//   # comment (also allowed after an instruction)
//   wires 5 clbits 2
//   ry 0.78539816339744828 1
//   rz 1.5 0
//   h 0
//   x 2
//   sx 3
//   t 4
//   cx 0 1
//   swap 1 2
//   meas 4 1          # measure wire 4 into classical bit 1
//   barrier
//   cif 0 1 h 3       # if clbit 0 == 1, apply h to wire 3
//
// The header must be the first non-blank, non-comment line. Angles are
// read with full double precision and emitted so that parse(emit(c))
// reproduces c exactly.

Circuit parse_circuit(std::istream& in);
Circuit parse_circuit_string(const std::string& text);
Circuit parse_circuit_file(const std::string& path);

std::string emit_circuit(const Circuit& c);
void write_circuit_file(const Circuit& c, const std::string& path);

}  // namespace ndc
