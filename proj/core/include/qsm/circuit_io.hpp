// Copyright 2026 The qsm-tcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>

#include "qsm/circuit.hpp"

namespace qsm {

/// JSON circuit document:
///   {"width": w, "layout": {"n":..,"N":..,"M":..,"ancilla":..},
///    "gates": [{"kind": "CNOT", "qubits": [0, 1]},
///              {"kind": "MCZ", "qubits": [...], "k": 3, "ancilla": "clean"}]}
/// "layout" is omitted when the circuit has none. Gate order is execution order.
std::string circuit_to_json(const Circuit &c, int indent = -1);
Circuit circuit_from_json(const std::string &text);

/// OpenQASM 2.0 using only h/x/z/s/sdg/t/tdg/cx/cz. Throws std::invalid_argument
/// if the circuit still holds macros.
std::string circuit_to_qasm(const Circuit &c);

}  // namespace qsm
