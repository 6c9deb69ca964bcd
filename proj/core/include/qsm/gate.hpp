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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qsm {

using Qubit = std::uint32_t;

/// Gate kinds. Primitives are the Clifford+T set; everything from SWAP on is a
/// macro that survives until `lower` rewrites it into primitives.
enum class GateKind : std::uint8_t {
    X,
    Z,
    H,
    S,
    S_DG,
    T,
    T_DG,
    CNOT,
    CZ,
    SWAP,
    TOFFOLI,
    FREDKIN,
    RP_TOFFOLI,
    RP_TOFFOLI_DG,
    RP_FREDKIN,
    RP_FREDKIN_DG,
    MCZ,
};

/// How an MCZ macro treats the ancilla wires it is handed.
enum class AncillaPolicy : std::uint8_t {
    /// Ancillas start in |0> and are returned to |0>.
    Clean,
    /// Ancillas hold arbitrary state and are returned unchanged.
    Borrowed,
};

bool is_primitive(GateKind kind);
bool is_t_like(GateKind kind);
GateKind inverse_kind(GateKind kind);

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

std::string_view ancilla_policy_name(AncillaPolicy policy);
std::optional<AncillaPolicy> ancilla_policy_from_name(std::string_view name);

/// Number of operand qubits for fixed-arity kinds. MCZ returns nullopt: its
/// arity is controls + 1 + ancillas.
std::optional<std::size_t> fixed_arity(GateKind kind);

/// One gate instance. Operand order is controls first, then targets.
/// FREDKIN-like gates use [control, swap_a, swap_b]; TOFFOLI-like gates use
/// [control_a, control_b, target]; MCZ uses [controls..., target, ancillas...].
struct Gate {
    GateKind kind;
    std::vector<Qubit> qubits;
    /// Control count; meaningful only for MCZ.
    std::uint32_t controls = 0;
    AncillaPolicy policy = AncillaPolicy::Clean;

    Gate inverse() const;
    std::size_t ancilla_count() const;

    bool operator==(const Gate &other) const = default;
};

Gate make_gate(GateKind kind, std::vector<Qubit> qubits);
Gate make_mcz(std::vector<Qubit> controls, Qubit target, std::vector<Qubit> ancillas = {},
              AncillaPolicy policy = AncillaPolicy::Clean);

/// Throws std::invalid_argument when the operand list does not fit `kind` or
/// names a qubit outside [0, width).
void validate_gate(const Gate &gate, std::uint32_t width);

std::string to_string(const Gate &gate);

}  // namespace qsm
