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

#include "qsm/gate.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace qsm {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 17> kNames{{
    {GateKind::X, "X"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::S_DG, "S_DG"},
    {GateKind::T, "T"},
    {GateKind::T_DG, "T_DG"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CZ, "CZ"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::TOFFOLI, "TOFFOLI"},
    {GateKind::FREDKIN, "FREDKIN"},
    {GateKind::RP_TOFFOLI, "RP_TOFFOLI"},
    {GateKind::RP_TOFFOLI_DG, "RP_TOFFOLI_DG"},
    {GateKind::RP_FREDKIN, "RP_FREDKIN"},
    {GateKind::RP_FREDKIN_DG, "RP_FREDKIN_DG"},
    {GateKind::MCZ, "MCZ"},
}};

}  // namespace

bool is_primitive(GateKind kind) {
    return kind <= GateKind::CZ;
}

bool is_t_like(GateKind kind) {
    return kind == GateKind::T || kind == GateKind::T_DG;
}

GateKind inverse_kind(GateKind kind) {
    switch (kind) {
        case GateKind::S:
            return GateKind::S_DG;
        case GateKind::S_DG:
            return GateKind::S;
        case GateKind::T:
            return GateKind::T_DG;
        case GateKind::T_DG:
            return GateKind::T;
        case GateKind::RP_TOFFOLI:
            return GateKind::RP_TOFFOLI_DG;
        case GateKind::RP_TOFFOLI_DG:
            return GateKind::RP_TOFFOLI;
        case GateKind::RP_FREDKIN:
            return GateKind::RP_FREDKIN_DG;
        case GateKind::RP_FREDKIN_DG:
            return GateKind::RP_FREDKIN;
        default:
            return kind;
    }
}

std::string_view gate_name(GateKind kind) {
    for (const auto &[k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &[k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::string_view ancilla_policy_name(AncillaPolicy policy) {
    return policy == AncillaPolicy::Clean ? "clean" : "borrowed";
}

std::optional<AncillaPolicy> ancilla_policy_from_name(std::string_view name) {
    if (name == "clean") {
        return AncillaPolicy::Clean;
    }
    if (name == "borrowed") {
        return AncillaPolicy::Borrowed;
    }
    return std::nullopt;
}

std::optional<std::size_t> fixed_arity(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::S:
        case GateKind::S_DG:
        case GateKind::T:
        case GateKind::T_DG:
            return 1;
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
            return 2;
        case GateKind::TOFFOLI:
        case GateKind::FREDKIN:
        case GateKind::RP_TOFFOLI:
        case GateKind::RP_TOFFOLI_DG:
        case GateKind::RP_FREDKIN:
        case GateKind::RP_FREDKIN_DG:
            return 3;
        case GateKind::MCZ:
            return std::nullopt;
    }
    return std::nullopt;
}

Gate Gate::inverse() const {
    Gate g = *this;
    g.kind = inverse_kind(kind);
    return g;
}

std::size_t Gate::ancilla_count() const {
    if (kind != GateKind::MCZ) {
        return 0;
    }
    return qubits.size() - controls - 1;
}

Gate make_gate(GateKind kind, std::vector<Qubit> qubits) {
    if (kind == GateKind::MCZ) {
        throw std::invalid_argument("make_gate: use make_mcz for MCZ gates");
    }
    return Gate{kind, std::move(qubits)};
}

Gate make_mcz(std::vector<Qubit> controls, Qubit target, std::vector<Qubit> ancillas,
              AncillaPolicy policy) {
    if (controls.empty()) {
        throw std::invalid_argument("make_mcz: at least one control is required");
    }
    Gate g{GateKind::MCZ, std::move(controls)};
    g.controls = static_cast<std::uint32_t>(g.qubits.size());
    g.qubits.push_back(target);
    g.qubits.insert(g.qubits.end(), ancillas.begin(), ancillas.end());
    g.policy = policy;
    return g;
}

void validate_gate(const Gate &gate, std::uint32_t width) {
    if (auto arity = fixed_arity(gate.kind)) {
        if (gate.qubits.size() != *arity) {
            std::ostringstream msg;
            msg << gate_name(gate.kind) << " expects " << *arity << " qubits, got " << gate.qubits.size();
            throw std::invalid_argument(msg.str());
        }
    } else if (gate.controls < 1 || gate.qubits.size() < gate.controls + 1) {
        throw std::invalid_argument("MCZ needs k >= 1 controls plus a target");
    }
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        if (gate.qubits[i] >= width) {
            std::ostringstream msg;
            msg << gate_name(gate.kind) << " qubit " << gate.qubits[i] << " outside width " << width;
            throw std::invalid_argument(msg.str());
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (gate.qubits[i] == gate.qubits[j]) {
                std::ostringstream msg;
                msg << gate_name(gate.kind) << " repeats qubit " << gate.qubits[i];
                throw std::invalid_argument(msg.str());
            }
        }
    }
}

std::string to_string(const Gate &gate) {
    std::ostringstream out;
    out << gate_name(gate.kind);
    if (gate.kind == GateKind::MCZ) {
        out << "(k=" << gate.controls << "," << ancilla_policy_name(gate.policy) << ")";
    }
    for (Qubit q : gate.qubits) {
        out << ' ' << q;
    }
    return out.str();
}

}  // namespace qsm
