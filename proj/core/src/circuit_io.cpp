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

#include "qsm/circuit_io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace qsm {

using nlohmann::json;

std::string circuit_to_json(const Circuit &c, int indent) {
    json doc;
    doc["width"] = c.width();
    if (const auto &layout = c.layout()) {
        doc["layout"] = {{"n", layout->n}, {"N", layout->N}, {"M", layout->M}, {"ancilla", layout->ancilla}};
    }
    json gates = json::array();
    for (const Gate &g : c.gates()) {
        json entry = {{"kind", gate_name(g.kind)}, {"qubits", g.qubits}};
        if (g.kind == GateKind::MCZ) {
            entry["k"] = g.controls;
            entry["ancilla"] = ancilla_policy_name(g.policy);
        }
        gates.push_back(std::move(entry));
    }
    doc["gates"] = std::move(gates);
    return doc.dump(indent);
}

Circuit circuit_from_json(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("circuit document: ") + e.what());
    }
    try {
        auto width = doc.at("width").get<std::uint32_t>();
        std::optional<RegisterLayout> layout;
        if (doc.contains("layout")) {
            const json &l = doc["layout"];
            layout = RegisterLayout{l.at("n").get<std::uint32_t>(), l.at("N").get<std::uint32_t>(),
                                    l.at("M").get<std::uint32_t>(), l.value("ancilla", std::uint32_t{0})};
        }
        Circuit c(width, layout);
        for (const json &entry : doc.at("gates")) {
            auto name = entry.at("kind").get<std::string>();
            auto kind = gate_kind_from_name(name);
            if (!kind) {
                throw std::invalid_argument("circuit document: unknown gate kind '" + name + "'");
            }
            Gate g{*kind, entry.at("qubits").get<std::vector<Qubit>>()};
            if (*kind == GateKind::MCZ) {
                g.controls = entry.at("k").get<std::uint32_t>();
                auto policy_name = entry.value("ancilla", std::string("clean"));
                auto policy = ancilla_policy_from_name(policy_name);
                if (!policy) {
                    throw std::invalid_argument("circuit document: unknown ancilla policy '" + policy_name + "'");
                }
                g.policy = *policy;
            }
            c.append(std::move(g));
        }
        return c;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("circuit document: ") + e.what());
    }
}

std::string circuit_to_qasm(const Circuit &c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" << c.width() << "];\n";
    for (const Gate &g : c.gates()) {
        const char *op = nullptr;
        switch (g.kind) {
            case GateKind::X: op = "x"; break;
            case GateKind::Z: op = "z"; break;
            case GateKind::H: op = "h"; break;
            case GateKind::S: op = "s"; break;
            case GateKind::S_DG: op = "sdg"; break;
            case GateKind::T: op = "t"; break;
            case GateKind::T_DG: op = "tdg"; break;
            case GateKind::CNOT: op = "cx"; break;
            case GateKind::CZ: op = "cz"; break;
            default:
                throw std::invalid_argument("QASM export needs a lowered circuit; found " +
                                            std::string(gate_name(g.kind)));
        }
        out << op;
        for (std::size_t i = 0; i < g.qubits.size(); ++i) {
            out << (i == 0 ? " " : ",") << "q[" << g.qubits[i] << "]";
        }
        out << ";\n";
    }
    return out.str();
}

}  // namespace qsm
