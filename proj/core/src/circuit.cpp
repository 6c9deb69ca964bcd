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

#include "qsm/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qsm/synthesis.hpp"

namespace qsm {

RegisterLayout RegisterLayout::make(std::uint32_t n, std::uint32_t M, std::uint32_t ancilla) {
    if (n >= 31) {
        throw std::invalid_argument("RegisterLayout: index register too wide");
    }
    RegisterLayout layout{n, std::uint32_t{1} << n, M, ancilla};
    return layout;
}

void RegisterLayout::validate() const {
    if (n >= 31 || N != (std::uint32_t{1} << n)) {
        std::ostringstream msg;
        msg << "RegisterLayout: N=" << N << " is not 2^n for n=" << n;
        throw std::invalid_argument(msg.str());
    }
}

Circuit::Circuit(std::uint32_t width) : width_(width) {}

Circuit::Circuit(const RegisterLayout &layout) : width_(layout.width()), layout_(layout) {
    layout.validate();
}

Circuit::Circuit(std::uint32_t width, std::optional<RegisterLayout> layout)
    : width_(width), layout_(layout) {
    if (layout_) {
        layout_->validate();
        if (layout_->width() != width_) {
            throw std::invalid_argument("Circuit: layout width does not match circuit width");
        }
    }
}

Circuit &Circuit::append(Gate gate) {
    validate_gate(gate, width_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(GateKind kind, std::initializer_list<Qubit> qubits) {
    return append(make_gate(kind, std::vector<Qubit>(qubits)));
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.width_ != width_) {
        std::ostringstream msg;
        msg << "width mismatch: " << width_ << " vs " << other.width_;
        throw std::invalid_argument(msg.str());
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [kind](const Gate &g) { return g.kind == kind; }));
}

bool Circuit::is_lowered() const {
    return std::all_of(gates_.begin(), gates_.end(), [](const Gate &g) { return is_primitive(g.kind); });
}

Circuit compose(const Circuit &a, const Circuit &b) {
    Circuit result = a;
    result.append(b);
    return result;
}

Circuit invert(const Circuit &c) {
    Circuit result(c.width(), c.layout());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        result.append(it->inverse());
    }
    return result;
}

Circuit lower(const Circuit &c) {
    Circuit result(c.width(), c.layout());
    std::vector<Gate> pending;
    for (const Gate &g : c.gates()) {
        if (is_primitive(g.kind)) {
            result.append(g);
            continue;
        }
        // Rules may emit other macros (FREDKIN -> TOFFOLI, MCZ -> RP_TOFFOLI),
        // so expand depth-first until only primitives remain.
        pending.assign(1, g);
        while (!pending.empty()) {
            Gate top = std::move(pending.back());
            pending.pop_back();
            if (is_primitive(top.kind)) {
                result.append(std::move(top));
                continue;
            }
            std::vector<Gate> expansion = lowering_rule(top);
            for (auto it = expansion.rbegin(); it != expansion.rend(); ++it) {
                pending.push_back(std::move(*it));
            }
        }
    }
    return result;
}

Circuit remap(const Circuit &c, std::span<const Qubit> wire_map, std::uint32_t width,
              std::optional<RegisterLayout> layout) {
    if (wire_map.size() != c.width()) {
        throw std::invalid_argument("remap: wire map size must equal circuit width");
    }
    Circuit result(width, layout);
    for (const Gate &g : c.gates()) {
        Gate moved = g;
        for (Qubit &q : moved.qubits) {
            q = wire_map[q];
        }
        result.append(std::move(moved));
    }
    return result;
}

}  // namespace qsm
