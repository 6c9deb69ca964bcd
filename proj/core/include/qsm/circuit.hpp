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
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "qsm/gate.hpp"

namespace qsm {

/// Three-register layout of a string-matching circuit.
///
/// Wire order: index register (n wires, wire 0 is the most significant bit of
/// the shift k), data register l_0..l_{N-1}, pattern register p_0..p_{M-1},
/// then `ancilla` helper wires.
struct RegisterLayout {
    std::uint32_t n = 0;
    std::uint32_t N = 0;
    std::uint32_t M = 0;
    std::uint32_t ancilla = 0;

    /// Layout with N = 2^n.
    static RegisterLayout make(std::uint32_t n, std::uint32_t M, std::uint32_t ancilla = 0);

    std::uint32_t width() const { return n + N + M + ancilla; }
    Qubit index_qubit(std::uint32_t i) const { return i; }
    Qubit data_qubit(std::uint32_t j) const { return n + j; }
    Qubit pattern_qubit(std::uint32_t j) const { return n + N + j; }
    Qubit ancilla_qubit(std::uint32_t j) const { return n + N + M + j; }

    /// Index wire carrying the bit of value 2^bit.
    Qubit index_bit_qubit(std::uint32_t bit) const { return n - 1 - bit; }

    void validate() const;

    bool operator==(const RegisterLayout &) const = default;
};

class Circuit {
   public:
    explicit Circuit(std::uint32_t width = 0);
    explicit Circuit(const RegisterLayout &layout);
    Circuit(std::uint32_t width, std::optional<RegisterLayout> layout);

    std::uint32_t width() const { return width_; }
    const std::vector<Gate> &gates() const { return gates_; }
    const std::optional<RegisterLayout> &layout() const { return layout_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    Circuit &append(Gate gate);
    Circuit &append(GateKind kind, std::initializer_list<Qubit> qubits);
    /// Appends every gate of `other`; widths must match.
    Circuit &append(const Circuit &other);

    std::size_t count(GateKind kind) const;
    bool is_lowered() const;

    bool operator==(const Circuit &other) const = default;

   private:
    std::uint32_t width_;
    std::vector<Gate> gates_;
    std::optional<RegisterLayout> layout_;
};

/// Applies `a` then `b`. Throws std::invalid_argument on width mismatch.
Circuit compose(const Circuit &a, const Circuit &b);

/// Reverse order, each gate replaced by its inverse kind.
Circuit invert(const Circuit &c);

/// Rewrites every macro into primitives using the registered synthesis rules.
Circuit lower(const Circuit &c);

/// Relabels wire i of `c` as wire_map[i] in a circuit of `width` wires.
Circuit remap(const Circuit &c, std::span<const Qubit> wire_map, std::uint32_t width,
              std::optional<RegisterLayout> layout = std::nullopt);

}  // namespace qsm
