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

#include "qsm/circuit.hpp"
#include "qsm/instance.hpp"

namespace qsm {

/// Where the multi-controlled-Z ladders in R0 and Rg find their ancillas.
enum class ReflectionAncillas : std::uint8_t {
    /// R0 uses pattern wires, then data wires, as clean ancillas (both
    /// registers are |0...0> whenever R0 runs); Rg borrows data wires dirty.
    BorrowRegisters,
    /// Extra clean wires appended after the pattern register.
    AppendClean,
};

struct QsmOptions {
    GateVariant variant = GateVariant::RelativePhase;
    /// Cancel inverse pairs across every A R0 A^-1 junction (output is lowered).
    bool optimize = false;
    /// Standard variant only: run each cyclic block through fanout_parallelize.
    bool fanout = false;
    ReflectionAncillas reflection_ancillas = ReflectionAncillas::BorrowRegisters;
    /// Replace R0 by a reflection about |0> on every index, data and pattern
    /// wire. Used to check that the index-only R0 is sufficient.
    bool full_width_r0 = false;
};

/// Layout with the ancilla wires `options` requires: fan-out copies first,
/// then appended reflection ancillas.
RegisterLayout qsm_layout(const QsmInstance &instance, const QsmOptions &options);
std::uint32_t fanout_ancillas(std::uint32_t N);

/// Controlled rotation of the data register left by 2^k, controlled on the
/// index wire holding bit k. Contains 2^n - 2^k Fredkin macros, emitted stage by
/// stage (N/2 swaps, then N/4, ...). Acts on the index and data registers of
/// `layout`.
Circuit build_c2k(const RegisterLayout &layout, std::uint32_t k, GateVariant variant);
Circuit build_c2k(std::uint32_t n, std::uint32_t k, GateVariant variant);

/// C_{2^0} then C_{2^1} ... then C_{2^{n-1}}: rotates the data register left by
/// the index value. N log2 N - N + 1 Fredkin macros.
Circuit build_cyclic(const RegisterLayout &layout, GateVariant variant, bool fanout = false);
Circuit build_cyclic(std::uint32_t n, GateVariant variant, bool fanout = false);

/// X gates writing data and pattern into their registers.
Circuit build_encoding(const QsmInstance &instance, const RegisterLayout &layout);
/// M CNOTs, data wire j controlling pattern wire j.
Circuit build_xor(const RegisterLayout &layout);

/// Encoding, H on the index register, cyclic operator, XOR.
Circuit build_init_A(const QsmInstance &instance, const QsmOptions &options);
Circuit build_init_A(const QsmInstance &instance, GateVariant variant);

/// Reflection about |0> on an n-wire register: phase -1 on |0...0> only.
/// Standalone form; n >= 4 appends n - 3 clean ancillas.
Circuit build_r0(std::uint32_t n);
/// R0 on the index register of the instance layout.
Circuit build_r0(const QsmInstance &instance, const QsmOptions &options);

/// Phase -1 on every basis state whose pattern register is all zero.
Circuit build_rg(const RegisterLayout &layout,
                 ReflectionAncillas ancillas = ReflectionAncillas::BorrowRegisters);
Circuit build_rg(const QsmInstance &instance, const QsmOptions &options);

/// A^-1 R0 A. With options.optimize the result is lowered and inverse pairs
/// meeting across the R0 / A boundary are removed.
Circuit build_reflect_psi(const QsmInstance &instance, const QsmOptions &options);

/// One amplitude-amplification step in execution order: Rg, A^-1, R0, A. The
/// overall -1 is dropped.
Circuit build_grover_op(const QsmInstance &instance, const QsmOptions &options);

/// A followed by `iterations` Grover steps.
Circuit build_qsm(const QsmInstance &instance, std::uint64_t iterations, const QsmOptions &options);

/// Spreads a Standard C_{2^k} block over N/2 - 1 fan-out copies of its control
/// so that Fredkins of one stage touch disjoint wires. Copies live at
/// `first_ancilla` onwards; when omitted they are appended to the circuit.
/// Throws std::invalid_argument if `block` is not a Standard C_{2^k} block.
Circuit fanout_parallelize(const Circuit &block, std::optional<Qubit> first_ancilla = std::nullopt);

}  // namespace qsm
