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

#include "qsm/builder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qsm/optimize.hpp"
#include "qsm/synthesis.hpp"

namespace qsm {

namespace {

GateKind fredkin_kind(GateVariant variant) {
    return variant == GateVariant::Standard ? GateKind::FREDKIN : GateKind::RP_FREDKIN;
}

std::uint32_t appended_ancillas(const QsmInstance &inst, const QsmOptions &options) {
    std::uint32_t count = 0;
    if (options.reflection_ancillas == ReflectionAncillas::AppendClean) {
        std::uint32_t r0 = inst.n >= 1 ? mcz_required_ancillas(inst.n - 1) : 0;
        count = std::max(r0, mcz_required_ancillas(inst.M - 1));
    }
    if (options.full_width_r0) {
        count = std::max(count, mcz_required_ancillas(inst.n + inst.N + inst.M - 1));
    }
    return count;
}

Qubit first_appended(const QsmInstance &inst, const QsmOptions &options, const RegisterLayout &layout) {
    std::uint32_t fan = (options.fanout && options.variant == GateVariant::Standard) ? fanout_ancillas(inst.N) : 0;
    return layout.ancilla_qubit(fan);
}

// X on `wires`, phase flip on |1...1> of `wires`, X again: reflection about
// |0...0>. The last wire is the MCZ target.
void append_zero_reflection(Circuit &c, const std::vector<Qubit> &wires, const std::vector<Qubit> &ancillas,
                            AncillaPolicy policy) {
    for (Qubit q : wires) {
        c.append(GateKind::X, {q});
    }
    if (wires.size() == 1) {
        c.append(GateKind::Z, {wires[0]});
    } else {
        std::vector<Qubit> controls(wires.begin(), wires.end() - 1);
        std::uint32_t need = mcz_required_ancillas(static_cast<std::uint32_t>(controls.size()));
        if (ancillas.size() < need) {
            throw std::invalid_argument("zero reflection: not enough ancilla wires");
        }
        std::vector<Qubit> used(ancillas.begin(), ancillas.begin() + need);
        c.append(make_mcz(std::move(controls), wires.back(), std::move(used), policy));
    }
    for (Qubit q : wires) {
        c.append(GateKind::X, {q});
    }
}

std::vector<Qubit> wire_range(Qubit first, std::uint32_t count) {
    std::vector<Qubit> v(count);
    std::iota(v.begin(), v.end(), first);
    return v;
}

}  // namespace

std::uint32_t fanout_ancillas(std::uint32_t N) {
    return N >= 2 ? N / 2 - 1 : 0;
}

RegisterLayout qsm_layout(const QsmInstance &instance, const QsmOptions &options) {
    std::uint32_t fan =
        (options.fanout && options.variant == GateVariant::Standard) ? fanout_ancillas(instance.N) : 0;
    return instance.layout(fan + appended_ancillas(instance, options));
}

Circuit build_c2k(const RegisterLayout &layout, std::uint32_t k, GateVariant variant) {
    layout.validate();
    if (k >= layout.n) {
        std::ostringstream msg;
        msg << "build_c2k: stage exponent k=" << k << " out of range for n=" << layout.n;
        throw std::invalid_argument(msg.str());
    }
    Circuit c(layout);
    const std::uint32_t stride = std::uint32_t{1} << k;
    const std::uint32_t len = layout.N / stride;
    const Qubit control = layout.index_bit_qubit(k);
    const GateKind kind = fredkin_kind(variant);
    // Each residue class mod 2^k is rotated left by one. Stage s swaps the last
    // element of the lower half of every 2^s block with the last element of the
    // block; stage 1 covers all N wires in disjoint pairs.
    for (std::uint32_t block = 2; block <= len; block *= 2) {
        for (std::uint32_t residue = 0; residue < stride; ++residue) {
            for (std::uint32_t start = 0; start < len; start += block) {
                std::uint32_t lo = residue + (start + block / 2 - 1) * stride;
                std::uint32_t hi = residue + (start + block - 1) * stride;
                c.append(kind, {control, layout.data_qubit(lo), layout.data_qubit(hi)});
            }
        }
    }
    return c;
}

Circuit build_c2k(std::uint32_t n, std::uint32_t k, GateVariant variant) {
    return build_c2k(RegisterLayout::make(n, 0), k, variant);
}

Circuit build_cyclic(const RegisterLayout &layout, GateVariant variant, bool fanout) {
    if (layout.n < 1) {
        throw std::invalid_argument("build_cyclic: n must be >= 1");
    }
    if (fanout && variant != GateVariant::Standard) {
        throw std::invalid_argument("build_cyclic: fan-out applies to the Standard variant only");
    }
    if (fanout && layout.ancilla < fanout_ancillas(layout.N)) {
        throw std::invalid_argument("build_cyclic: layout lacks N/2 - 1 fan-out ancillas");
    }
    Circuit c(layout);
    for (std::uint32_t k = 0; k < layout.n; ++k) {
        Circuit block = build_c2k(layout, k, variant);
        c.append(fanout ? fanout_parallelize(block, layout.ancilla_qubit(0)) : block);
    }
    return c;
}

Circuit build_cyclic(std::uint32_t n, GateVariant variant, bool fanout) {
    auto layout = RegisterLayout::make(n, 0);
    if (fanout) {
        layout.ancilla = fanout_ancillas(layout.N);
    }
    return build_cyclic(layout, variant, fanout);
}

Circuit build_encoding(const QsmInstance &instance, const RegisterLayout &layout) {
    Circuit c(layout);
    for (std::uint32_t j = 0; j < instance.N; ++j) {
        if (instance.data[j] == '1') {
            c.append(GateKind::X, {layout.data_qubit(j)});
        }
    }
    for (std::uint32_t j = 0; j < instance.M; ++j) {
        if (instance.pattern[j] == '1') {
            c.append(GateKind::X, {layout.pattern_qubit(j)});
        }
    }
    return c;
}

Circuit build_xor(const RegisterLayout &layout) {
    Circuit c(layout);
    for (std::uint32_t j = 0; j < layout.M; ++j) {
        c.append(GateKind::CNOT, {layout.data_qubit(j), layout.pattern_qubit(j)});
    }
    return c;
}

Circuit build_init_A(const QsmInstance &instance, const QsmOptions &options) {
    const RegisterLayout layout = qsm_layout(instance, options);
    const bool fan = options.fanout && options.variant == GateVariant::Standard;
    Circuit c = build_encoding(instance, layout);
    for (std::uint32_t i = 0; i < layout.n; ++i) {
        c.append(GateKind::H, {layout.index_qubit(i)});
    }
    c.append(build_cyclic(layout, options.variant, fan));
    c.append(build_xor(layout));
    return c;
}

Circuit build_init_A(const QsmInstance &instance, GateVariant variant) {
    QsmOptions options;
    options.variant = variant;
    return build_init_A(instance, options);
}

Circuit build_r0(std::uint32_t n) {
    if (n < 1) {
        throw std::invalid_argument("build_r0: n must be >= 1");
    }
    const std::uint32_t anc = mcz_required_ancillas(n - 1);
    Circuit c(n + anc);
    append_zero_reflection(c, wire_range(0, n), wire_range(n, anc), AncillaPolicy::Clean);
    return c;
}

Circuit build_r0(const QsmInstance &instance, const QsmOptions &options) {
    const RegisterLayout layout = qsm_layout(instance, options);
    Circuit c(layout);
    if (options.full_width_r0) {
        const std::uint32_t wires = layout.n + layout.N + layout.M;
        const std::uint32_t anc = mcz_required_ancillas(wires - 1);
        append_zero_reflection(c, wire_range(0, wires), wire_range(first_appended(instance, options, layout), anc),
                               AncillaPolicy::Clean);
        return c;
    }
    const std::uint32_t anc = layout.n >= 1 ? mcz_required_ancillas(layout.n - 1) : 0;
    std::vector<Qubit> ancillas;
    if (options.reflection_ancillas == ReflectionAncillas::AppendClean) {
        ancillas = wire_range(first_appended(instance, options, layout), anc);
    } else {
        // Pattern wires first: data wires next to R0 carry cyclic-operator
        // gates that would otherwise stop cancelling across the boundary.
        for (std::uint32_t j = 0; j < anc; ++j) {
            ancillas.push_back(j < layout.M ? layout.pattern_qubit(j) : layout.data_qubit(j - layout.M));
        }
    }
    append_zero_reflection(c, wire_range(layout.index_qubit(0), layout.n), ancillas, AncillaPolicy::Clean);
    return c;
}

Circuit build_rg(const RegisterLayout &layout, ReflectionAncillas ancillas) {
    layout.validate();
    if (layout.M < 1) {
        throw std::invalid_argument("build_rg: pattern register is empty");
    }
    const std::uint32_t anc = mcz_required_ancillas(layout.M - 1);
    Circuit c(layout);
    if (ancillas == ReflectionAncillas::AppendClean) {
        if (layout.ancilla < anc) {
            throw std::invalid_argument("build_rg: layout lacks appended ancillas");
        }
        append_zero_reflection(c, wire_range(layout.pattern_qubit(0), layout.M),
                               wire_range(layout.ancilla_qubit(layout.ancilla - anc), anc), AncillaPolicy::Clean);
    } else {
        append_zero_reflection(c, wire_range(layout.pattern_qubit(0), layout.M), wire_range(layout.data_qubit(0), anc),
                               AncillaPolicy::Borrowed);
    }
    return c;
}

Circuit build_rg(const QsmInstance &instance, const QsmOptions &options) {
    const RegisterLayout layout = qsm_layout(instance, options);
    if (options.reflection_ancillas == ReflectionAncillas::AppendClean) {
        const std::uint32_t anc = mcz_required_ancillas(layout.M - 1);
        Circuit c(layout);
        append_zero_reflection(c, wire_range(layout.pattern_qubit(0), layout.M),
                               wire_range(first_appended(instance, options, layout), anc), AncillaPolicy::Clean);
        return c;
    }
    return build_rg(layout, ReflectionAncillas::BorrowRegisters);
}

Circuit build_reflect_psi(const QsmInstance &instance, const QsmOptions &options) {
    const Circuit a = build_init_A(instance, options);
    Circuit head = invert(a);
    head.append(build_r0(instance, options));
    if (!options.optimize) {
        head.append(a);
        return head;
    }
    head = lower(head);
    const std::size_t boundary = head.size();
    head.append(lower(a));
    return cancel_inverse_pairs_across(head, boundary);
}

Circuit build_grover_op(const QsmInstance &instance, const QsmOptions &options) {
    Circuit q = build_rg(instance, options);
    if (options.optimize) {
        q = lower(q);
    }
    q.append(build_reflect_psi(instance, options));
    return q;
}

Circuit build_qsm(const QsmInstance &instance, std::uint64_t iterations, const QsmOptions &options) {
    Circuit a = build_init_A(instance, options);
    Circuit c = options.optimize ? lower(a) : a;
    if (iterations == 0) {
        return c;
    }
    const Circuit q = build_grover_op(instance, options);
    for (std::uint64_t r = 0; r < iterations; ++r) {
        c.append(q);
    }
    return c;
}

Circuit fanout_parallelize(const Circuit &block, std::optional<Qubit> first_ancilla) {
    const auto &layout_opt = block.layout();
    if (!layout_opt || block.empty()) {
        throw std::invalid_argument("fanout_parallelize: expected a C_{2^k} block with a register layout");
    }
    const RegisterLayout in_layout = *layout_opt;
    const Qubit control = block.gates().front().qubits.at(0);
    const bool control_is_index = control < in_layout.n;
    for (const Gate &g : block.gates()) {
        if (g.kind != GateKind::FREDKIN || g.qubits[0] != control || !control_is_index) {
            throw std::invalid_argument(
                "fanout_parallelize: input is not a Standard C_{2^k} block (Fredkins sharing one index control)");
        }
    }
    const std::uint32_t copies = fanout_ancillas(in_layout.N);

    RegisterLayout out_layout = in_layout;
    Qubit base = 0;
    if (first_ancilla) {
        base = *first_ancilla;
        if (base < in_layout.ancilla_qubit(0) || base + copies > in_layout.width()) {
            throw std::invalid_argument("fanout_parallelize: ancilla range outside the layout");
        }
    } else {
        base = in_layout.width();
        out_layout.ancilla += copies;
    }
    Circuit out(out_layout);
    for (std::uint32_t i = 0; i < copies; ++i) {
        out.append(GateKind::CNOT, {control, base + i});
    }
    // Consecutive Fredkins with disjoint swap wires form one stage; the i-th
    // member of a stage reads copy i (copy 0 is the control itself).
    std::vector<Qubit> stage_wires;
    std::uint32_t slot = 0;
    for (const Gate &g : block.gates()) {
        const Qubit a = g.qubits[1];
        const Qubit b = g.qubits[2];
        bool clash = std::find(stage_wires.begin(), stage_wires.end(), a) != stage_wires.end() ||
                     std::find(stage_wires.begin(), stage_wires.end(), b) != stage_wires.end();
        if (clash) {
            stage_wires.clear();
            slot = 0;
        }
        stage_wires.push_back(a);
        stage_wires.push_back(b);
        if (slot > copies) {
            throw std::invalid_argument("fanout_parallelize: stage wider than N/2");
        }
        Qubit ctrl = slot == 0 ? control : base + slot - 1;
        out.append(GateKind::FREDKIN, {ctrl, a, b});
        ++slot;
    }
    for (std::uint32_t i = copies; i-- > 0;) {
        out.append(GateKind::CNOT, {control, base + i});
    }
    return out;
}

}  // namespace qsm
