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

#include "qsm/synthesis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qsm/simulator.hpp"

namespace qsm {

namespace {

using K = GateKind;

Gate g1(K kind, Qubit q) {
    return Gate{kind, {q}};
}
Gate g2(K kind, Qubit a, Qubit b) {
    return Gate{kind, {a, b}};
}
Gate g3(K kind, Qubit a, Qubit b, Qubit c) {
    return Gate{kind, {a, b, c}};
}

std::vector<Gate> inverted(std::vector<Gate> seq) {
    std::vector<Gate> out;
    out.reserve(seq.size());
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
        out.push_back(it->inverse());
    }
    return out;
}

// Target-line T chain with the two controls alternating, then the control-pair
// phase. T-depth 5 once the Fredkin CNOTs are added around it.
std::vector<Gate> toffoli_rule(Qubit a, Qubit b, Qubit c) {
    return {
        g1(K::H, c),       g2(K::CNOT, a, c), g1(K::T_DG, c),    g2(K::CNOT, b, c), g1(K::T, c),
        g2(K::CNOT, a, c), g1(K::T_DG, c),    g2(K::CNOT, b, c), g1(K::T, c),       g1(K::H, c),
        g1(K::T, a),       g1(K::T, b),       g2(K::CNOT, a, b), g1(K::T_DG, b),    g2(K::CNOT, a, b),
    };
}

// Control `a` is touched only by the middle CNOT; the two leading T gates see
// `b` and `c` alone.
std::vector<Gate> rp_toffoli_rule(Qubit a, Qubit b, Qubit c) {
    return {
        g1(K::H, c), g1(K::T, c),       g2(K::CNOT, b, c), g1(K::T_DG, c), g2(K::CNOT, a, c),
        g1(K::T, c), g2(K::CNOT, b, c), g1(K::T_DG, c),    g1(K::H, c),
    };
}

std::vector<Gate> mcz_rule(const Gate &gate) {
    const std::uint32_t k = gate.controls;
    const std::vector<Qubit> &q = gate.qubits;
    const Qubit target = q[k];
    auto control = [&](std::uint32_t i) { return q[i - 1]; };        // 1-based
    auto ancilla = [&](std::uint32_t j) { return q[k + j]; };        // 1-based

    if (k == 1) {
        return {g2(K::CZ, control(1), target)};
    }
    if (k == 2) {
        return {g1(K::H, target), g3(K::TOFFOLI, control(1), control(2), target), g1(K::H, target)};
    }
    if (gate.ancilla_count() < mcz_required_ancillas(k)) {
        std::ostringstream msg;
        msg << "MCZ with " << k << " controls needs " << mcz_required_ancillas(k) << " ancillas, got "
            << gate.ancilla_count();
        throw std::invalid_argument(msg.str());
    }

    // AND ladder: ancilla j ends holding c1 & ... & c_{j+1}.
    std::vector<Gate> ladder;
    ladder.push_back(g3(K::RP_TOFFOLI, control(1), control(2), ancilla(1)));
    for (std::uint32_t i = 3; i <= k - 1; ++i) {
        ladder.push_back(g3(K::RP_TOFFOLI, control(i), ancilla(i - 2), ancilla(i - 1)));
    }
    const Gate last = g3(K::TOFFOLI, control(k), ancilla(k - 2), target);

    std::vector<Gate> out;
    out.push_back(g1(K::H, target));
    if (gate.policy == AncillaPolicy::Clean) {
        out.insert(out.end(), ladder.begin(), ladder.end());
        out.push_back(last);
        auto undo = inverted(ladder);
        out.insert(out.end(), undo.begin(), undo.end());
    } else {
        // Dirty-ancilla form: last, D, last, D^-1 with D = L B L^-1, where B
        // computes into ancilla 1 and L walks the ladder top-down. The phases
        // of D depend only on control/ancilla wires and so commute with `last`.
        std::vector<Gate> down(ladder.rbegin(), ladder.rend() - 1);
        std::vector<Gate> d = down;
        d.push_back(ladder.front());
        auto up = inverted(down);
        d.insert(d.end(), up.begin(), up.end());
        auto d_inv = inverted(d);
        out.push_back(last);
        out.insert(out.end(), d.begin(), d.end());
        out.push_back(last);
        out.insert(out.end(), d_inv.begin(), d_inv.end());
    }
    out.push_back(g1(K::H, target));
    return out;
}

Circuit three_wire(const std::vector<Gate> &seq) {
    Circuit c(3);
    for (const Gate &g : seq) {
        c.append(g);
    }
    return c;
}

Matrix8 to_matrix8(const Circuit &c) {
    if (c.width() != 3) {
        throw std::invalid_argument("expected a 3-wire circuit");
    }
    return unitary_of(c);
}

bool matches_pattern(const Matrix8 &u, const Matrix8 &pattern, double tol) {
    for (int r = 0; r < 8; ++r) {
        for (int col = 0; col < 8; ++col) {
            double mag = std::abs(u(r, col));
            if (pattern(r, col) != Complex{}) {
                if (std::abs(mag - 1.0) > tol) {
                    return false;
                }
            } else if (mag > tol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::uint32_t mcz_required_ancillas(std::uint32_t controls) {
    return controls <= 2 ? 0 : controls - 2;
}

std::vector<Gate> lowering_rule(const Gate &gate) {
    const auto &q = gate.qubits;
    switch (gate.kind) {
        case K::SWAP:
            return {g2(K::CNOT, q[0], q[1]), g2(K::CNOT, q[1], q[0]), g2(K::CNOT, q[0], q[1])};
        case K::TOFFOLI:
            return toffoli_rule(q[0], q[1], q[2]);
        case K::FREDKIN:
            return {g2(K::CNOT, q[2], q[1]), g3(K::TOFFOLI, q[0], q[1], q[2]), g2(K::CNOT, q[2], q[1])};
        case K::RP_TOFFOLI:
            return rp_toffoli_rule(q[0], q[1], q[2]);
        case K::RP_TOFFOLI_DG:
            return inverted(rp_toffoli_rule(q[0], q[1], q[2]));
        case K::RP_FREDKIN:
            return {g2(K::CNOT, q[2], q[1]), g3(K::RP_TOFFOLI, q[0], q[1], q[2]), g2(K::CNOT, q[2], q[1])};
        case K::RP_FREDKIN_DG:
            return {g2(K::CNOT, q[2], q[1]), g3(K::RP_TOFFOLI_DG, q[0], q[1], q[2]), g2(K::CNOT, q[2], q[1])};
        case K::MCZ:
            return mcz_rule(gate);
        default:
            throw std::invalid_argument("no lowering rule for " + std::string(gate_name(gate.kind)));
    }
}

Circuit toffoli_7t() {
    return three_wire(toffoli_rule(0, 1, 2));
}

Circuit rp_toffoli_4t() {
    return three_wire(rp_toffoli_rule(0, 1, 2));
}

Circuit fredkin_7t() {
    Circuit c(3);
    c.append(K::FREDKIN, {0, 1, 2});
    return lower(c);
}

Circuit rp_fredkin_4t() {
    Circuit c(3);
    c.append(K::RP_FREDKIN, {0, 1, 2});
    return lower(c);
}

Circuit rp_fredkin_from_rp_toffoli(const Circuit &rtof) {
    if (rtof.width() != 3 || !has_rp_toffoli_shape(to_matrix8(rtof))) {
        throw std::invalid_argument("rp_fredkin_from_rp_toffoli: input is not a relative-phase Toffoli");
    }
    Circuit c(3);
    c.append(K::CNOT, {2, 1});
    c.append(rtof);
    c.append(K::CNOT, {2, 1});
    return c;
}

PhaseProfile PhaseProfile::ones() {
    PhaseProfile p;
    p.z.fill(Complex{1.0, 0.0});
    return p;
}

bool PhaseProfile::is_unit_modulus(double tol) const {
    for (const Complex &v : z) {
        if (std::abs(std::abs(v) - 1.0) > tol) {
            return false;
        }
    }
    return true;
}

Matrix8 fredkin_matrix() {
    Matrix8 m = Matrix8::Identity();
    m(5, 5) = m(6, 6) = 0.0;
    m(5, 6) = m(6, 5) = 1.0;
    return m;
}

Matrix8 toffoli_matrix() {
    Matrix8 m = Matrix8::Identity();
    m(6, 6) = m(7, 7) = 0.0;
    m(6, 7) = m(7, 6) = 1.0;
    return m;
}

Matrix8 relative_phase_fredkin_matrix(const PhaseProfile &profile) {
    Matrix8 m = Matrix8::Zero();
    for (int i : {0, 1, 2, 3, 4, 7}) {
        m(i, i) = profile.z[i];
    }
    m(5, 6) = profile.z[6];
    m(6, 5) = profile.z[5];
    return m;
}

bool has_rp_fredkin_shape(const Matrix8 &u, double tol) {
    return matches_pattern(u, fredkin_matrix(), tol);
}

bool has_rp_toffoli_shape(const Matrix8 &u, double tol) {
    return matches_pattern(u, toffoli_matrix(), tol);
}

PhaseProfile phase_profile(const Matrix8 &u) {
    Matrix8 d = fredkin_matrix().adjoint() * u;
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            if (r != c && std::abs(d(r, c)) >= 1e-10) {
                std::ostringstream msg;
                msg << "phase_profile: residue " << std::abs(d(r, c)) << " at (" << r << "," << c
                    << "); not a relative-phase Fredkin";
                throw std::invalid_argument(msg.str());
            }
        }
    }
    PhaseProfile p;
    for (int i = 0; i < 8; ++i) {
        p.z[i] = d(i, i);
    }
    return p;
}

PhaseProfile phase_profile(const Circuit &rfred) {
    return phase_profile(to_matrix8(rfred));
}

Circuit mcz(std::uint32_t controls, AncillaPolicy policy) {
    if (controls < 1) {
        throw std::invalid_argument("mcz: k must be >= 1");
    }
    const std::uint32_t anc = mcz_required_ancillas(controls);
    Circuit c(controls + 1 + anc);
    std::vector<Qubit> ctrl(controls);
    for (std::uint32_t i = 0; i < controls; ++i) {
        ctrl[i] = i;
    }
    std::vector<Qubit> ancillas(anc);
    for (std::uint32_t j = 0; j < anc; ++j) {
        ancillas[j] = controls + 1 + j;
    }
    c.append(make_mcz(std::move(ctrl), controls, std::move(ancillas), policy));
    return c;
}

}  // namespace qsm
