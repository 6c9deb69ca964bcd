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

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qsm/circuit.hpp"

namespace qsm {

using Complex = std::complex<double>;
using Matrix8 = Eigen::Matrix<Complex, 8, 8>;

/// Primitive (or lower-level macro) expansion of one macro gate.
/// Throws std::invalid_argument for primitives and for MCZ gates that were not
/// given enough ancilla wires.
std::vector<Gate> lowering_rule(const Gate &gate);

/// Ancilla wires MCZ with k controls needs: 0 for k <= 2, else k - 2.
std::uint32_t mcz_required_ancillas(std::uint32_t controls);

// 3-wire Clifford+T sequences. Wires are [control, swap_a, swap_b] for the
// Fredkin family and [control_a, control_b, target] for the Toffoli family.

/// Toffoli with 7 T gates, 6 CNOTs.
Circuit toffoli_7t();
/// Relative-phase Toffoli with 4 T gates, 3 CNOTs.
Circuit rp_toffoli_4t();
/// Exact Fredkin: 7 T, T-depth 5, 8 CNOTs.
Circuit fredkin_7t();
/// Relative-phase Fredkin: 4 T, T-depth 4, 5 CNOTs. Unitary is
/// diag(1,1,1,1,1,[[0,i],[-i,0]],-1).
Circuit rp_fredkin_4t();

/// Wraps a relative-phase Toffoli (target on wire 2) in CNOT(2->1) on each side,
/// which turns it into a relative-phase Fredkin swapping wires 1 and 2.
/// Throws std::invalid_argument if `rtof` is not a 3-wire relative-phase Toffoli.
Circuit rp_fredkin_from_rp_toffoli(const Circuit &rtof);

/// Eight unit-modulus phases z0..z7 of a relative-phase Fredkin written as
/// diag(z0, z1, z2, z3, z4, [[0, z6], [z5, 0]], z7).
struct PhaseProfile {
    std::array<Complex, 8> z{};

    static PhaseProfile ones();
    bool is_unit_modulus(double tol = 1e-12) const;
};

Matrix8 fredkin_matrix();
Matrix8 toffoli_matrix();
/// diag(z0, z1, z2, z3, z4, [[0, z6], [z5, 0]], z7).
Matrix8 relative_phase_fredkin_matrix(const PhaseProfile &profile);

/// True when `u` has non-zero entries exactly on the Fredkin (resp. Toffoli)
/// permutation pattern, each of unit modulus.
bool has_rp_fredkin_shape(const Matrix8 &u, double tol = 1e-10);
bool has_rp_toffoli_shape(const Matrix8 &u, double tol = 1e-10);

/// Diagonal D with U = Fredkin * D. Throws std::invalid_argument if
/// Fredkin^dagger * U has an off-diagonal entry of magnitude >= 1e-10.
PhaseProfile phase_profile(const Matrix8 &u);
PhaseProfile phase_profile(const Circuit &rfred);

/// Standalone phase flip on |1...1> of k controls + target. Wires: controls
/// 0..k-1, target k, then mcz_required_ancillas(k) ancillas.
Circuit mcz(std::uint32_t controls, AncillaPolicy policy = AncillaPolicy::Clean);

}  // namespace qsm
