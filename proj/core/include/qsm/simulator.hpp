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

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "qsm/circuit.hpp"

namespace qsm {

/// Widest circuit the dense simulator accepts.
inline constexpr std::uint32_t kMaxSimulatorWidth = 26;
/// Widest circuit unitary_of accepts.
inline constexpr std::uint32_t kMaxUnitaryWidth = 12;

/// Dense amplitudes over 2^width basis states. Basis index bit (width-1-q)
/// holds wire q, so wire 0 is the most significant bit.
struct Statevector {
    std::uint32_t width = 0;
    std::vector<std::complex<double>> amps;

    static Statevector basis(std::uint32_t width, std::uint64_t index = 0);

    double norm_squared() const;
    double probability(std::uint64_t index) const { return std::norm(amps[index]); }
    std::vector<double> probabilities() const;
};

/// Bit position of wire `q` inside a basis index.
inline std::uint64_t wire_mask(std::uint32_t width, Qubit q) {
    return std::uint64_t{1} << (width - 1 - q);
}

/// Applies one primitive gate in place. Macros are rejected; use apply().
void apply_gate(Statevector &sv, const Gate &gate);
/// Applies every gate of `c`, lowering macros first.
void apply(Statevector &sv, const Circuit &c);

/// Runs `c` on the computational basis state `input`.
Statevector run(const Circuit &c, std::uint64_t input = 0);

/// Column j is run(c, j). Throws std::invalid_argument above kMaxUnitaryWidth.
Eigen::MatrixXcd unitary_of(const Circuit &c);

/// Probability mass on basis states whose pattern register is all zero.
double success_probability(const Statevector &sv, const RegisterLayout &layout);

/// sin^2((2r + 1) asin(sqrt(m / N))).
double grover_theoretical(std::uint64_t matches, std::uint64_t N, std::uint64_t iterations);

/// Outcome frequencies keyed by basis index. With shots == 0 the values are
/// the exact probabilities of every non-zero outcome.
struct Histogram {
    std::uint64_t shots = 0;
    std::map<std::uint64_t, double> frequency;

    double total(const std::vector<std::uint64_t> &outcomes) const;
};

/// Multinomial sample of |amps|^2 with a deterministic seed.
Histogram sample(const Statevector &sv, std::uint64_t shots, std::uint64_t seed);

/// Success frequency of a histogram (pattern register all zero).
double success_frequency(const Histogram &hist, const RegisterLayout &layout);

enum class Register : std::uint8_t { Index, Data, Pattern, Ancilla };

struct SupportCheck {
    bool pass = true;
    double leaked = 0.0;
};

/// Mass on basis states where any of `registers` holds a non-zero value.
SupportCheck register_support_check(const Statevector &sv, const RegisterLayout &layout,
                                    const std::vector<Register> &registers, double tolerance);

}  // namespace qsm
