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

#include "qsm/simulator.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qsm {

namespace {

using cd = std::complex<double>;

// Spreads `i` over the positions not covered by `mask` (one bit).
inline std::uint64_t insert_zero(std::uint64_t i, std::uint64_t mask) {
    std::uint64_t low = i & (mask - 1);
    return ((i - low) << 1) | low;
}

// Same, for two distinct single-bit masks.
inline std::uint64_t insert_two_zeros(std::uint64_t i, std::uint64_t m1, std::uint64_t m2) {
    if (m1 > m2) {
        std::swap(m1, m2);
    }
    return insert_zero(insert_zero(i, m1), m2);
}

void check_width(std::uint32_t width, std::uint32_t cap, const char *what) {
    if (width > cap) {
        std::ostringstream msg;
        msg << what << ": width " << width << " exceeds cap " << cap;
        throw std::invalid_argument(msg.str());
    }
}

void apply_phase(Statevector &sv, std::uint64_t m, cd phase) {
    const std::uint64_t half = sv.amps.size() >> 1;
    for (std::uint64_t i = 0; i < half; ++i) {
        sv.amps[insert_zero(i, m) | m] *= phase;
    }
}

}  // namespace

Statevector Statevector::basis(std::uint32_t width, std::uint64_t index) {
    check_width(width, kMaxSimulatorWidth, "Statevector");
    Statevector sv;
    sv.width = width;
    sv.amps.assign(std::uint64_t{1} << width, cd{});
    if (index >= sv.amps.size()) {
        throw std::invalid_argument("Statevector: basis index out of range");
    }
    sv.amps[index] = 1.0;
    return sv;
}

double Statevector::norm_squared() const {
    double total = 0.0;
    for (const cd &a : amps) {
        total += std::norm(a);
    }
    return total;
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        p[i] = std::norm(amps[i]);
    }
    return p;
}

void apply_gate(Statevector &sv, const Gate &gate) {
    const std::uint32_t w = sv.width;
    const std::uint64_t m0 = wire_mask(w, gate.qubits[0]);
    const std::uint64_t half = sv.amps.size() >> 1;
    const std::uint64_t quarter = sv.amps.size() >> 2;
    auto &a = sv.amps;
    static const cd kT = std::polar(1.0, std::numbers::pi / 4);

    switch (gate.kind) {
        case GateKind::X:
            for (std::uint64_t i = 0; i < half; ++i) {
                std::uint64_t j = insert_zero(i, m0);
                std::swap(a[j], a[j | m0]);
            }
            return;
        case GateKind::Z:
            apply_phase(sv, m0, -1.0);
            return;
        case GateKind::S:
            apply_phase(sv, m0, cd{0.0, 1.0});
            return;
        case GateKind::S_DG:
            apply_phase(sv, m0, cd{0.0, -1.0});
            return;
        case GateKind::T:
            apply_phase(sv, m0, kT);
            return;
        case GateKind::T_DG:
            apply_phase(sv, m0, std::conj(kT));
            return;
        case GateKind::H: {
            const double r = std::numbers::sqrt2 / 2;
            for (std::uint64_t i = 0; i < half; ++i) {
                std::uint64_t j = insert_zero(i, m0);
                cd lo = a[j];
                cd hi = a[j | m0];
                a[j] = r * (lo + hi);
                a[j | m0] = r * (lo - hi);
            }
            return;
        }
        case GateKind::CNOT: {
            const std::uint64_t m1 = wire_mask(w, gate.qubits[1]);
            for (std::uint64_t i = 0; i < quarter; ++i) {
                std::uint64_t j = insert_two_zeros(i, m0, m1) | m0;
                std::swap(a[j], a[j | m1]);
            }
            return;
        }
        case GateKind::CZ: {
            const std::uint64_t m1 = wire_mask(w, gate.qubits[1]);
            for (std::uint64_t i = 0; i < quarter; ++i) {
                a[insert_two_zeros(i, m0, m1) | m0 | m1] *= -1.0;
            }
            return;
        }
        default:
            throw std::invalid_argument("apply_gate: macro " + std::string(gate_name(gate.kind)) +
                                        " must be lowered first");
    }
}

void apply(Statevector &sv, const Circuit &c) {
    if (c.width() != sv.width) {
        throw std::invalid_argument("apply: circuit and state widths differ");
    }
    if (c.is_lowered()) {
        for (const Gate &g : c.gates()) {
            apply_gate(sv, g);
        }
        return;
    }
    const Circuit lowered = lower(c);
    for (const Gate &g : lowered.gates()) {
        apply_gate(sv, g);
    }
}

Statevector run(const Circuit &c, std::uint64_t input) {
    check_width(c.width(), kMaxSimulatorWidth, "run");
    Statevector sv = Statevector::basis(c.width(), input);
    apply(sv, c);
    return sv;
}

Eigen::MatrixXcd unitary_of(const Circuit &c) {
    check_width(c.width(), kMaxUnitaryWidth, "unitary_of");
    const Circuit lowered = lower(c);
    const std::uint64_t dim = std::uint64_t{1} << c.width();
    Eigen::MatrixXcd u(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        Statevector sv = Statevector::basis(c.width(), col);
        apply(sv, lowered);
        for (std::uint64_t row = 0; row < dim; ++row) {
            u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = sv.amps[row];
        }
    }
    return u;
}

double success_probability(const Statevector &sv, const RegisterLayout &layout) {
    std::uint64_t pattern_mask = 0;
    for (std::uint32_t j = 0; j < layout.M; ++j) {
        pattern_mask |= wire_mask(sv.width, layout.pattern_qubit(j));
    }
    double total = 0.0;
    for (std::uint64_t i = 0; i < sv.amps.size(); ++i) {
        if ((i & pattern_mask) == 0) {
            total += std::norm(sv.amps[i]);
        }
    }
    return total;
}

double grover_theoretical(std::uint64_t matches, std::uint64_t N, std::uint64_t iterations) {
    if (N == 0 || matches > N) {
        throw std::invalid_argument("grover_theoretical: need 0 <= m <= N, N > 0");
    }
    const double theta = std::asin(std::sqrt(static_cast<double>(matches) / static_cast<double>(N)));
    const double s = std::sin(static_cast<double>(2 * iterations + 1) * theta);
    return s * s;
}

double Histogram::total(const std::vector<std::uint64_t> &outcomes) const {
    double sum = 0.0;
    for (std::uint64_t o : outcomes) {
        if (auto it = frequency.find(o); it != frequency.end()) {
            sum += it->second;
        }
    }
    return sum;
}

Histogram sample(const Statevector &sv, std::uint64_t shots, std::uint64_t seed) {
    Histogram hist;
    hist.shots = shots;
    const std::vector<double> probs = sv.probabilities();
    if (shots == 0) {
        for (std::uint64_t i = 0; i < probs.size(); ++i) {
            if (probs[i] > 0.0) {
                hist.frequency[i] = probs[i];
            }
        }
        return hist;
    }
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::uint64_t> dist(probs.begin(), probs.end());
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++counts[dist(rng)];
    }
    for (const auto &[outcome, count] : counts) {
        hist.frequency[outcome] = static_cast<double>(count) / static_cast<double>(shots);
    }
    return hist;
}

double success_frequency(const Histogram &hist, const RegisterLayout &layout) {
    const std::uint32_t width = layout.width();
    std::uint64_t pattern_mask = 0;
    for (std::uint32_t j = 0; j < layout.M; ++j) {
        pattern_mask |= wire_mask(width, layout.pattern_qubit(j));
    }
    double total = 0.0;
    for (const auto &[outcome, f] : hist.frequency) {
        if ((outcome & pattern_mask) == 0) {
            total += f;
        }
    }
    return total;
}

SupportCheck register_support_check(const Statevector &sv, const RegisterLayout &layout,
                                    const std::vector<Register> &registers, double tolerance) {
    std::uint64_t mask = 0;
    auto add = [&](Qubit first, std::uint32_t count) {
        for (std::uint32_t j = 0; j < count; ++j) {
            mask |= wire_mask(sv.width, first + j);
        }
    };
    for (Register r : registers) {
        switch (r) {
            case Register::Index: add(layout.index_qubit(0), layout.n); break;
            case Register::Data: add(layout.data_qubit(0), layout.N); break;
            case Register::Pattern: add(layout.pattern_qubit(0), layout.M); break;
            case Register::Ancilla: add(layout.ancilla_qubit(0), layout.ancilla); break;
        }
    }
    SupportCheck check;
    for (std::uint64_t i = 0; i < sv.amps.size(); ++i) {
        if (i & mask) {
            check.leaked += std::norm(sv.amps[i]);
        }
    }
    check.pass = check.leaked < tolerance;
    return check;
}

}  // namespace qsm
