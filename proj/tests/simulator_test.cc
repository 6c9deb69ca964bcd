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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "qsm/builder.hpp"
#include "qsm/instance.hpp"
#include "qsm/simulator.hpp"

using namespace qsm;

TEST(simulator, hadamard_on_zero) {
    Circuit c(1);
    c.append(GateKind::H, {0});
    Statevector sv = run(c);
    EXPECT_NEAR(sv.amps[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(sv.amps[1].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(simulator, wire_zero_is_most_significant) {
    Circuit c(3);
    c.append(GateKind::X, {0});
    EXPECT_NEAR(std::abs(run(c).amps[4]), 1.0, 1e-15);
}

TEST(simulator, unitary_of_small_cases) {
    EXPECT_LT(oracle::max_abs_diff(unitary_of(Circuit(1)), oracle::Mat::Identity(2, 2)), 1e-15);
    Circuit cz(2);
    cz.append(GateKind::CZ, {0, 1});
    EXPECT_LT(oracle::max_abs_diff(unitary_of(cz), oracle::Mat(Eigen::Vector4cd(1, 1, 1, -1).asDiagonal())), 1e-15);
}

TEST(simulator, width_caps) {
    EXPECT_THROW(run(Circuit(kMaxSimulatorWidth + 1)), std::invalid_argument);
    EXPECT_THROW(unitary_of(Circuit(kMaxUnitaryWidth + 1)), std::invalid_argument);
    EXPECT_GE(kMaxSimulatorWidth, 22u);
}

TEST(simulator, kernels_match_oracle_per_gate) {
    std::mt19937_64 rng(1);
    const std::uint32_t width = 4;
    for (GateKind k : {GateKind::X, GateKind::Z, GateKind::H, GateKind::S, GateKind::S_DG, GateKind::T,
                       GateKind::T_DG, GateKind::CNOT, GateKind::CZ}) {
        for (Qubit a = 0; a < width; ++a) {
            for (Qubit b = 0; b < width; ++b) {
                const bool two = k == GateKind::CNOT || k == GateKind::CZ;
                if ((two && a == b) || (!two && b != 0)) {
                    continue;
                }
                Gate g = two ? make_gate(k, {a, b}) : make_gate(k, {a});
                Circuit c(width);
                c.append(g);
                EXPECT_LT(oracle::max_abs_diff(unitary_of(c), oracle::embed(g, width)), 1e-15) << to_string(g);
            }
        }
    }
}

TEST(simulator, norm_preserved_through_qsm) {
    QsmInstance inst = QsmInstance::make("00110000", "11");
    QsmOptions o;
    Circuit c = lower(build_qsm(inst, 3, o));
    Statevector sv = Statevector::basis(c.width());
    for (const Gate &g : c.gates()) {
        apply_gate(sv, g);
        ASSERT_NEAR(sv.norm_squared(), 1.0, 1e-10);
    }
}

TEST(simulator, success_probability_examples) {
    QsmInstance inst = QsmInstance::make("00110000", "11");
    QsmOptions o;
    EXPECT_NEAR(success_probability(run(build_qsm(inst, 0, o)), inst.layout()), 0.125, 1e-12);
    EXPECT_NEAR(success_probability(run(build_qsm(inst, 2, o)), inst.layout()), 0.9453125, 1e-9);
    // Pattern register forced to all ones.
    Circuit ones(inst.layout());
    for (std::uint32_t j = 0; j < inst.M; ++j) {
        ones.append(GateKind::X, {inst.layout().pattern_qubit(j)});
    }
    EXPECT_EQ(success_probability(run(ones), inst.layout()), 0.0);
}

TEST(simulator, grover_theoretical_examples) {
    EXPECT_NEAR(grover_theoretical(1, 8, 0), 0.125, 1e-15);
    EXPECT_NEAR(grover_theoretical(1, 8, 2), 0.9453125, 1e-12);
    for (std::uint64_t r = 0; r < 5; ++r) {
        EXPECT_NEAR(grover_theoretical(8, 8, r), 1.0, 1e-12);
        EXPECT_NEAR(grover_theoretical(0, 8, r), 0.0, 1e-15);
        EXPECT_NEAR(grover_theoretical(3, 16, r), oracle::grover(3, 16, r), 1e-15);
    }
    EXPECT_THROW(grover_theoretical(9, 8, 0), std::invalid_argument);
}

TEST(simulator, sample_exact_mode) {
    Circuit c(2);
    c.append(GateKind::H, {0});
    Statevector sv = run(c);
    Histogram h = sample(sv, 0, 1);
    EXPECT_EQ(h.shots, 0u);
    EXPECT_NEAR(h.frequency.at(0), 0.5, 1e-15);
    EXPECT_NEAR(h.frequency.at(2), 0.5, 1e-15);
}

TEST(simulator, sample_is_deterministic_per_seed) {
    QsmInstance inst = QsmInstance::make("00110000", "11");
    QsmOptions o;
    Statevector sv = run(build_qsm(inst, 1, o));
    Histogram a = sample(sv, 1000, 42);
    Histogram b = sample(sv, 1000, 42);
    Histogram c = sample(sv, 1000, 43);
    EXPECT_EQ(a.frequency, b.frequency);
    EXPECT_NE(a.frequency, c.frequency);
    double total = 0;
    for (const auto &[k, f] : a.frequency) {
        total += f;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(simulator, sampled_success_within_three_sigma) {
    QsmInstance inst = QsmInstance::make("00110000", "11");
    QsmOptions o;
    Statevector sv = run(build_qsm(inst, 2, o));
    const double p = oracle::grover(1, 8, 2);
    const std::uint64_t shots = 10000;
    const double sigma = std::sqrt(p * (1 - p) / shots);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        EXPECT_LT(std::abs(success_frequency(sample(sv, shots, seed), inst.layout()) - p), 3 * sigma);
    }
}

TEST(simulator, support_check_examples) {
    QsmInstance inst = QsmInstance::make("0110", "1");
    RegisterLayout l = inst.layout();
    const std::vector<Register> all = {Register::Index, Register::Data, Register::Pattern};
    Statevector zero = Statevector::basis(l.width());
    EXPECT_TRUE(register_support_check(zero, l, all, 1e-10).pass);
    QsmOptions o;
    o.variant = GateVariant::Standard;
    Statevector after_a = run(build_init_A(inst, o));
    SupportCheck data = register_support_check(after_a, l, {Register::Data}, 1e-10);
    EXPECT_FALSE(data.pass);
    EXPECT_NEAR(data.leaked, 1.0, 1e-12);
    // A^-1 Rg A leaves the data and pattern registers in |0>.
    Circuit block = invert(build_init_A(inst, o));
    Statevector sv = after_a;
    apply(sv, build_rg(inst, o));
    apply(sv, block);
    SupportCheck back = register_support_check(sv, l, {Register::Data, Register::Pattern}, 1e-10);
    EXPECT_TRUE(back.pass);
    EXPECT_LT(back.leaked, 1e-10);
}
