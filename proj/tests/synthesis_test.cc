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
#include "qsm/analyzer.hpp"
#include "qsm/synthesis.hpp"

using namespace qsm;
using oracle::cd;

namespace {

oracle::Mat to_dyn(const Matrix8 &m) {
    return oracle::Mat(m);
}

Matrix8 to_fixed(const oracle::Mat &m) {
    Matrix8 out;
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

}  // namespace

TEST(synthesis, fredkin_7t_anchor) {
    Circuit f = fredkin_7t();
    EXPECT_EQ(t_count(f), 7u);
    EXPECT_EQ(t_depth(f), 5u);
    EXPECT_EQ(cnot_count(f), 8u);
    EXPECT_LT(oracle::max_abs_diff(oracle::circuit_matrix(f), oracle::fredkin3()), 1e-12);
}

TEST(synthesis, rp_fredkin_4t_anchor) {
    Circuit f = rp_fredkin_4t();
    EXPECT_EQ(t_count(f), 4u);
    EXPECT_EQ(t_depth(f), 4u);
    oracle::Mat expected = oracle::Mat::Zero(8, 8);
    for (int i = 0; i < 5; ++i) {
        expected(i, i) = 1;
    }
    expected(5, 6) = cd(0, 1);
    expected(6, 5) = cd(0, -1);
    expected(7, 7) = -1;
    EXPECT_LT(oracle::max_abs_diff(oracle::circuit_matrix(f), expected), 1e-12);
}

TEST(synthesis, toffolis) {
    EXPECT_LT(oracle::max_abs_diff(oracle::circuit_matrix(toffoli_7t()), oracle::toffoli3()), 1e-12);
    EXPECT_EQ(t_count(toffoli_7t()), 7u);
    Matrix8 rt = to_fixed(oracle::circuit_matrix(rp_toffoli_4t()));
    EXPECT_TRUE(has_rp_toffoli_shape(rt));
    EXPECT_FALSE(has_rp_fredkin_shape(rt));
    EXPECT_EQ(t_count(rp_toffoli_4t()), 4u);
}

TEST(synthesis, fredkin_from_rp_toffoli_by_cnot_conjugation) {
    Circuit built = rp_fredkin_from_rp_toffoli(rp_toffoli_4t());
    EXPECT_LT(oracle::max_abs_diff(oracle::circuit_matrix(built), oracle::circuit_matrix(rp_fredkin_4t())), 1e-12);
    Circuit not_rt(3);
    not_rt.append(GateKind::H, {0});
    EXPECT_THROW(rp_fredkin_from_rp_toffoli(not_rt), std::invalid_argument);
}

TEST(synthesis, phase_profile_of_rp_fredkin_4t) {
    PhaseProfile p = phase_profile(rp_fredkin_4t());
    const std::array<cd, 8> expected = {1, 1, 1, 1, 1, cd(0, -1), cd(0, 1), -1};
    for (int i = 0; i < 8; ++i) {
        EXPECT_LT(std::abs(p.z[i] - expected[i]), 1e-12) << i;
    }
    EXPECT_TRUE(p.is_unit_modulus());
}

TEST(synthesis, exact_fredkin_has_trivial_profile) {
    PhaseProfile p = phase_profile(fredkin_7t());
    for (int i = 0; i < 8; ++i) {
        EXPECT_LT(std::abs(p.z[i] - 1.0), 1e-12);
    }
    EXPECT_THROW(phase_profile(toffoli_matrix()), std::invalid_argument);
}

TEST(synthesis, relative_phase_fredkin_matrix_layout) {
    PhaseProfile p;
    for (int i = 0; i < 8; ++i) {
        p.z[i] = std::polar(1.0, 0.1 * (i + 1));
    }
    Matrix8 u = relative_phase_fredkin_matrix(p);
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(u(i, i), p.z[i]);
    }
    EXPECT_EQ(u(5, 6), p.z[6]);
    EXPECT_EQ(u(6, 5), p.z[5]);
    EXPECT_EQ(u(7, 7), p.z[7]);
    EXPECT_EQ(u(5, 5), cd(0));
    EXPECT_TRUE(has_rp_fredkin_shape(u));
}

TEST(synthesis, random_profiles_are_recovered) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    const oracle::Mat f = oracle::fredkin3();
    for (int trial = 0; trial < 1000; ++trial) {
        PhaseProfile p;
        for (auto &z : p.z) {
            z = std::polar(1.0, angle(rng));
        }
        oracle::Mat u = to_dyn(relative_phase_fredkin_matrix(p));
        oracle::Mat d = f.adjoint() * u;
        oracle::Mat off = d;
        off.diagonal().setZero();
        ASSERT_LT(off.cwiseAbs().maxCoeff(), 1e-12);
        PhaseProfile back = phase_profile(to_fixed(u));
        for (int i = 0; i < 8; ++i) {
            ASSERT_LT(std::abs(back.z[i] - p.z[i]), 1e-12);
            ASSERT_LT(std::abs(d(i, i) - p.z[i]), 1e-12);
        }
    }
}

TEST(synthesis, fredkin_times_phase_diagonal) {
    // U = F D with D = diag(z); the swap of entries 5 and 6 lives in F.
    PhaseProfile p;
    for (int i = 0; i < 8; ++i) {
        p.z[i] = std::polar(1.0, 0.3 * i - 1.0);
    }
    oracle::Mat d = oracle::Mat::Zero(8, 8);
    for (int i = 0; i < 8; ++i) {
        d(i, i) = p.z[i];
    }
    EXPECT_LT(oracle::max_abs_diff(oracle::fredkin3() * d, to_dyn(relative_phase_fredkin_matrix(p))), 1e-12);
}

TEST(synthesis, lowered_macros_are_unitary) {
    for (GateKind k : {GateKind::TOFFOLI, GateKind::FREDKIN, GateKind::RP_TOFFOLI, GateKind::RP_TOFFOLI_DG,
                       GateKind::RP_FREDKIN, GateKind::RP_FREDKIN_DG}) {
        Circuit c(3);
        c.append(k, {0, 1, 2});
        oracle::Mat u = oracle::circuit_matrix(c);
        EXPECT_LT(oracle::max_abs_diff(u.adjoint() * u, oracle::Mat::Identity(8, 8)), 1e-12) << gate_name(k);
    }
    Circuit pair(3);
    pair.append(GateKind::RP_FREDKIN, {0, 1, 2});
    pair.append(GateKind::RP_FREDKIN_DG, {0, 1, 2});
    EXPECT_LT(oracle::max_abs_diff(oracle::circuit_matrix(pair), oracle::Mat::Identity(8, 8)), 1e-12);
}

TEST(synthesis, mcz_required_ancillas) {
    EXPECT_EQ(mcz_required_ancillas(1), 0u);
    EXPECT_EQ(mcz_required_ancillas(2), 0u);
    EXPECT_EQ(mcz_required_ancillas(3), 1u);
    EXPECT_EQ(mcz_required_ancillas(6), 4u);
}

TEST(synthesis, mcz_insufficient_ancillas) {
    Circuit c(4);
    c.append(make_mcz({0, 1, 2}, 3));
    EXPECT_THROW(lower(c), std::invalid_argument);
}

// Clean ancillas: only |0> ancilla inputs are checked, and must come back |0>.
// Borrowed: the full unitary must equal the phase flip on every input.
class McZ : public ::testing::TestWithParam<std::tuple<std::uint32_t, AncillaPolicy>> {};

TEST_P(McZ, flips_all_ones_and_restores_ancillas) {
    const auto [k, policy] = GetParam();
    Circuit c = mcz(k, policy);
    const std::uint32_t width = c.width();
    const std::uint32_t anc = width - (k + 1);
    EXPECT_EQ(anc, mcz_required_ancillas(k));
    std::vector<Qubit> flip_wires;
    for (Qubit q = 0; q <= k; ++q) {
        flip_wires.push_back(q);
    }
    oracle::Mat u = oracle::circuit_matrix(c);
    oracle::Mat want = oracle::phase_flip_all_ones(width, flip_wires);
    if (policy == AncillaPolicy::Borrowed || anc == 0) {
        EXPECT_LT(oracle::max_abs_diff(u, want), 1e-12);
    } else {
        const std::size_t dim = std::size_t{1} << width;
        const std::size_t anc_mask = (std::size_t{1} << anc) - 1;
        for (std::size_t col = 0; col < dim; ++col) {
            if (col & anc_mask) {
                continue;
            }
            EXPECT_LT((u.col(col) - want.col(col)).cwiseAbs().maxCoeff(), 1e-12) << col;
        }
    }
    const std::uint64_t t = t_count(lower(c));
    if (k == 1) {
        EXPECT_EQ(t, 0u);
    } else if (k == 2) {
        EXPECT_EQ(t, 7u);
    } else if (policy == AncillaPolicy::Clean) {
        EXPECT_EQ(t, 8u * k - 9);
    } else {
        EXPECT_EQ(t, 16u * k - 26);
    }
}

INSTANTIATE_TEST_SUITE_P(synthesis, McZ,
                         ::testing::Combine(::testing::Values(1u, 2u, 3u, 4u, 5u),
                                            ::testing::Values(AncillaPolicy::Clean, AncillaPolicy::Borrowed)));
