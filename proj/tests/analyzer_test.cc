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

#include <nlohmann/json.hpp>

#include "oracles.h"
#include "qsm/analyzer.hpp"
#include "qsm/synthesis.hpp"

using namespace qsm;

namespace {

// Closed forms written out term by term, with s = sqrt(N), n = log2 N.
Costs closed_form_rp(std::int64_t N, std::int64_t M) {
    const std::int64_t s = static_cast<std::int64_t>(std::llround(std::sqrt(double(N))));
    const std::int64_t n = static_cast<std::int64_t>(std::llround(std::log2(double(N))));
    const std::int64_t n15 = N * s;
    Costs c;
    c.t_count = 8 * n15 * n - 10 * n15 + 4 * N * n - 4 * N + 8 * s * n + s * (8 * M - 26) + 1;
    c.t_depth = 4 * s * n * n + 8 * s * n + s * (4 * M - 2) + 2 * n * n + 2 * n;
    c.cnot_count = 10 * n15 * n - 10 * n15 + 5 * N * n - 5 * N + 6 * s * n + s * (8 * M - 14) + M + 5;
    c.qubit_count = N + n + M;
    return c;
}

Costs closed_form_std(std::int64_t N, std::int64_t M) {
    const std::int64_t s = static_cast<std::int64_t>(std::llround(std::sqrt(double(N))));
    const std::int64_t n = static_cast<std::int64_t>(std::llround(std::log2(double(N))));
    const std::int64_t n15 = N * s;
    Costs c;
    c.t_count = 14 * n15 * n - 14 * n15 + 7 * N * n - 7 * N + 8 * s * n + s * (8 * M - 20) + 7;
    // 5/2 (n^2 + n) is an integer since n^2 + n is even.
    c.t_depth = 5 * s * n * n + 9 * s * n + s * (4 * M + 2) + 5 * (n * n + n) / 2;
    c.cnot_count = 16 * n15 * n - 14 * n15 + 7 * N * n - 7 * N + 10 * s * n + s * (8 * M - 10) + M + 7;
    c.qubit_count = 3 * N / 2 + n + M - 1;
    return c;
}

}  // namespace

TEST(analyzer, counts_and_depth_basics) {
    EXPECT_EQ(t_depth(Circuit(3)), 0u);
    Circuit one(2);
    one.append(GateKind::CNOT, {0, 1});
    EXPECT_EQ(cnot_count(one), 1u);
    Circuit m(3);
    m.append(GateKind::FREDKIN, {0, 1, 2});
    EXPECT_THROW(t_count(m), std::invalid_argument);
    EXPECT_THROW(t_depth(m), std::invalid_argument);
    EXPECT_THROW(cnot_count(m), std::invalid_argument);
}

TEST(analyzer, t_depth_schedule) {
    // Parallel T on different wires share a layer.
    Circuit par(2);
    par.append(GateKind::T, {0});
    par.append(GateKind::T, {1});
    EXPECT_EQ(t_depth(par), 1u);
    // A Clifford linking the wires orders them without adding a layer.
    Circuit chain(2);
    chain.append(GateKind::T, {0});
    chain.append(GateKind::CNOT, {0, 1});
    chain.append(GateKind::T, {1});
    EXPECT_EQ(t_depth(chain), 2u);
    chain.append(GateKind::H, {0});
    EXPECT_EQ(t_depth(chain), 2u);
}

TEST(analyzer, t_count_at_least_t_depth) {
    for (std::uint32_t n = 1; n <= 4; ++n) {
        for (auto v : {GateVariant::Standard, GateVariant::RelativePhase}) {
            Circuit c = lower(build_cyclic(n, v));
            EXPECT_GE(t_count(c), t_depth(c));
        }
    }
}

TEST(analyzer, counts_invariant_under_recomposition) {
    QsmInstance inst = QsmInstance::make("01100000", "10");
    QsmOptions o;
    Circuit a = lower(build_init_A(inst, o));
    Circuit q = lower(build_grover_op(inst, o));
    Circuit whole = lower(build_qsm(inst, 1, o));
    EXPECT_EQ(t_count(whole), t_count(a) + t_count(q));
    EXPECT_EQ(cnot_count(whole), cnot_count(a) + cnot_count(q));
    EXPECT_EQ(whole, compose(a, q));
}

TEST(analyzer, cyclic_depth_ratio) {
    for (std::uint32_t n = 2; n <= 4; ++n) {
        const std::uint64_t rp = t_depth(lower(build_cyclic(n, GateVariant::RelativePhase)));
        const std::uint64_t st = t_depth(lower(build_cyclic(n, GateVariant::Standard, true)));
        EXPECT_EQ(5 * rp, 4 * st) << n;
        EXPECT_EQ(rp, 2u * n * (n + 1));
    }
}

TEST(analyzer, table_formula_values) {
    EXPECT_EQ(closed_form_costs(4, 2, CostColumn::RelativePhase).costs.t_count, 77);
    EXPECT_EQ(closed_form_costs(4, 2, CostColumn::StandardFanout).costs.t_count, 171);
    EXPECT_EQ(closed_form_costs(8, 2, CostColumn::RelativePhase).costs.qubit_count, 13);
    EXPECT_FALSE(closed_form_costs(8, 2, CostColumn::RelativePhase).exact);
    EXPECT_TRUE(closed_form_costs(16, 3, CostColumn::RelativePhase).exact);
    EXPECT_THROW(closed_form_costs(1, 2, CostColumn::StandardFanout), std::invalid_argument);
}

TEST(analyzer, table_formulas_match_written_out_closed_forms) {
    for (std::int64_t N : {4, 16, 64, 256}) {
        for (std::int64_t M : {1, 2, 5}) {
            EXPECT_EQ(closed_form_costs(N, M, CostColumn::RelativePhase).costs, closed_form_rp(N, M)) << N << " " << M;
            EXPECT_EQ(closed_form_costs(N, M, CostColumn::StandardFanout).costs, closed_form_std(N, M)) << N << " " << M;
        }
    }
}

TEST(analyzer, region_formula_terms_sum_to_totals) {
    for (std::uint32_t N : {4u, 16u}) {
        for (auto v : {GateVariant::Standard, GateVariant::RelativePhase}) {
            QsmInstance inst = cost_instance(N, 2);
            ResourceReport rep = reconcile(inst, v, inst.sqrt_iterations());
            Costs sum;
            for (const auto &r : rep.regions) {
                sum = sum + r.formula;
            }
            EXPECT_EQ(sum.t_count, rep.formula.costs.t_count);
            EXPECT_EQ(sum.t_depth, rep.formula.costs.t_depth);
            EXPECT_EQ(sum.cnot_count, rep.formula.costs.cnot_count);
            Costs msum;
            for (const auto &r : rep.regions) {
                msum = msum + r.measured;
            }
            EXPECT_EQ(msum.t_count, rep.measured.t_count);
            EXPECT_EQ(msum.t_depth, rep.measured.t_depth);
            EXPECT_EQ(msum.cnot_count, rep.measured.cnot_count);
        }
    }
}

TEST(analyzer, reconcile_t_count_n4) {
    QsmInstance inst = cost_instance(4, 2);
    ResourceReport rep = reconcile(inst, GateVariant::RelativePhase, 2);
    EXPECT_EQ(rep.formula.costs.t_count, 77);
    EXPECT_EQ(rep.measured.qubit_count, rep.formula.costs.qubit_count);
    // Cyclic blocks and the junction saving are exact.
    for (auto name : {regions::kCyclicInit, regions::kCyclicIter, regions::kJunction}) {
        EXPECT_EQ(rep.region(name).measured.t_count, rep.region(name).formula.t_count) << name;
    }
    EXPECT_EQ(rep.region(regions::kJunction).measured.t_count, -2 * 4 * 2);
    // Measured = formula + mcz deltas + the constant term.
    const std::int64_t mcz = (rep.region(regions::kR0).measured - rep.region(regions::kR0).formula).t_count +
                             (rep.region(regions::kRg).measured - rep.region(regions::kRg).formula).t_count;
    EXPECT_EQ(rep.delta().t_count, mcz + 3);
    EXPECT_FALSE(rep.notes.empty());
}

TEST(analyzer, reconcile_std_t_count_is_mcz_only) {
    for (std::uint32_t N : {4u, 16u}) {
        QsmInstance inst = cost_instance(N, 2);
        ResourceReport rep = reconcile(inst, GateVariant::Standard, inst.sqrt_iterations());
        const std::int64_t mcz = (rep.region(regions::kR0).measured - rep.region(regions::kR0).formula).t_count +
                                 (rep.region(regions::kRg).measured - rep.region(regions::kRg).formula).t_count;
        EXPECT_EQ(rep.delta().t_count, mcz);
        EXPECT_EQ(rep.measured.qubit_count, rep.formula.costs.qubit_count);
    }
}

TEST(analyzer, measured_ratio_at_n16) {
    QsmInstance inst = cost_instance(16, 2);
    ResourceReport rp = reconcile(inst, GateVariant::RelativePhase, 4);
    ResourceReport st = reconcile(inst, GateVariant::Standard, 4);
    EXPECT_LT(double(rp.measured.t_count) / double(st.measured.t_count), 0.62);
}

TEST(analyzer, qubits_with_appended_ancillas) {
    QsmInstance inst = cost_instance(16, 2);
    ReconcileOptions opts;
    opts.reflection_ancillas = ReflectionAncillas::AppendClean;
    ResourceReport rep = reconcile(inst, GateVariant::RelativePhase, 4, opts);
    EXPECT_EQ(rep.measured.qubit_count, 16 + 4 + 2 + 1);
    EXPECT_EQ(rep.delta().qubit_count, 1);
}

TEST(analyzer, leading_fit_recovers_synthetic_coefficients) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    for (std::uint64_t N : {4, 16, 64, 256}) {
        const double x1 = std::pow(double(N), 1.5) * std::log2(double(N));
        const double x2 = std::pow(double(N), 1.5);
        pts.emplace_back(N, static_cast<std::uint64_t>(std::llround(8 * x1 - 10 * x2)));
    }
    LeadingFit fit = fit_leading_order(pts);
    EXPECT_NEAR(fit.leading, 8.0, 1e-9);
    EXPECT_NEAR(fit.subleading, -10.0, 1e-9);
    EXPECT_THROW(fit_leading_order({{4, 1}}), std::invalid_argument);
}

TEST(analyzer, report_serialization) {
    QsmInstance inst = cost_instance(4, 2);
    ResourceReport rep = reconcile(inst, GateVariant::RelativePhase, 2);
    EXPECT_EQ(report_csv_header(),
              "variant,N,M,r,t_count,t_depth,cnot_count,qubit_count,f_t_count,f_t_depth,f_cnot,f_qubits");
    const std::string row = report_to_csv_row(rep);
    EXPECT_EQ(row.rfind("rp,4,2,2,", 0), 0u);
    EXPECT_EQ(std::count(row.begin(), row.end(), ','), 11);
    auto doc = nlohmann::json::parse(report_to_json(rep));
    EXPECT_EQ(doc["formula"]["t_count"], 77);
    EXPECT_EQ(doc["measured"]["t_count"], rep.measured.t_count);
    EXPECT_EQ(doc["regions"].size(), rep.regions.size());
    EXPECT_NE(report_to_text(rep).find("junction.cancel"), std::string::npos);
}
