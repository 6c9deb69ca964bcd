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
#include <string>
#include <string_view>
#include <vector>

#include "qsm/builder.hpp"
#include "qsm/circuit.hpp"
#include "qsm/instance.hpp"

namespace qsm {

// Counting functions require a lowered circuit and throw std::invalid_argument
// when a macro is present.
std::uint64_t t_count(const Circuit &c);
std::uint64_t cnot_count(const Circuit &c);
std::uint64_t cz_count(const Circuit &c);

/// T-layers of the as-soon-as-possible schedule. Every gate orders the wires it
/// touches; only T and T_DG open a new layer.
std::uint64_t t_depth(const Circuit &c);

struct Costs {
    std::int64_t t_count = 0;
    std::int64_t t_depth = 0;
    std::int64_t cnot_count = 0;
    std::int64_t qubit_count = 0;

    bool operator==(const Costs &) const = default;
};

Costs operator-(const Costs &a, const Costs &b);
Costs operator+(const Costs &a, const Costs &b);

/// Measures a lowered circuit; qubit_count is the circuit width.
Costs measure(const Circuit &lowered);

/// Closed-form cost models: the fan-out standard construction and the
/// optimized relative-phase construction.
enum class CostColumn : std::uint8_t { StandardFanout, RelativePhase };

std::string_view column_name(CostColumn column);
CostColumn column_for(GateVariant variant);

struct FormulaCosts {
    Costs costs;
    /// False when sqrt(N) is not an integer; values are then rounded.
    bool exact = true;
};

/// Closed forms evaluated at (N, M) with sqrt(N) Grover iterations.
FormulaCosts closed_form_costs(std::uint64_t N, std::uint64_t M, CostColumn column);

/// One named slice of the circuit, measured on its own and compared with the
/// term of the closed form that accounts for it.
struct RegionCost {
    std::string name;
    Costs measured;
    Costs formula;
};

struct ReconcileOptions {
    /// Standard variant only.
    bool fanout = true;
    /// Defaults to on for the relative-phase variant, off for Standard.
    std::optional<bool> optimize;
    ReflectionAncillas reflection_ancillas = ReflectionAncillas::BorrowRegisters;
};

struct ResourceReport {
    GateVariant variant = GateVariant::RelativePhase;
    CostColumn column = CostColumn::RelativePhase;
    std::uint64_t N = 0;
    std::uint64_t M = 0;
    std::uint64_t iterations = 0;
    bool fanout = false;
    bool optimize = false;
    ReflectionAncillas reflection_ancillas = ReflectionAncillas::BorrowRegisters;
    Costs measured;
    FormulaCosts formula;
    std::vector<RegionCost> regions;
    std::vector<std::string> notes;

    Costs delta() const { return measured - formula.costs; }
    const RegionCost &region(std::string_view name) const;
};

/// Region names used by reconcile, in circuit order.
namespace regions {
inline constexpr std::string_view kEncoding = "encoding";
inline constexpr std::string_view kCyclicInit = "cyclic.init";
inline constexpr std::string_view kXorInit = "xor.init";
inline constexpr std::string_view kCyclicIter = "cyclic.iter";
inline constexpr std::string_view kXorIter = "xor.iter";
inline constexpr std::string_view kJunction = "junction.cancel";
inline constexpr std::string_view kR0 = "mcz.r0";
inline constexpr std::string_view kRg = "mcz.rg";
inline constexpr std::string_view kFormulaConstant = "formula.constant";
inline constexpr std::string_view kScheduleOverlap = "schedule.overlap";
}  // namespace regions

/// Builds the full circuit, lowers it, measures it, evaluates the matching
/// closed-form column and attributes every difference to a region.
ResourceReport reconcile(const QsmInstance &instance, GateVariant variant, std::uint64_t iterations,
                         const ReconcileOptions &options = {});

/// A representative instance for cost-only work: data 0011 0...0, pattern 1...1
/// truncated to M.
QsmInstance cost_instance(std::uint32_t N, std::uint32_t M);

/// Least-squares fit T ~ a * N^1.5 log2 N + b * N^1.5.
struct LeadingFit {
    double leading = 0.0;
    double subleading = 0.0;
};
LeadingFit fit_leading_order(const std::vector<std::pair<std::uint64_t, std::uint64_t>> &n_and_t_count);

std::string report_to_json(const ResourceReport &report, int indent = 2);
std::string report_to_text(const ResourceReport &report);
std::string report_csv_header();
std::string report_to_csv_row(const ResourceReport &report);

}  // namespace qsm
