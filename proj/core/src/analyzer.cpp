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

#include "qsm/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "qsm/optimize.hpp"

namespace qsm {

namespace {

void require_lowered(const Circuit &c, const char *what) {
    for (const Gate &g : c.gates()) {
        if (!is_primitive(g.kind)) {
            throw std::invalid_argument(std::string(what) + ": un-lowered macro " + std::string(gate_name(g.kind)));
        }
    }
}

Costs scaled(const Costs &c, std::int64_t factor) {
    return Costs{c.t_count * factor, c.t_depth * factor, c.cnot_count * factor, c.qubit_count * factor};
}

// Per-region terms of one closed-form column. `s` is sqrt(N), `n` is log2(N).
// The regions sum to the closed-form totals (checked in the unit tests).
struct Terms {
    struct Row {
        std::string_view name;
        long double t, depth, cnot;
    };
    std::vector<Row> rows;
    long double qubits;
};

template <class Num>
Terms column_terms(Num N, Num n, Num s, Num M, CostColumn column) {
    using R = Terms::Row;
    auto ld = [](Num v) { return static_cast<long double>(v); };
    const Num fredkins = N * n - N + 1;
    Terms out;
    if (column == CostColumn::RelativePhase) {
        out.rows = {
            R{regions::kCyclicInit, ld(4 * fredkins), ld(2 * n * n + 2 * n), ld(5 * fredkins)},
            R{regions::kXorInit, 0, 0, ld(M)},
            R{regions::kCyclicIter, ld(s * 8 * fredkins), ld(s * (4 * n * n + 4 * n)), ld(s * 10 * fredkins)},
            R{regions::kXorIter, 0, 0, ld(2 * M * s)},
            R{regions::kJunction, ld(-2 * N * s), ld(-4 * s), 0},
            R{regions::kR0, ld(s * (8 * n - 17)), ld(s * (4 * n + 1)), ld(s * (6 * n - 12))},
            R{regions::kRg, ld(s * (8 * M - 17)), ld(s * (4 * M + 1)), ld(s * (6 * M - 12))},
            // The closed-form T-count constant is +1, while 4(N log N - N + 1) for
            // the initial cyclic operator contributes +4.
            R{regions::kFormulaConstant, -3, 0, 0},
        };
        out.qubits = ld(N + n + M);
    } else {
        out.rows = {
            R{regions::kCyclicInit, ld(7 * fredkins), ld(5 * (n * n + n)) / 2, ld(7 * fredkins)},
            R{regions::kXorInit, 0, 0, ld(M)},
            R{regions::kCyclicIter, ld(s * 14 * fredkins), ld(s * (5 * n * n + 5 * n)),
              ld(s * (16 * N * n - 14 * N + 14 - 4 * n))},
            R{regions::kXorIter, 0, 0, ld(2 * M * s)},
            R{regions::kJunction, 0, 0, 0},
            R{regions::kR0, ld(s * (8 * n - 17)), ld(s * (4 * n + 1)), ld(s * (14 * n - 12))},
            R{regions::kRg, ld(s * (8 * M - 17)), ld(s * (4 * M + 1)), ld(s * (6 * M - 12))},
            R{regions::kFormulaConstant, 0, 0, 0},
        };
        out.qubits = ld(3 * N) / 2 + ld(n + M - 1);
    }
    return out;
}

Terms terms_for(std::uint64_t N, std::uint64_t M, CostColumn column, bool &exact) {
    const long double n = std::log2(static_cast<long double>(N));
    const long double s = std::sqrt(static_cast<long double>(N));
    const auto s_int = static_cast<std::int64_t>(std::llround(s));
    const auto n_int = static_cast<std::int64_t>(std::llround(n));
    exact = s_int * s_int == static_cast<std::int64_t>(N) && (std::int64_t{1} << n_int) == static_cast<std::int64_t>(N);
    if (exact) {
        return column_terms<std::int64_t>(static_cast<std::int64_t>(N), n_int, s_int, static_cast<std::int64_t>(M),
                                          column);
    }
    return column_terms<long double>(static_cast<long double>(N), n, s, static_cast<long double>(M), column);
}

std::int64_t rounded(long double v) {
    return static_cast<std::int64_t>(std::llround(v));
}

}  // namespace

std::uint64_t t_count(const Circuit &c) {
    require_lowered(c, "t_count");
    return c.count(GateKind::T) + c.count(GateKind::T_DG);
}

std::uint64_t cnot_count(const Circuit &c) {
    require_lowered(c, "cnot_count");
    return c.count(GateKind::CNOT);
}

std::uint64_t cz_count(const Circuit &c) {
    require_lowered(c, "cz_count");
    return c.count(GateKind::CZ);
}

std::uint64_t t_depth(const Circuit &c) {
    require_lowered(c, "t_depth");
    std::vector<std::uint64_t> level(c.width(), 0);
    std::uint64_t depth = 0;
    for (const Gate &g : c.gates()) {
        std::uint64_t at = 0;
        for (Qubit q : g.qubits) {
            at = std::max(at, level[q]);
        }
        if (is_t_like(g.kind)) {
            ++at;
            depth = std::max(depth, at);
        }
        for (Qubit q : g.qubits) {
            level[q] = at;
        }
    }
    return depth;
}

Costs operator-(const Costs &a, const Costs &b) {
    return Costs{a.t_count - b.t_count, a.t_depth - b.t_depth, a.cnot_count - b.cnot_count,
                 a.qubit_count - b.qubit_count};
}

Costs operator+(const Costs &a, const Costs &b) {
    return Costs{a.t_count + b.t_count, a.t_depth + b.t_depth, a.cnot_count + b.cnot_count,
                 a.qubit_count + b.qubit_count};
}

Costs measure(const Circuit &lowered) {
    return Costs{static_cast<std::int64_t>(t_count(lowered)), static_cast<std::int64_t>(t_depth(lowered)),
                 static_cast<std::int64_t>(cnot_count(lowered)), static_cast<std::int64_t>(lowered.width())};
}

std::string_view column_name(CostColumn column) {
    return column == CostColumn::StandardFanout ? "std_fanout" : "rp_optimized";
}

CostColumn column_for(GateVariant variant) {
    return variant == GateVariant::Standard ? CostColumn::StandardFanout : CostColumn::RelativePhase;
}

FormulaCosts closed_form_costs(std::uint64_t N, std::uint64_t M, CostColumn column) {
    if (N < 2 || M < 1) {
        throw std::invalid_argument("closed_form_costs: need N >= 2 and M >= 1");
    }
    FormulaCosts out;
    Terms terms = terms_for(N, M, column, out.exact);
    long double t = 0, depth = 0, cnot = 0;
    for (const auto &row : terms.rows) {
        t += row.t;
        depth += row.depth;
        cnot += row.cnot;
    }
    out.costs = Costs{rounded(t), rounded(depth), rounded(cnot), rounded(terms.qubits)};
    return out;
}

const RegionCost &ResourceReport::region(std::string_view name) const {
    for (const auto &r : regions) {
        if (r.name == name) {
            return r;
        }
    }
    throw std::out_of_range("ResourceReport: no region " + std::string(name));
}

QsmInstance cost_instance(std::uint32_t N, std::uint32_t M) {
    std::string data(N, '0');
    if (N >= 4) {
        data[2] = data[3] = '1';
    } else {
        data[N - 1] = '1';
    }
    return QsmInstance::make(std::move(data), std::string(M, '1'));
}

namespace {

// Saving of the cancellation across A^-1 R0 A. Counts come from the whole
// block; T-depth is taken from the two cyclic sides measured separately, so
// that depth hidden behind R0 in the schedule is not charged to this term.
Costs measure_junction(const QsmInstance &instance, const QsmOptions &qo) {
    QsmOptions plain = qo;
    plain.optimize = false;
    QsmOptions cancelled = qo;
    cancelled.optimize = true;
    const Circuit before = lower(build_reflect_psi(instance, plain));
    const Circuit after = build_reflect_psi(instance, cancelled);
    Costs saving = measure(after) - measure(before);

    const Circuit a = lower(build_init_A(instance, qo));
    const Circuit r0 = lower(build_r0(instance, qo));
    const std::size_t removed = before.size() - after.size();
    const std::size_t left = a.size() - removed / 2;
    const auto &gates = after.gates();
    const bool r0_intact = removed % 2 == 0 && left + r0.size() <= gates.size() &&
                           std::equal(r0.gates().begin(), r0.gates().end(), gates.begin() + left);
    if (r0_intact) {
        Circuit lhs(after.width()), rhs(after.width());
        for (std::size_t i = 0; i < left; ++i) {
            lhs.append(gates[i]);
        }
        for (std::size_t i = left + r0.size(); i < gates.size(); ++i) {
            rhs.append(gates[i]);
        }
        saving.t_depth = static_cast<std::int64_t>(t_depth(lhs) + t_depth(rhs)) -
                         2 * static_cast<std::int64_t>(t_depth(a));
    }
    return saving;
}

}  // namespace

ResourceReport reconcile(const QsmInstance &instance, GateVariant variant, std::uint64_t iterations,
                         const ReconcileOptions &options) {
    ResourceReport report;
    report.variant = variant;
    report.column = column_for(variant);
    report.N = instance.N;
    report.M = instance.M;
    report.iterations = iterations;
    report.fanout = options.fanout && variant == GateVariant::Standard;
    report.optimize = options.optimize.value_or(variant == GateVariant::RelativePhase);
    report.reflection_ancillas = options.reflection_ancillas;

    QsmOptions qo;
    qo.variant = variant;
    qo.optimize = report.optimize;
    qo.fanout = report.fanout;
    qo.reflection_ancillas = options.reflection_ancillas;
    const RegisterLayout layout = qsm_layout(instance, qo);
    const auto r = static_cast<std::int64_t>(iterations);

    const Circuit full = lower(build_qsm(instance, iterations, qo));
    report.measured = measure(full);

    // Measured regions, each on its own.
    Circuit encoding = build_encoding(instance, layout);
    for (std::uint32_t i = 0; i < layout.n; ++i) {
        encoding.append(GateKind::H, {layout.index_qubit(i)});
    }
    const Costs cyclic = measure(lower(build_cyclic(layout, variant, report.fanout)));
    const Costs xor_costs = measure(build_xor(layout));
    const Costs junction_saving = measure_junction(instance, qo);
    const Costs r0 = measure(lower(build_r0(instance, qo)));
    const Costs rg = measure(lower(build_rg(instance, qo)));

    auto strip = [](Costs c) {
        c.qubit_count = 0;
        return c;
    };
    std::vector<std::pair<std::string_view, Costs>> measured_rows = {
        {regions::kEncoding, strip(measure(encoding))},
        {regions::kCyclicInit, strip(cyclic)},
        {regions::kXorInit, strip(xor_costs)},
        {regions::kCyclicIter, strip(scaled(cyclic, 2 * r))},
        {regions::kXorIter, strip(scaled(xor_costs, 2 * r))},
        {regions::kJunction, report.optimize ? strip(scaled(junction_saving, r)) : Costs{}},
        {regions::kR0, strip(scaled(r0, r))},
        {regions::kRg, strip(scaled(rg, r))},
        {regions::kFormulaConstant, Costs{}},
    };

    bool exact = true;
    Terms terms = terms_for(instance.N, instance.M, report.column, exact);
    report.formula = closed_form_costs(instance.N, instance.M, report.column);

    Costs region_sum;
    for (const auto &[name, costs] : measured_rows) {
        RegionCost row{std::string(name), costs, Costs{}};
        for (const auto &term : terms.rows) {
            if (term.name == name) {
                row.formula = Costs{rounded(term.t), rounded(term.depth), rounded(term.cnot), 0};
            }
        }
        region_sum = region_sum + costs;
        report.regions.push_back(std::move(row));
    }
    // T-depth does not add across regions; whatever the ASAP schedule overlaps
    // shows up here.
    RegionCost overlap{std::string(regions::kScheduleOverlap), Costs{}, Costs{}};
    overlap.measured.t_depth = report.measured.t_depth - region_sum.t_depth;
    report.regions.push_back(overlap);

    if (region_sum.t_count != report.measured.t_count || region_sum.cnot_count != report.measured.cnot_count) {
        report.notes.push_back("region sums do not reproduce the measured totals");
    }
    if (!report.formula.exact) {
        report.notes.push_back("sqrt(N) is not an integer; closed forms evaluated in floating point and rounded");
    }
    if (static_cast<std::uint64_t>(r) != static_cast<std::uint64_t>(std::llround(std::sqrt(double(instance.N))))) {
        report.notes.push_back("iteration count differs from sqrt(N); iteration-scaled regions will differ");
    }
    for (const auto &row : report.regions) {
        Costs d = row.measured - row.formula;
        if (d.t_count != 0 || d.t_depth != 0 || d.cnot_count != 0) {
            std::ostringstream msg;
            msg << row.name << ": delta t_count " << d.t_count << ", t_depth " << d.t_depth << ", cnot "
                << d.cnot_count;
            report.notes.push_back(msg.str());
        }
    }
    const std::int64_t mcz_anc = static_cast<std::int64_t>(layout.ancilla) -
                                 static_cast<std::int64_t>(report.fanout ? fanout_ancillas(instance.N) : 0);
    if (mcz_anc > 0) {
        std::ostringstream msg;
        msg << "qubits: " << mcz_anc << " appended clean ancillas for the multi-controlled Z ladders";
        report.notes.push_back(msg.str());
    }
    return report;
}

LeadingFit fit_leading_order(const std::vector<std::pair<std::uint64_t, std::uint64_t>> &n_and_t_count) {
    if (n_and_t_count.size() < 2) {
        throw std::invalid_argument("fit_leading_order: need at least two points");
    }
    // Normal equations for two basis functions.
    double s11 = 0, s12 = 0, s22 = 0, b1 = 0, b2 = 0;
    for (const auto &[N, t] : n_and_t_count) {
        const double x1 = std::pow(double(N), 1.5) * std::log2(double(N));
        const double x2 = std::pow(double(N), 1.5);
        s11 += x1 * x1;
        s12 += x1 * x2;
        s22 += x2 * x2;
        b1 += x1 * double(t);
        b2 += x2 * double(t);
    }
    const double det = s11 * s22 - s12 * s12;
    if (std::abs(det) < 1e-300) {
        throw std::invalid_argument("fit_leading_order: degenerate sample");
    }
    return LeadingFit{(b1 * s22 - b2 * s12) / det, (s11 * b2 - s12 * b1) / det};
}

std::string report_to_json(const ResourceReport &report, int indent) {
    using nlohmann::json;
    auto costs = [](const Costs &c) {
        return json{{"t_count", c.t_count}, {"t_depth", c.t_depth}, {"cnot_count", c.cnot_count},
                    {"qubit_count", c.qubit_count}};
    };
    json regions_json = json::array();
    for (const auto &r : report.regions) {
        regions_json.push_back({{"name", r.name}, {"measured", costs(r.measured)}, {"formula", costs(r.formula)}});
    }
    json doc = {
        {"variant", variant_name(report.variant)},
        {"column", column_name(report.column)},
        {"N", report.N},
        {"M", report.M},
        {"iterations", report.iterations},
        {"fanout", report.fanout},
        {"optimize", report.optimize},
        {"reflection_ancillas",
         report.reflection_ancillas == ReflectionAncillas::BorrowRegisters ? "borrow" : "append"},
        {"measured", costs(report.measured)},
        {"formula", costs(report.formula.costs)},
        {"formula_exact", report.formula.exact},
        {"delta", costs(report.delta())},
        {"regions", regions_json},
        {"notes", report.notes},
    };
    return doc.dump(indent);
}

std::string report_to_text(const ResourceReport &report) {
    std::ostringstream out;
    const Costs d = report.delta();
    out << "variant " << variant_name(report.variant) << " (" << column_name(report.column) << "), N=" << report.N
        << " M=" << report.M << " r=" << report.iterations << (report.fanout ? " fanout" : "")
        << (report.optimize ? " optimized" : "") << "\n";
    out << "             measured    formula      delta\n";
    auto line = [&](const char *name, std::int64_t m, std::int64_t f, std::int64_t dd) {
        out << "  " << name;
        for (std::size_t i = std::string(name).size(); i < 11; ++i) {
            out << ' ';
        }
        out << std::setw(10) << m << ' ' << std::setw(10) << f << ' ' << std::setw(10) << dd << "\n";
    };
    line("t_count", report.measured.t_count, report.formula.costs.t_count, d.t_count);
    line("t_depth", report.measured.t_depth, report.formula.costs.t_depth, d.t_depth);
    line("cnot", report.measured.cnot_count, report.formula.costs.cnot_count, d.cnot_count);
    line("qubits", report.measured.qubit_count, report.formula.costs.qubit_count, d.qubit_count);
    out << "  regions (measured/formula):\n";
    for (const auto &r : report.regions) {
        out << "    " << r.name << ": T " << r.measured.t_count << "/" << r.formula.t_count << ", T-depth "
            << r.measured.t_depth << "/" << r.formula.t_depth << ", CNOT " << r.measured.cnot_count << "/"
            << r.formula.cnot_count << "\n";
    }
    for (const auto &note : report.notes) {
        out << "  note: " << note << "\n";
    }
    return out.str();
}

std::string report_csv_header() {
    return "variant,N,M,r,t_count,t_depth,cnot_count,qubit_count,f_t_count,f_t_depth,f_cnot,f_qubits";
}

std::string report_to_csv_row(const ResourceReport &report) {
    std::ostringstream out;
    const Costs &m = report.measured;
    const Costs &f = report.formula.costs;
    out << variant_name(report.variant) << ',' << report.N << ',' << report.M << ',' << report.iterations << ','
        << m.t_count << ',' << m.t_depth << ',' << m.cnot_count << ',' << m.qubit_count << ',' << f.t_count << ','
        << f.t_depth << ',' << f.cnot_count << ',' << f.qubit_count;
    return out.str();
}

}  // namespace qsm
