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

#include "qsm_cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qsm/analyzer.hpp"
#include "qsm/optimize.hpp"
#include "qsm/simulator.hpp"
#include "qsm/synthesis.hpp"

namespace qsm::cli {

namespace {

std::string format_double(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

std::uint64_t parse_u64(std::string_view text, const char *what) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
        throw InputError(std::string(what) + ": expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return value;
}

void require_simulable(const RegisterLayout &layout) {
    if (layout.width() > kMaxSimulatorWidth) {
        std::ostringstream msg;
        msg << "circuit width " << layout.width() << " exceeds the simulator cap of " << kMaxSimulatorWidth
            << " qubits; use 'qsm count' for resource estimates";
        throw InputError(msg.str());
    }
}

Costs measure_lowered(const Circuit &c) {
    return measure(c.is_lowered() ? c : lower(c));
}

}  // namespace

IterationSpec parse_iterations(std::string_view text) {
    if (text == "auto") {
        return {IterationMode::Auto, 0};
    }
    if (text == "sqrtN") {
        return {IterationMode::SqrtN, 0};
    }
    return {IterationMode::Explicit, parse_u64(text, "--iterations")};
}

GateVariant parse_variant(std::string_view text) {
    if (text == "std") {
        return GateVariant::Standard;
    }
    if (text == "rp") {
        return GateVariant::RelativePhase;
    }
    throw InputError("--variant: expected std or rp, got '" + std::string(text) + "'");
}

OutputFormat parse_format(std::string_view text) {
    if (text == "text") {
        return OutputFormat::Text;
    }
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "json") {
        return OutputFormat::Json;
    }
    throw InputError("--format: expected text, csv or json, got '" + std::string(text) + "'");
}

VerifyLevel parse_level(std::string_view text) {
    if (text == "quick") {
        return VerifyLevel::Quick;
    }
    if (text == "full") {
        return VerifyLevel::Full;
    }
    throw InputError("--level: expected quick or full, got '" + std::string(text) + "'");
}

QsmInstance make_instance(const RunConfig &config) {
    try {
        return QsmInstance::make(config.data, config.pattern);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
}

std::uint64_t resolve_iterations(const RunConfig &config, const QsmInstance &instance) {
    switch (config.iterations.mode) {
        case IterationMode::Explicit:
            return config.iterations.count;
        case IterationMode::SqrtN:
            return instance.sqrt_iterations();
        case IterationMode::Auto:
            break;
    }
    try {
        return instance.optimal_iterations();
    } catch (const std::domain_error &e) {
        throw InputError(e.what());
    }
}

QsmOptions qsm_options(const RunConfig &config) {
    QsmOptions o;
    o.variant = config.variant;
    o.optimize = config.optimize.value_or(false);
    o.fanout = config.fanout.value_or(false);
    if (o.fanout && o.variant != GateVariant::Standard) {
        throw InputError("--fanout applies to --variant std only");
    }
    return o;
}

BuildOutput cmd_build(const RunConfig &config) {
    const QsmInstance inst = make_instance(config);
    const QsmOptions opts = qsm_options(config);
    BuildOutput result;
    result.iterations = resolve_iterations(config, inst);
    result.circuit = build_qsm(inst, result.iterations, opts);
    if (config.lowered && !result.circuit.is_lowered()) {
        result.circuit = lower(result.circuit);
    }
    const Costs c = measure_lowered(result.circuit);
    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Text:
            out << "width " << result.circuit.width() << "\n"
                << "gates " << result.circuit.size() << "\n"
                << "iterations " << result.iterations << "\n"
                << "t_count " << c.t_count << "\n"
                << "t_depth " << c.t_depth << "\n"
                << "cnot_count " << c.cnot_count << "\n";
            break;
        case OutputFormat::Csv:
            out << "variant,N,M,r,width,gates,t_count,t_depth,cnot_count\n"
                << variant_name(config.variant) << ',' << inst.N << ',' << inst.M << ',' << result.iterations << ','
                << result.circuit.width() << ',' << result.circuit.size() << ',' << c.t_count << ',' << c.t_depth
                << ',' << c.cnot_count << "\n";
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["variant"] = variant_name(config.variant);
            j["N"] = inst.N;
            j["M"] = inst.M;
            j["iterations"] = result.iterations;
            j["width"] = result.circuit.width();
            j["gates"] = result.circuit.size();
            j["t_count"] = c.t_count;
            j["t_depth"] = c.t_depth;
            j["cnot_count"] = c.cnot_count;
            out << j.dump(2) << "\n";
            break;
        }
    }
    result.summary = out.str();
    return result;
}

std::string cmd_count(const RunConfig &config) {
    const QsmInstance inst = make_instance(config);
    const std::uint64_t r = resolve_iterations(config, inst);
    ReconcileOptions opts;
    opts.optimize = config.optimize;
    opts.fanout = config.fanout.value_or(true);
    const ResourceReport rep = reconcile(inst, config.variant, r, opts);

    // Same instance, the other variant with its own defaults.
    const GateVariant other_variant =
        config.variant == GateVariant::Standard ? GateVariant::RelativePhase : GateVariant::Standard;
    const ResourceReport other = reconcile(inst, other_variant, r);
    const ResourceReport &rp = config.variant == GateVariant::RelativePhase ? rep : other;
    const ResourceReport &st = config.variant == GateVariant::RelativePhase ? other : rep;
    const double ratio = double(rp.measured.t_count) / double(st.measured.t_count);

    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Text:
            out << report_to_text(rep) << "  rp/std measured t_count ratio " << format_double(ratio) << "\n";
            break;
        case OutputFormat::Csv:
            out << report_csv_header() << "\n" << report_to_csv_row(rep) << "\n";
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json j = nlohmann::ordered_json::parse(report_to_json(rep));
            j["rp_over_std_t_count_ratio"] = ratio;
            out << j.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

std::string cmd_simulate(const RunConfig &config) {
    const QsmInstance inst = make_instance(config);
    const QsmOptions opts = qsm_options(config);
    const RegisterLayout layout = qsm_layout(inst, opts);
    require_simulable(layout);
    const std::uint64_t r = resolve_iterations(config, inst);
    const Statevector sv = run(build_qsm(inst, r, opts));
    const double exact = success_probability(sv, layout);
    const double theory = grover_theoretical(inst.matches, inst.N, r);
    const bool sampled = config.shots > 0;
    const double frequency = sampled ? success_frequency(sample(sv, config.shots, config.seed), layout) : 0.0;
    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Text:
            out << "N " << inst.N << ", M " << inst.M << ", matches " << inst.matches << ", r " << r << "\n"
                << "success probability " << format_double(exact) << "\n"
                << "theoretical " << format_double(theory) << "\n";
            if (sampled) {
                out << "sampled (" << config.shots << " shots, seed " << config.seed << ") " << format_double(frequency)
                    << "\n";
            }
            break;
        case OutputFormat::Csv:
            out << "r,probability,theoretical" << (sampled ? ",sampled" : "") << "\n"
                << r << ',' << format_double(exact) << ',' << format_double(theory);
            if (sampled) {
                out << ',' << format_double(frequency);
            }
            out << "\n";
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["N"] = inst.N;
            j["M"] = inst.M;
            j["matches"] = inst.matches;
            j["iterations"] = r;
            j["probability"] = exact;
            j["theoretical"] = theory;
            if (sampled) {
                j["shots"] = config.shots;
                j["seed"] = config.seed;
                j["sampled"] = frequency;
            }
            out << j.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

std::string cmd_sweep(const RunConfig &config) {
    const QsmInstance inst = make_instance(config);
    QsmOptions opts = qsm_options(config);
    const RegisterLayout layout = qsm_layout(inst, opts);
    require_simulable(layout);

    const Circuit q = opts.optimize ? build_grover_op(inst, opts) : lower(build_grover_op(inst, opts));
    Statevector sv = run(build_init_A(inst, opts));
    struct Row {
        std::uint64_t r;
        double probability;
        double theoretical;
    };
    std::vector<Row> rows;
    for (std::uint64_t r = 0; r <= config.r_max; ++r) {
        if (r > 0) {
            apply(sv, q);
        }
        const double p = config.shots > 0 ? success_frequency(sample(sv, config.shots, config.seed + r), layout)
                                          : success_probability(sv, layout);
        rows.push_back({r, p, grover_theoretical(inst.matches, inst.N, r)});
    }

    std::ostringstream out;
    switch (config.format) {
        case OutputFormat::Csv:
            out << "r,probability,theoretical\n";
            for (const Row &row : rows) {
                out << row.r << ',' << format_double(row.probability) << ',' << format_double(row.theoretical)
                    << "\n";
            }
            break;
        case OutputFormat::Text:
            out << "   r  probability  theoretical\n";
            for (const Row &row : rows) {
                out << std::setw(4) << row.r << "  " << std::fixed << std::setprecision(9) << row.probability << "  "
                    << row.theoretical << "\n";
            }
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["N"] = inst.N;
            j["M"] = inst.M;
            j["matches"] = inst.matches;
            j["variant"] = variant_name(config.variant);
            j["shots"] = config.shots;
            j["seed"] = config.seed;
            j["rows"] = nlohmann::ordered_json::array();
            for (const Row &row : rows) {
                j["rows"].push_back({{"r", row.r}, {"probability", row.probability}, {"theoretical", row.theoretical}});
            }
            out << j.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

CheckResult check_unitary(std::string name, const Circuit &c, const Eigen::MatrixXcd &expected, double tolerance) {
    CheckResult result{std::move(name), true, ""};
    const Eigen::MatrixXcd u = unitary_of(c);
    if (u.rows() != expected.rows() || u.cols() != expected.cols()) {
        result.pass = false;
        result.detail = "dimension mismatch";
        return result;
    }
    const double err = (u - expected).cwiseAbs().maxCoeff();
    result.pass = err <= tolerance;
    result.detail = "max entry error " + format_double(err);
    return result;
}

namespace {

CheckResult check(std::string name, bool pass, std::string detail = "") {
    return {std::move(name), pass, std::move(detail)};
}

Eigen::MatrixXcd rp_fredkin_reference() {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(8, 8);
    for (int i = 0; i < 5; ++i) {
        m(i, i) = 1;
    }
    m(5, 6) = std::complex<double>(0, 1);
    m(6, 5) = std::complex<double>(0, -1);
    m(7, 7) = -1;
    return m;
}

Eigen::MatrixXcd gate_reference(GateKind kind) {
    switch (kind) {
        case GateKind::FREDKIN:
            return fredkin_matrix();
        case GateKind::TOFFOLI:
            return toffoli_matrix();
        case GateKind::RP_FREDKIN:
            return rp_fredkin_reference();
        case GateKind::RP_FREDKIN_DG:
            return rp_fredkin_reference().adjoint();
        default:
            throw std::logic_error("no reference matrix");
    }
}

CheckResult check_rotation(std::uint32_t n) {
    const RegisterLayout l = RegisterLayout::make(n, 1);
    const std::uint32_t N = l.N;
    for (auto variant : {GateVariant::Standard, GateVariant::RelativePhase}) {
        const Circuit c = lower(build_cyclic(l, variant));
        for (std::uint64_t k = 0; k < N; ++k) {
            for (std::uint64_t x = 0; x < (std::uint64_t{1} << N); ++x) {
                // Data bits are the next N wires after the index register.
                const std::uint64_t input = (k << (N + 1)) | (x << 1);
                std::uint64_t rotated = 0;
                for (std::uint32_t j = 0; j < N; ++j) {
                    const std::uint64_t bit = (x >> (N - 1 - (j + k) % N)) & 1;
                    rotated |= bit << (N - 1 - j);
                }
                const std::uint64_t want = (k << (N + 1)) | (rotated << 1);
                const Statevector sv = run(c, input);
                if (std::abs(std::abs(sv.amps[want]) - 1.0) > 1e-10 ||
                    (variant == GateVariant::Standard && std::abs(sv.amps[want] - 1.0) > 1e-10)) {
                    return check("cyclic rotation n=" + std::to_string(n), false,
                                 std::string(variant_name(variant)) + " fails at k=" + std::to_string(k));
                }
            }
        }
    }
    return check("cyclic rotation n=" + std::to_string(n), true, "all basis inputs");
}

CheckResult check_counts() {
    for (std::uint32_t n = 1; n <= 6; ++n) {
        const std::uint64_t N = std::uint64_t{1} << n;
        for (std::uint32_t k = 0; k < n; ++k) {
            if (build_c2k(n, k, GateVariant::Standard).count(GateKind::FREDKIN) != N - (std::uint64_t{1} << k)) {
                return check("Fredkin counts", false, "C block n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
        }
        const std::uint64_t F = N * n - N + 1;
        if (build_cyclic(n, GateVariant::Standard).count(GateKind::FREDKIN) != F ||
            t_count(lower(build_cyclic(n, GateVariant::RelativePhase))) != 4 * F) {
            return check("Fredkin counts", false, "cyclic n=" + std::to_string(n));
        }
    }
    return check("Fredkin counts", true, "n <= 6");
}

CheckResult check_success_curve() {
    const QsmInstance inst = QsmInstance::make("00110000", "11");
    double worst = 0;
    for (bool optimize : {false, true}) {
        QsmOptions o;
        o.optimize = optimize;
        for (std::uint64_t r = 0; r <= 9; ++r) {
            const double p = success_probability(run(build_qsm(inst, r, o)), inst.layout());
            worst = std::max(worst, std::abs(p - grover_theoretical(inst.matches, inst.N, r)));
        }
    }
    return check("success curve N=8", worst <= 1e-9, "max error " + format_double(worst));
}

CheckResult check_variants_and_r0(const std::string &data, const std::string &pattern) {
    const QsmInstance inst = QsmInstance::make(data, pattern);
    const std::string name = "variant independence and R0 support N=" + std::to_string(inst.N);
    double worst = 0;
    double leaked = 0;
    for (std::uint64_t r = 0; r <= 5; ++r) {
        QsmOptions st;
        st.variant = GateVariant::Standard;
        QsmOptions rp;
        rp.optimize = true;
        const auto a = run(build_qsm(inst, r, st)).probabilities();
        const auto b = run(build_qsm(inst, r, rp)).probabilities();
        for (std::size_t i = 0; i < a.size(); ++i) {
            worst = std::max(worst, std::abs(a[i] - b[i]));
        }
    }
    QsmOptions st;
    st.variant = GateVariant::Standard;
    const Circuit a = build_init_A(inst, st);
    const Circuit a_inv = invert(a);
    const Circuit r0 = build_r0(inst, st);
    const Circuit rg = build_rg(inst, st);
    Statevector sv = run(a);
    for (int r = 0; r < 4; ++r) {
        apply(sv, rg);
        apply(sv, a_inv);
        leaked = std::max(leaked,
                          register_support_check(sv, inst.layout(), {Register::Data, Register::Pattern}, 1e-10).leaked);
        apply(sv, r0);
        apply(sv, a);
    }
    return check(name, worst <= 1e-9 && leaked < 1e-10,
                 "max difference " + format_double(worst) + ", leaked mass " + format_double(leaked));
}

CheckResult check_junction(std::uint32_t N) {
    const QsmInstance inst = cost_instance(N, 2);
    QsmOptions o;
    const std::uint64_t plain = t_count(lower(build_grover_op(inst, o)));
    o.optimize = true;
    const std::uint64_t opt = t_count(build_grover_op(inst, o));
    return check("junction saving N=" + std::to_string(N), plain - opt == 2 * N,
                 std::to_string(plain) + " -> " + std::to_string(opt));
}

CheckResult check_depth_ratio(std::uint32_t n) {
    const std::uint64_t rp = t_depth(lower(build_cyclic(n, GateVariant::RelativePhase)));
    const std::uint64_t st = t_depth(lower(build_cyclic(n, GateVariant::Standard, true)));
    return check("T-depth ratio n=" + std::to_string(n), 5 * rp == 4 * st,
                 std::to_string(rp) + " / " + std::to_string(st));
}

CheckResult check_leading_fit(GateVariant variant) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    for (std::uint32_t N : {4u, 16u, 64u}) {
        const QsmInstance inst = cost_instance(N, 2);
        QsmOptions o;
        o.variant = variant;
        o.optimize = variant == GateVariant::RelativePhase;
        o.fanout = variant == GateVariant::Standard;
        pts.emplace_back(N, t_count(lower(build_qsm(inst, inst.sqrt_iterations(), o))));
    }
    const double target = variant == GateVariant::RelativePhase ? 8.0 : 14.0;
    const double got = fit_leading_order(pts).leading;
    return check("leading T-count coefficient " + std::string(variant_name(variant)),
                 std::abs(got - target) <= 0.1 * target,
                 format_double(got) + " vs " + format_double(target));
}

CheckResult check_cyclic_terms_n16() {
    for (auto variant : {GateVariant::RelativePhase, GateVariant::Standard}) {
        const QsmInstance inst = cost_instance(16, 2);
        const ResourceReport rep = reconcile(inst, variant, inst.sqrt_iterations());
        for (auto name : {regions::kCyclicInit, regions::kCyclicIter, regions::kJunction}) {
            const RegionCost &row = rep.region(name);
            if (row.measured.t_count != row.formula.t_count) {
                return check("N=16 cyclic T-count regression", false,
                             std::string(variant_name(variant)) + " " + std::string(name));
            }
        }
        if (rep.measured.qubit_count != rep.formula.costs.qubit_count) {
            return check("N=16 cyclic T-count regression", false, "qubit count");
        }
    }
    return check("N=16 cyclic T-count regression", true, "cyclic and junction terms exact");
}

}  // namespace

VerifyOutput cmd_verify(const RunConfig &config) {
    VerifyOutput result;
    auto add = [&](CheckResult c) { result.checks.push_back(std::move(c)); };

    add(check_unitary("fredkin_7t unitary", fredkin_7t(), fredkin_matrix()));
    add(check_unitary("toffoli_7t unitary", toffoli_7t(), toffoli_matrix()));
    add(check_unitary("rp_fredkin_4t unitary", rp_fredkin_4t(), rp_fredkin_reference()));
    for (GateKind k : {GateKind::FREDKIN, GateKind::TOFFOLI, GateKind::RP_FREDKIN, GateKind::RP_FREDKIN_DG}) {
        Circuit c(3);
        c.append(k, {0, 1, 2});
        add(check_unitary("lowering rule " + std::string(gate_name(k)), c, gate_reference(k)));
    }
    add(check("gate anchors",
              t_count(fredkin_7t()) == 7 && t_depth(fredkin_7t()) == 5 && t_count(rp_fredkin_4t()) == 4 &&
                  t_depth(rp_fredkin_4t()) == 4,
              "T-count/T-depth 7/5 and 4/4"));
    add(check_counts());
    add(check_rotation(2));
    add(check_success_curve());
    add(check_variants_and_r0("0110", "11"));
    add(check_junction(4));
    add(check_junction(8));
    add(check_depth_ratio(2));
    add(check_depth_ratio(3));
    if (config.level == VerifyLevel::Full) {
        add(check_rotation(3));
        add(check_variants_and_r0("00110000", "11"));
        add(check_junction(16));
        add(check_depth_ratio(4));
        add(check_cyclic_terms_n16());
        add(check_leading_fit(GateVariant::RelativePhase));
        add(check_leading_fit(GateVariant::Standard));
    }

    std::ostringstream out;
    std::size_t failed = 0;
    for (const CheckResult &c : result.checks) {
        failed += c.pass ? 0 : 1;
    }
    result.pass = failed == 0;
    switch (config.format) {
        case OutputFormat::Text:
            for (const CheckResult &c : result.checks) {
                out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            }
            out << result.checks.size() - failed << "/" << result.checks.size() << " checks passed\n";
            break;
        case OutputFormat::Csv:
            out << "check,pass,detail\n";
            for (const CheckResult &c : result.checks) {
                out << '"' << c.name << "\"," << (c.pass ? 1 : 0) << ",\"" << c.detail << "\"\n";
            }
            break;
        case OutputFormat::Json: {
            nlohmann::ordered_json j;
            j["pass"] = result.pass;
            j["checks"] = nlohmann::ordered_json::array();
            for (const CheckResult &c : result.checks) {
                j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            }
            out << j.dump(2) << "\n";
            break;
        }
    }
    result.report = out.str();
    return result;
}

}  // namespace qsm::cli
