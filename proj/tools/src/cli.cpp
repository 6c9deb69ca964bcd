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

#include <CLI11.hpp>
#include <fstream>

#include "qsm/circuit_io.hpp"
#include "qsm_cli/commands.hpp"

namespace qsm::cli {

namespace {

struct RawOptions {
    std::string variant = "rp";
    std::string iterations = "auto";
    std::string format = "text";
    std::string level = "quick";
    std::string out;
    bool optimize = false;
    bool fanout = false;
};

void add_instance_options(CLI::App &cmd, RunConfig &config, RawOptions &raw) {
    cmd.add_option("--data", config.data, "Cyclic data bit-string, length a power of two")->required();
    cmd.add_option("--pattern", config.pattern, "Pattern bit-string, no longer than the data")->required();
    cmd.add_option("--variant", raw.variant, "Fredkin synthesis: std (7 T) or rp (4 T, relative phase)")
        ->capture_default_str();
    cmd.add_option("--iterations", raw.iterations, "Grover iterations: auto, sqrtN or an integer")
        ->capture_default_str();
    cmd.add_flag("--optimize", raw.optimize, "Cancel inverse gate pairs at every reflection junction");
    cmd.add_flag("--fanout", raw.fanout, "Parallelize the std cyclic operator with fan-out ancillas");
}

void add_output_options(CLI::App &cmd, RawOptions &raw) {
    cmd.add_option("--format", raw.format, "Output format: text, csv or json")->capture_default_str();
    cmd.add_option("--out", raw.out, "Write the result to this file instead of stdout");
}

void add_sampling_options(CLI::App &cmd, RunConfig &config) {
    cmd.add_option("--shots", config.shots, "Measurement shots; 0 reports exact probabilities")->capture_default_str();
    cmd.add_option("--seed", config.seed, "Sampling seed")->capture_default_str();
}

void write_result(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw InputError("cannot open '" + path + "' for writing");
    }
    file << text;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum string matching circuits over Clifford+T", "qsm"};
    app.require_subcommand(1);
    RunConfig config;
    RawOptions raw;

    CLI::App *build = app.add_subcommand("build", "Compile the circuit and write it as JSON");
    add_instance_options(*build, config, raw);
    add_output_options(*build, raw);
    build->add_flag("--lowered", config.lowered, "Emit Clifford+T gates instead of macro gates");

    CLI::App *count = app.add_subcommand("count", "Measured and closed-form resource costs");
    add_instance_options(*count, config, raw);
    add_output_options(*count, raw);

    CLI::App *simulate = app.add_subcommand("simulate", "Success probability after the Grover iterations");
    add_instance_options(*simulate, config, raw);
    add_output_options(*simulate, raw);
    add_sampling_options(*simulate, config);

    CLI::App *sweep = app.add_subcommand("sweep", "Success probability for r = 0..r-max");
    add_instance_options(*sweep, config, raw);
    add_output_options(*sweep, raw);
    add_sampling_options(*sweep, config);
    sweep->add_option("--r-max", config.r_max, "Largest iteration count")->capture_default_str();

    CLI::App *verify = app.add_subcommand("verify", "Run the built-in invariant checks");
    add_output_options(*verify, raw);
    verify->add_option("--level", raw.level, "quick or full")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        CLI::App *cmd = app.get_subcommands().front();
        const bool raw_optimize_seen = cmd->get_option_no_throw("--optimize") && cmd->count("--optimize") > 0;
        const bool raw_fanout_seen = cmd->get_option_no_throw("--fanout") && cmd->count("--fanout") > 0;
        config.variant = parse_variant(raw.variant);
        config.iterations = parse_iterations(raw.iterations);
        config.format = parse_format(raw.format);
        config.level = parse_level(raw.level);
        if (raw_optimize_seen) {
            config.optimize = raw.optimize;
        }
        if (raw_fanout_seen) {
            config.fanout = raw.fanout;
        }

        if (cmd == build) {
            const BuildOutput result = cmd_build(config);
            if (raw.out.empty()) {
                out << circuit_to_json(result.circuit, 2) << "\n";
                err << result.summary;
            } else {
                write_result(circuit_to_json(result.circuit, 2) + "\n", raw.out, out);
                out << result.summary;
            }
            return kExitOk;
        }
        if (cmd == count) {
            write_result(cmd_count(config), raw.out, out);
            return kExitOk;
        }
        if (cmd == simulate) {
            write_result(cmd_simulate(config), raw.out, out);
            return kExitOk;
        }
        if (cmd == sweep) {
            write_result(cmd_sweep(config), raw.out, out);
            return kExitOk;
        }
        const VerifyOutput result = cmd_verify(config);
        write_result(result.report, raw.out, out);
        return result.pass ? kExitOk : kExitVerificationFailure;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

}  // namespace qsm::cli
