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

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qsm/builder.hpp"
#include "qsm/instance.hpp"

namespace qsm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInvalidInput = 2;

/// Rejected user input. Maps to kExitInvalidInput.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum class IterationMode : std::uint8_t {
    /// floor(pi / (4 theta)) from the classical match count.
    Auto,
    /// floor(sqrt(N)).
    SqrtN,
    Explicit,
};

struct IterationSpec {
    IterationMode mode = IterationMode::Auto;
    std::uint64_t count = 0;
};

enum class OutputFormat : std::uint8_t { Text, Csv, Json };
enum class VerifyLevel : std::uint8_t { Quick, Full };

IterationSpec parse_iterations(std::string_view text);
GateVariant parse_variant(std::string_view text);
OutputFormat parse_format(std::string_view text);
VerifyLevel parse_level(std::string_view text);

struct RunConfig {
    std::string data;
    std::string pattern;
    GateVariant variant = GateVariant::RelativePhase;
    IterationSpec iterations;
    /// Unset: off for build/simulate/sweep, the analyzer default for count.
    std::optional<bool> optimize;
    /// Unset: off for build/simulate/sweep, on for count.
    std::optional<bool> fanout;
    /// build: emit the Clifford+T circuit instead of macro gates.
    bool lowered = false;
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::Text;
    std::uint64_t r_max = 9;
    VerifyLevel level = VerifyLevel::Quick;
};

/// Checks the bit-strings and builds the instance. Throws InputError naming
/// the offending character or length.
QsmInstance make_instance(const RunConfig &config);
/// Throws InputError when auto is requested and the pattern never occurs.
std::uint64_t resolve_iterations(const RunConfig &config, const QsmInstance &instance);
QsmOptions qsm_options(const RunConfig &config);

struct BuildOutput {
    Circuit circuit;
    std::uint64_t iterations = 0;
    /// Width, gate totals and Clifford+T costs in the configured format.
    std::string summary;
};

BuildOutput cmd_build(const RunConfig &config);
/// Measured costs, closed-form costs and per-region deltas.
std::string cmd_count(const RunConfig &config);
/// Success probability at the resolved iteration count.
std::string cmd_simulate(const RunConfig &config);
/// One row per r in 0..r_max: r, probability, theoretical.
std::string cmd_sweep(const RunConfig &config);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerifyOutput {
    bool pass = true;
    std::vector<CheckResult> checks;
    std::string report;
};

VerifyOutput cmd_verify(const RunConfig &config);

/// Compares the unitary of `c` with `expected` entry by entry.
CheckResult check_unitary(std::string name, const Circuit &c, const Eigen::MatrixXcd &expected,
                          double tolerance = 1e-10);

/// Parses argv, dispatches the subcommand and returns the exit code. Results
/// go to `out` (or the --out file), diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qsm::cli
