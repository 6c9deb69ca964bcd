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
#include <string>
#include <string_view>
#include <vector>

#include "qsm/circuit.hpp"

namespace qsm {

/// Which Fredkin synthesis the cyclic operator uses.
enum class GateVariant : std::uint8_t {
    /// Exact 7-T Fredkin.
    Standard,
    /// 4-T relative-phase Fredkin.
    RelativePhase,
};

std::string_view variant_name(GateVariant v);

/// A cyclic string-matching problem: find `pattern` (length M) inside the
/// cyclic binary string `data` (length N = 2^n).
struct QsmInstance {
    std::string data;
    std::string pattern;
    std::uint32_t n = 0;
    std::uint32_t N = 0;
    std::uint32_t M = 0;
    /// Shifts k with pattern[j] == data[(j + k) mod N] for every j.
    std::uint32_t matches = 0;
    /// sin(theta) = sqrt(matches / N).
    double theta = 0.0;

    /// Throws std::invalid_argument naming the offending character or length.
    static QsmInstance make(std::string data, std::string pattern);

    bool matches_at(std::uint32_t shift) const;
    std::vector<std::uint32_t> match_shifts() const;

    RegisterLayout layout(std::uint32_t ancilla = 0) const;

    /// floor(pi / (4 theta)). Throws std::domain_error when the pattern never
    /// occurs (theta = 0).
    std::uint64_t optimal_iterations() const;
    /// floor(sqrt(N)), the iteration count the closed-form costs assume.
    std::uint64_t sqrt_iterations() const;
};

}  // namespace qsm
