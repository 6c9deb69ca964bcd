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

#include "qsm/instance.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qsm {

namespace {

void check_bits(const std::string &s, const char *what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1') {
            std::ostringstream msg;
            msg << what << " has invalid character '" << s[i] << "' at position " << i
                << " (only 0 and 1 are allowed)";
            throw std::invalid_argument(msg.str());
        }
    }
}

}  // namespace

std::string_view variant_name(GateVariant v) {
    return v == GateVariant::Standard ? "std" : "rp";
}

QsmInstance QsmInstance::make(std::string data, std::string pattern) {
    check_bits(data, "data");
    check_bits(pattern, "pattern");
    if (data.size() < 2 || !std::has_single_bit(data.size()) || data.size() > (std::size_t{1} << 30)) {
        std::ostringstream msg;
        msg << "data length " << data.size() << " is not a power of two >= 2";
        throw std::invalid_argument(msg.str());
    }
    if (pattern.empty() || pattern.size() > data.size()) {
        std::ostringstream msg;
        msg << "pattern length " << pattern.size() << " must be in [1, " << data.size() << "]";
        throw std::invalid_argument(msg.str());
    }
    QsmInstance inst;
    inst.N = static_cast<std::uint32_t>(data.size());
    inst.n = static_cast<std::uint32_t>(std::countr_zero(data.size()));
    inst.M = static_cast<std::uint32_t>(pattern.size());
    inst.data = std::move(data);
    inst.pattern = std::move(pattern);
    inst.matches = static_cast<std::uint32_t>(inst.match_shifts().size());
    inst.theta = std::asin(std::sqrt(static_cast<double>(inst.matches) / inst.N));
    return inst;
}

bool QsmInstance::matches_at(std::uint32_t shift) const {
    for (std::uint32_t j = 0; j < M; ++j) {
        if (pattern[j] != data[(j + shift) % N]) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> QsmInstance::match_shifts() const {
    std::vector<std::uint32_t> shifts;
    for (std::uint32_t k = 0; k < N; ++k) {
        if (matches_at(k)) {
            shifts.push_back(k);
        }
    }
    return shifts;
}

RegisterLayout QsmInstance::layout(std::uint32_t ancilla) const {
    return RegisterLayout::make(n, M, ancilla);
}

std::uint64_t QsmInstance::optimal_iterations() const {
    if (matches == 0) {
        throw std::domain_error("pattern does not occur in data (m = 0); choose an explicit iteration count");
    }
    return static_cast<std::uint64_t>(std::floor(std::numbers::pi / (4.0 * theta)));
}

std::uint64_t QsmInstance::sqrt_iterations() const {
    return static_cast<std::uint64_t>(std::floor(std::sqrt(static_cast<double>(N))));
}

}  // namespace qsm
