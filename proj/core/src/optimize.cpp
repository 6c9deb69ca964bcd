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

#include "qsm/optimize.hpp"

#include <optional>
#include <vector>

namespace qsm {

namespace {

Circuit cancel_impl(const Circuit &c, std::optional<std::size_t> boundary) {
    // live[i] marks surviving gates; touching[q] is the stack of surviving gate
    // indices on wire q, most recent on top.
    const auto &gates = c.gates();
    std::vector<bool> live(gates.size(), false);
    std::vector<std::vector<std::size_t>> touching(c.width());

    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        bool found = false;
        std::size_t latest = 0;
        for (Qubit q : g.qubits) {
            if (!touching[q].empty() && (!found || touching[q].back() > latest)) {
                latest = touching[q].back();
                found = true;
            }
        }
        if (found) {
            const Gate &prev = gates[latest];
            bool straddles = !boundary || (latest < *boundary && i >= *boundary);
            if (straddles && prev.qubits == g.qubits && prev.inverse() == g) {
                // prev sits on top of every stack it belongs to.
                for (Qubit q : prev.qubits) {
                    touching[q].pop_back();
                }
                live[latest] = false;
                continue;
            }
        }
        live[i] = true;
        for (Qubit q : g.qubits) {
            touching[q].push_back(i);
        }
    }

    Circuit out(c.width(), c.layout());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (live[i]) {
            out.append(gates[i]);
        }
    }
    return out;
}

}  // namespace

Circuit cancel_inverse_pairs(const Circuit &c) {
    return cancel_impl(c, std::nullopt);
}

Circuit cancel_inverse_pairs_across(const Circuit &c, std::size_t boundary) {
    return cancel_impl(c, boundary);
}

}  // namespace qsm
