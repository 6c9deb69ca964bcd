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

#include <cstddef>

#include "qsm/circuit.hpp"

namespace qsm {

/// Removes gate/inverse pairs acting on identical qubit lists. A gate may slide
/// left past gates whose support is disjoint from its own; nothing else
/// commutes. Removals cascade, so the result has no such pair left.
Circuit cancel_inverse_pairs(const Circuit &c);

/// As above, but a pair is removed only when its first gate sits before
/// `boundary` and its second gate at or after it.
Circuit cancel_inverse_pairs_across(const Circuit &c, std::size_t boundary);

}  // namespace qsm
