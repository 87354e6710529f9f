// Copyright 2026 The Fairline Authors
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

// Consecutive envy-free allocations by dynamic programming over prefixes.
//
// Blocks are index ranges ordered along the line with nonincreasing sizes.
// Envy towards a later block reduces to the two agents meeting at each
// boundary. Envy towards an earlier block does not: an agent may prefer the
// seat of a non-boundary agent further left. It does factor per block,
// though, so the exact rule tracks one running minimum through the DP.

#ifndef FAIRLINE_EF_CONSECUTIVE_HPP
#define FAIRLINE_EF_CONSECUTIVE_HPP

#include <optional>
#include <span>

#include "fairline/core.hpp"

namespace fairline {

// Half-open range of sorted agent indices.
struct AgentRange {
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
};

// True iff the last agent of `left` and the first agent of `right` do not
// envy each other when each block rides alone. Throws kBlocksNotAdjacent
// unless both ranges are nonempty and left.end == right.begin.
bool BoundaryEnvyOk(const Instance& inst, AgentRange left, AgentRange right);

// Exact envy-freeness of adjacent blocks covering [0, n) in order with
// nonincreasing sizes, using only per-block quantities. Throws
// kBlocksNotAdjacent if the blocks do not tile a prefix in that shape.
bool BlocksEnvyFree(const Instance& inst, std::span<const AgentRange> blocks);

enum class ConsecutiveRule {
  kExact,         // boundary test to the right, running minimum to the left
  kBoundaryOnly,  // boundary agents only; can return allocations with envy
};

// Taxis past the last used block stay empty. Among several answers, prefers
// more taxis and then larger blocks from the back.
std::optional<Allocation> SolveEfConsecutive(
    const Instance& inst, ConsecutiveRule rule = ConsecutiveRule::kExact);

}  // namespace fairline

#endif  // FAIRLINE_EF_CONSECUTIVE_HPP
