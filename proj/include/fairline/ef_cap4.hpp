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

// Envy-free allocations when every taxi seats at most four riders.

#ifndef FAIRLINE_EF_CAP4_HPP
#define FAIRLINE_EF_CAP4_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fairline/core.hpp"

namespace fairline {

// Rider count per taxi: nonincreasing, within capacity, summing to n.
using SizeProfile = std::vector<int>;
// Riders of one type per consecutive taxi, in nonincreasing order.
using SplitPattern = std::vector<int>;

// All size profiles in lexicographically decreasing order. Throws
// kCapacityTooLarge if some capacity exceeds 4.
std::vector<SizeProfile> EnumerateSizeProfiles(const Instance& inst);

// The only split pattern an envy-free allocation can show for a type with
// `type_count` agents whose first taxi seats `first_taxi_size` riders.
// `next_taxi_size` is the size of the taxi ceil(type_count / 4) positions
// after that first taxi; it only matters for size 4 and count 3 mod 4.
SplitPattern SplitPatternFor(int first_taxi_size, int type_count,
                             int next_taxi_size);

// Greedy placement for one profile (no envy check).
Allocation GreedyForProfile(const Instance& inst, const SizeProfile& mu);

std::optional<Allocation> SolveEfCap4(const Instance& inst);

}  // namespace fairline

#endif  // FAIRLINE_EF_CAP4_HPP
