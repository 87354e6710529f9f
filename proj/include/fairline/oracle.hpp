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

// Exhaustive ground truth for desk-scale instances.

#ifndef FAIRLINE_ORACLE_HPP
#define FAIRLINE_ORACLE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fairline/core.hpp"
#include "fairline/criteria.hpp"

namespace fairline {

struct EnumerationBudget {
  int max_agents = 9;
  long long max_allocations = 20'000'000;
  // One representative per isomorphism class: same per-taxi type counts up
  // to a permutation of equal-capacity taxis.
  bool dedup_by_isomorphism = false;
  // Stop searches at the first match; `count` is then 0 or 1.
  bool stop_at_first = false;
};

struct OracleAnswer {
  bool exists = false;
  std::optional<Allocation> witness;
  std::optional<Cost> optimum;  // socially optimal queries only
  long long count = 0;
};

// Return false from the visitor to stop early.
using AllocationVisitor = std::function<bool(const Allocation&)>;

// Visits every feasible allocation (k coalitions, empties allowed) exactly
// once, or one per isomorphism class with dedup on. Returns the number
// visited. Throws kBudgetExceeded when n exceeds the budget or more than
// max_allocations would be produced.
long long EnumerateFeasible(const Instance& inst,
                            const EnumerationBudget& budget,
                            const AllocationVisitor& visit);

std::vector<Allocation> CollectFeasible(const Instance& inst,
                                        const EnumerationBudget& budget);

// Canonical form used for dedup: sorted (quota, per-type counts) per taxi.
std::string IsomorphismKey(const Instance& inst, const Allocation& alloc);

OracleAnswer OracleSearch(
    const Instance& inst,
    const std::function<bool(const Allocation&)>& predicate,
    const EnumerationBudget& budget);

// For kSociallyOptimal the optimum is the minimum total cost over the
// enumeration and `count` is the number of allocations attaining it.
OracleAnswer OracleExists(const Instance& inst, Concept predicate,
                          const EnumerationBudget& budget);

}  // namespace fairline

#endif  // FAIRLINE_ORACLE_HPP
