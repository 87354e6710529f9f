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

// Checkers for the fairness, stability and efficiency concepts, each
// returning the lexicographically smallest witness when the check fails.
// All checkers evaluate infeasible allocations too, through the infinity
// semantics of the capacitated cost.

#ifndef FAIRLINE_CRITERIA_HPP
#define FAIRLINE_CRITERIA_HPP

#include <optional>
#include <vector>

#include "fairline/core.hpp"

namespace fairline {

// `envier` would strictly gain by taking `envied`'s seat.
struct EnvyWitness {
  int envier = -1;
  int envied = -1;
  Cost envier_cost;    // current payment of the envier
  Cost replaced_cost;  // what the envier would pay in the envied agent's seat

  friend bool operator==(const EnvyWitness&, const EnvyWitness&) = default;
};

struct DeviationWitness {
  int agent = -1;
  int from_taxi = -1;
  int to_taxi = -1;
  Cost old_cost;
  Cost new_cost;

  friend bool operator==(const DeviationWitness&, const DeviationWitness&) = default;
};

// For weak swap stability: first envies second and second envies first.
// For strong swap stability: first envies second and second can replace
// first (the reverse cost is not larger than its current one).
struct SwapWitness {
  EnvyWitness forward;
  Cost reverse_current;
  Cost reverse_replaced;

  friend bool operator==(const SwapWitness&, const SwapWitness&) = default;
};

template <typename Witness>
struct CheckResult {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return holds; }
};

enum class SwapMode { kWeak, kStrong };

// Cost to `agent` of sitting in `taxi` in place of `replaced` (or added to it
// when `replaced` is -1), everything else unchanged.
Cost SeatCost(const Instance& inst, const Allocation& alloc, int taxi,
              int agent, int replaced);

// Does a (currently in its own taxi) strictly prefer b's seat?
bool Envies(const Instance& inst, const Allocation& alloc, int a, int b);

CheckResult<EnvyWitness> CheckEnvyFree(const Instance& inst,
                                       const Allocation& alloc);
CheckResult<DeviationWitness> CheckNashStable(const Instance& inst,
                                              const Allocation& alloc);
CheckResult<SwapWitness> CheckSwapStable(const Instance& inst,
                                         const Allocation& alloc,
                                         SwapMode mode);
// Compares against the backward greedy optimum; throws kInfeasible when no
// feasible allocation exists at all.
bool CheckSociallyOptimal(const Instance& inst, const Allocation& alloc);
bool CheckConsecutive(const Instance& inst, const Allocation& alloc);
bool CheckSplitConditions(const Instance& inst, const Allocation& alloc);
// Envy restricted to pairs inside one group. `groups` must partition the
// agents (kGroupsNotAPartition otherwise).
CheckResult<EnvyWitness> CheckEnvyFreeInGroups(
    const Instance& inst, const Allocation& alloc,
    const std::vector<std::vector<int>>& groups);

enum class Concept {
  kEnvyFree,
  kNashStable,
  kWeakSwapStable,
  kStrongSwapStable,
  kSociallyOptimal,
  kConsecutive,
  kSplitConditions,
};

struct ConceptSet {
  bool ef = true;
  bool ns = true;
  bool wss = true;
  bool sss = true;
  bool so = true;
  bool consecutive = true;
  bool split = true;

  static ConceptSet All() { return {}; }
  static ConceptSet None() {
    return {false, false, false, false, false, false, false};
  }
};

// Flags are only meaningful for the concepts that were requested; the rest
// stay empty.
struct ConceptReport {
  bool feasible = false;
  std::optional<bool> ef;
  std::optional<bool> ns;
  std::optional<bool> wss;
  std::optional<bool> sss;
  std::optional<bool> so;
  std::optional<bool> consecutive;
  std::optional<bool> split_conditions;
  std::optional<bool> ef_in_groups;

  std::optional<EnvyWitness> ef_witness;
  std::optional<DeviationWitness> ns_witness;
  std::optional<SwapWitness> wss_witness;
  std::optional<SwapWitness> sss_witness;
  std::optional<EnvyWitness> ef_in_groups_witness;

  friend bool operator==(const ConceptReport&, const ConceptReport&) = default;
};

ConceptReport Evaluate(const Instance& inst, const Allocation& alloc,
                       const ConceptSet& which = ConceptSet::All(),
                       const std::vector<std::vector<int>>* groups = nullptr);

bool Satisfies(const Instance& inst, const Allocation& alloc, Concept c);

}  // namespace fairline

#endif  // FAIRLINE_CRITERIA_HPP
