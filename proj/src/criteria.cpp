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

#include "fairline/criteria.hpp"

#include <algorithm>
#include <map>

#include "fairline/backward.hpp"
#include "fairline/error.hpp"

namespace fairline {
namespace {

// Everything the pairwise checks reuse: who sits where and what they pay.
struct Seating {
  std::vector<int> taxi_of;
  std::vector<Cost> cost;

  Seating(const Instance& inst, const Allocation& alloc)
      : taxi_of(TaxiAssignment(inst, alloc)), cost(AgentCosts(inst, alloc)) {}
};

std::optional<EnvyWitness> FindEnvy(const Instance& inst,
                                    const Allocation& alloc,
                                    const Seating& seating, int a, int b) {
  const int i = seating.taxi_of[a];
  const int j = seating.taxi_of[b];
  if (i == j) return std::nullopt;
  Cost replaced = SeatCost(inst, alloc, j, a, b);
  if (replaced < seating.cost[a]) {
    return EnvyWitness{a, b, seating.cost[a], std::move(replaced)};
  }
  return std::nullopt;
}

}  // namespace

Cost SeatCost(const Instance& inst, const Allocation& alloc, int taxi,
              int agent, int replaced) {
  if (taxi < 0 || taxi >= inst.num_taxis()) return Cost::Infinity();
  std::vector<Rational> dests;
  if (taxi < static_cast<int>(alloc.size())) {
    for (int m : alloc[taxi]) {
      if (m != replaced && m != agent) dests.push_back(inst.x(m));
    }
  }
  dests.push_back(inst.x(agent));
  if (static_cast<int>(dests.size()) > inst.quota(taxi)) {
    return Cost::Infinity();
  }
  return Phi(dests, inst.x(agent));
}

bool Envies(const Instance& inst, const Allocation& alloc, int a, int b) {
  const Seating seating(inst, alloc);
  return FindEnvy(inst, alloc, seating, a, b).has_value();
}

CheckResult<EnvyWitness> CheckEnvyFree(const Instance& inst,
                                       const Allocation& alloc) {
  const Seating seating(inst, alloc);
  for (int a = 0; a < inst.num_agents(); ++a) {
    for (int b = 0; b < inst.num_agents(); ++b) {
      if (auto w = FindEnvy(inst, alloc, seating, a, b)) {
        return {false, std::move(w)};
      }
    }
  }
  return {};
}

CheckResult<DeviationWitness> CheckNashStable(const Instance& inst,
                                              const Allocation& alloc) {
  const Seating seating(inst, alloc);
  for (int a = 0; a < inst.num_agents(); ++a) {
    const int from = seating.taxi_of[a];
    for (int to = 0; to < inst.num_taxis(); ++to) {
      if (to == from) continue;
      Cost moved = SeatCost(inst, alloc, to, a, -1);
      if (moved < seating.cost[a]) {
        return {false, DeviationWitness{a, from, to, seating.cost[a],
                                        std::move(moved)}};
      }
    }
  }
  return {};
}

CheckResult<SwapWitness> CheckSwapStable(const Instance& inst,
                                         const Allocation& alloc,
                                         SwapMode mode) {
  const Seating seating(inst, alloc);
  for (int a = 0; a < inst.num_agents(); ++a) {
    for (int b = 0; b < inst.num_agents(); ++b) {
      auto forward = FindEnvy(inst, alloc, seating, a, b);
      if (!forward) continue;
      Cost back = SeatCost(inst, alloc, seating.taxi_of[a], b, a);
      const bool violated = mode == SwapMode::kWeak
                                ? back < seating.cost[b]
                                : back <= seating.cost[b];
      if (violated) {
        return {false,
                SwapWitness{std::move(*forward), seating.cost[b], back}};
      }
    }
  }
  return {};
}

bool CheckSociallyOptimal(const Instance& inst, const Allocation& alloc) {
  ValidatePartition(inst, alloc);
  if (inst.total_capacity() < inst.num_agents()) {
    throw Error(ErrorCode::kInfeasible,
                "total capacity below the number of agents");
  }
  return TotalCost(inst, alloc) == TotalCost(inst, BackwardGreedy(inst));
}

bool CheckConsecutive(const Instance& inst, const Allocation& alloc) {
  ValidatePartition(inst, alloc);
  struct Span {
    Rational lo, hi;
  };
  std::vector<Span> spans;
  for (const auto& coalition : alloc) {
    if (coalition.empty()) continue;
    Span s{inst.x(coalition.front()), inst.x(coalition.front())};
    for (int a : coalition) {
      s.lo = std::min<Rational>(s.lo, inst.x(a));
      s.hi = std::max<Rational>(s.hi, inst.x(a));
    }
    spans.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < spans.size(); ++i) {
    for (std::size_t j = i + 1; j < spans.size(); ++j) {
      if (!(spans[i].hi <= spans[j].lo || spans[i].lo >= spans[j].hi)) {
        return false;
      }
    }
  }
  return true;
}

bool CheckSplitConditions(const Instance& inst, const Allocation& alloc) {
  ValidatePartition(inst, alloc);
  // Per coalition: count of each type, plus size.
  std::vector<std::map<Rational, int>> types(alloc.size());
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    for (int a : alloc[i]) ++types[i][inst.x(a)];
  }
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    for (std::size_t j = i + 1; j < alloc.size(); ++j) {
      for (const auto& [x, count_i] : types[i]) {
        auto it = types[j].find(x);
        if (it == types[j].end()) continue;
        const int count_j = it->second;
        // (i) x is the first drop-off in both.
        if (types[i].begin()->first != x || types[j].begin()->first != x) {
          return false;
        }
        // (ii) equal sizes.
        if (alloc[i].size() != alloc[j].size()) return false;
        // (iii) equal split counts force both taxis to be pure type x.
        if (count_i == count_j &&
            (types[i].size() != 1 || types[j].size() != 1)) {
          return false;
        }
      }
    }
  }
  return true;
}

CheckResult<EnvyWitness> CheckEnvyFreeInGroups(
    const Instance& inst, const Allocation& alloc,
    const std::vector<std::vector<int>>& groups) {
  std::vector<int> group_of(inst.num_agents(), -1);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int a : groups[g]) {
      if (a < 0 || a >= inst.num_agents() || group_of[a] != -1) {
        throw Error(ErrorCode::kGroupsNotAPartition,
                    "agent " + std::to_string(a) +
                        " is out of range or in two groups");
      }
      group_of[a] = static_cast<int>(g);
    }
  }
  if (std::count(group_of.begin(), group_of.end(), -1) != 0) {
    throw Error(ErrorCode::kGroupsNotAPartition, "some agent has no group");
  }
  const Seating seating(inst, alloc);
  for (int a = 0; a < inst.num_agents(); ++a) {
    for (int b = 0; b < inst.num_agents(); ++b) {
      if (group_of[a] != group_of[b]) continue;
      if (auto w = FindEnvy(inst, alloc, seating, a, b)) {
        return {false, std::move(w)};
      }
    }
  }
  return {};
}

ConceptReport Evaluate(const Instance& inst, const Allocation& alloc,
                       const ConceptSet& which,
                       const std::vector<std::vector<int>>* groups) {
  ConceptReport report;
  report.feasible = IsFeasible(inst, alloc);
  if (which.ef) {
    auto r = CheckEnvyFree(inst, alloc);
    report.ef = r.holds;
    report.ef_witness = std::move(r.witness);
  }
  if (which.ns) {
    auto r = CheckNashStable(inst, alloc);
    report.ns = r.holds;
    report.ns_witness = std::move(r.witness);
  }
  if (which.wss) {
    auto r = CheckSwapStable(inst, alloc, SwapMode::kWeak);
    report.wss = r.holds;
    report.wss_witness = std::move(r.witness);
  }
  if (which.sss) {
    auto r = CheckSwapStable(inst, alloc, SwapMode::kStrong);
    report.sss = r.holds;
    report.sss_witness = std::move(r.witness);
  }
  if (which.so) {
    report.so = inst.total_capacity() >= inst.num_agents() &&
                CheckSociallyOptimal(inst, alloc);
  }
  if (which.consecutive) report.consecutive = CheckConsecutive(inst, alloc);
  if (which.split) report.split_conditions = CheckSplitConditions(inst, alloc);
  if (groups != nullptr) {
    auto r = CheckEnvyFreeInGroups(inst, alloc, *groups);
    report.ef_in_groups = r.holds;
    report.ef_in_groups_witness = std::move(r.witness);
  }
  return report;
}

bool Satisfies(const Instance& inst, const Allocation& alloc, Concept c) {
  switch (c) {
    case Concept::kEnvyFree: return CheckEnvyFree(inst, alloc).holds;
    case Concept::kNashStable: return CheckNashStable(inst, alloc).holds;
    case Concept::kWeakSwapStable:
      return CheckSwapStable(inst, alloc, SwapMode::kWeak).holds;
    case Concept::kStrongSwapStable:
      return CheckSwapStable(inst, alloc, SwapMode::kStrong).holds;
    case Concept::kSociallyOptimal:
      return CheckSociallyOptimal(inst, alloc);
    case Concept::kConsecutive: return CheckConsecutive(inst, alloc);
    case Concept::kSplitConditions: return CheckSplitConditions(inst, alloc);
  }
  return false;
}

}  // namespace fairline
