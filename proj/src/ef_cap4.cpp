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

#include "fairline/ef_cap4.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairline/criteria.hpp"
#include "fairline/error.hpp"

namespace fairline {
namespace {

void RequireSmallCapacities(const Instance& inst) {
  if (inst.capacities().front() > 4) {
    throw Error(ErrorCode::kCapacityTooLarge,
                "largest capacity is " +
                    std::to_string(inst.capacities().front()) + " > 4");
  }
}

void Profiles(const Instance& inst, int taxi, int left, int ceiling,
              SizeProfile& current, std::vector<SizeProfile>& out) {
  if (taxi == inst.num_taxis()) {
    if (left == 0) out.push_back(current);
    return;
  }
  const int hi = std::min({ceiling, inst.quota(taxi), left});
  for (int mu = hi; mu >= 0; --mu) {
    // The rest can hold at most mu per taxi.
    if (left - mu > mu * (inst.num_taxis() - taxi - 1)) break;
    current[taxi] = mu;
    Profiles(inst, taxi + 1, left - mu, mu, current, out);
  }
  current[taxi] = 0;
}

}  // namespace

std::vector<SizeProfile> EnumerateSizeProfiles(const Instance& inst) {
  RequireSmallCapacities(inst);
  std::vector<SizeProfile> out;
  SizeProfile current(inst.num_taxis(), 0);
  Profiles(inst, 0, inst.num_agents(), inst.quota(0), current, out);
  return out;
}

SplitPattern SplitPatternFor(int first_taxi_size, int type_count,
                             int next_taxi_size) {
  if (first_taxi_size < 1 || first_taxi_size > 4 || type_count < 1) {
    throw std::invalid_argument("split pattern needs size 1..4, count >= 1");
  }
  SplitPattern pattern(type_count / first_taxi_size, first_taxi_size);
  const int rest = type_count % first_taxi_size;
  if (first_taxi_size == 4 && rest == 3 && next_taxi_size == 4) {
    pattern.push_back(2);
    pattern.push_back(1);
  } else if (rest > 0) {
    pattern.push_back(rest);
  }
  return pattern;
}

Allocation GreedyForProfile(const Instance& inst, const SizeProfile& mu) {
  const int k = inst.num_taxis();
  const int n = inst.num_agents();
  Allocation alloc(k);
  std::vector<std::vector<Rational>> seated(k);
  for (int a = 0; a < n; ++a) {
    int best_taxi = -1;
    Cost best;
    for (int i = 0; i < k; ++i) {
      if (static_cast<int>(alloc[i].size()) >= mu[i]) continue;
      Cost c = Psi(seated[i], inst.x(a), mu[i]);
      if (best_taxi < 0 || c < best) {
        best_taxi = i;
        best = std::move(c);
      }
    }
    if (best_taxi < 0) break;  // profile does not sum to n
    int target = best_taxi;
    // Two same-type riders already in a 4-seat taxi followed by another
    // 4-seat taxi, and a closes its type: a opens the next taxi instead,
    // which yields the (..., 2, 1) tail.
    const int next = best_taxi + 1;
    const bool closes_type = a + 1 == n || inst.x(a) < inst.x(a + 1);
    if (next < k && mu[best_taxi] == 4 && mu[next] == 4 &&
        alloc[best_taxi].size() == 2 && closes_type &&
        inst.x(alloc[best_taxi][0]) == inst.x(a) &&
        inst.x(alloc[best_taxi][1]) == inst.x(a) &&
        static_cast<int>(alloc[next].size()) < mu[next]) {
      target = next;
    }
    alloc[target].push_back(a);
    seated[target].push_back(inst.x(a));
  }
  return alloc;
}

std::optional<Allocation> SolveEfCap4(const Instance& inst) {
  RequireSmallCapacities(inst);
  const int n = inst.num_agents();
  if (inst.num_taxis() >= n) {
    Allocation singletons(inst.num_taxis());
    for (int a = 0; a < n; ++a) singletons[a] = {a};
    return singletons;
  }
  for (const SizeProfile& mu : EnumerateSizeProfiles(inst)) {
    Allocation alloc = GreedyForProfile(inst, mu);
    if (IsFeasible(inst, alloc) && CheckEnvyFree(inst, alloc).holds) {
      return alloc;
    }
  }
  return std::nullopt;
}

}  // namespace fairline
