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

// Envy-free allocations for a small number of taxis: guess each taxi's rider
// count, first drop-off point and how many riders leave there, then place the
// remaining agents greedily by locality.

#ifndef FAIRLINE_EF_CONFIG_HPP
#define FAIRLINE_EF_CONFIG_HPP

#include <functional>
#include <optional>
#include <vector>

#include "fairline/core.hpp"

namespace fairline {

struct TaxiPlan {
  static constexpr int kUnused = -1;

  int riders = 0;           // mu
  int first_type = kUnused;  // index into TypesOf(inst); kUnused means s = inf
  int first_riders = 0;     // r

  bool unused() const { return first_type == kUnused; }
  friend bool operator==(const TaxiPlan&, const TaxiPlan&) = default;
};

struct Configuration {
  std::vector<TaxiPlan> taxis;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// First drop-off point of a plan; infinity for unused taxis.
Cost FirstStop(const TypeSet& types, const TaxiPlan& plan);

// Checks the four consistency conditions; returns the 1-based index of the
// first violated condition or 0.
int ViolatedCondition(const Instance& inst, const Configuration& cfg);

struct ConfigurationOptions {
  long long max_configurations = 50'000'000;
  // Only yield configurations whose plans are nonincreasing across taxis of
  // equal capacity. Every envy-free allocation stays reachable because
  // permuting equal-capacity taxis preserves envy-freeness.
  bool break_symmetry = false;
};

// Visits every configuration (or the symmetry-reduced subset); return false
// to stop. Throws kBudgetExceeded past max_configurations.
long long EnumerateConfigurations(
    const Instance& inst, const ConfigurationOptions& options,
    const std::function<bool(const Configuration&)>& visit);

// Placement phase of the greedy, before the envy check. Leaves agents at -1
// only if the configuration admits no placement for them.
std::vector<int> PlaceByConfiguration(const Instance& inst,
                                      const Configuration& cfg);

// Greedy placement followed by the envy check. Throws kConfigurationInvalid
// when `cfg` violates a condition.
std::optional<Allocation> GreedyFromConfiguration(const Instance& inst,
                                                  const Configuration& cfg);

std::optional<Allocation> SolveEfConstantTaxis(
    const Instance& inst, const ConfigurationOptions& options = {
                              .max_configurations = 50'000'000,
                              .break_symmetry = true});

}  // namespace fairline

#endif  // FAIRLINE_EF_CONFIG_HPP
