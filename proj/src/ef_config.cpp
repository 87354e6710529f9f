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

#include "fairline/ef_config.hpp"

#include <tuple>

#include "fairline/criteria.hpp"
#include "fairline/error.hpp"

namespace fairline {
namespace {

auto PlanKey(const TaxiPlan& p) {
  return std::make_tuple(p.riders, p.first_type, p.first_riders);
}

class ConfigurationWalker {
 public:
  ConfigurationWalker(const Instance& inst, const ConfigurationOptions& options,
                      const std::function<bool(const Configuration&)>& visit)
      : inst_(inst),
        options_(options),
        visit_(visit),
        types_(TypesOf(inst)),
        used_first_(types_.size(), 0) {
    cfg_.taxis.resize(inst.num_taxis());
    capacity_after_.assign(inst.num_taxis() + 1, 0);
    for (int i = inst.num_taxis() - 1; i >= 0; --i) {
      capacity_after_[i] = capacity_after_[i + 1] + inst.quota(i);
    }
  }

  long long Run() {
    Walk(0, inst_.num_agents());
    return visited_;
  }

 private:
  void Walk(int taxi, int left) {
    if (stopped_) return;
    if (left > capacity_after_[taxi]) return;
    if (taxi == inst_.num_taxis()) {
      if (left == 0 && ViolatedCondition(inst_, cfg_) == 0) Emit();
      return;
    }
    TaxiPlan& plan = cfg_.taxis[taxi];
    plan = TaxiPlan{};
    if (Admissible(taxi)) Walk(taxi + 1, left);
    const int max_riders = std::min(left, inst_.quota(taxi));
    for (int mu = 1; mu <= max_riders && !stopped_; ++mu) {
      for (int t = 0; t < types_.size() && !stopped_; ++t) {
        const int spare = types_.count[t] - used_first_[t];
        for (int r = 1; r <= std::min(mu, spare) && !stopped_; ++r) {
          plan = TaxiPlan{mu, t, r};
          if (!Admissible(taxi)) continue;
          used_first_[t] += r;
          Walk(taxi + 1, left - mu);
          used_first_[t] -= r;
        }
      }
    }
    plan = TaxiPlan{};
  }

  bool Admissible(int taxi) const {
    if (!options_.break_symmetry || taxi == 0) return true;
    if (inst_.quota(taxi) != inst_.quota(taxi - 1)) return true;
    return PlanKey(cfg_.taxis[taxi]) <= PlanKey(cfg_.taxis[taxi - 1]);
  }

  void Emit() {
    if (++visited_ > options_.max_configurations) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "more than " + std::to_string(options_.max_configurations) +
                      " configurations");
    }
    if (!visit_(cfg_)) stopped_ = true;
  }

  const Instance& inst_;
  const ConfigurationOptions& options_;
  const std::function<bool(const Configuration&)>& visit_;
  TypeSet types_;
  std::vector<int> used_first_;
  std::vector<int> capacity_after_;
  Configuration cfg_;
  long long visited_ = 0;
  bool stopped_ = false;
};

}  // namespace

Cost FirstStop(const TypeSet& types, const TaxiPlan& plan) {
  if (plan.unused()) return Cost::Infinity();
  return types.values.at(plan.first_type);
}

int ViolatedCondition(const Instance& inst, const Configuration& cfg) {
  const TypeSet types = TypesOf(inst);
  if (static_cast<int>(cfg.taxis.size()) != inst.num_taxis()) return 1;
  int total = 0;
  std::vector<int> first_by_type(types.size(), 0);
  for (std::size_t i = 0; i < cfg.taxis.size(); ++i) {
    const TaxiPlan& p = cfg.taxis[i];
    if (p.unused()) {
      if (p.riders != 0 || p.first_riders != 0) return 1;
      continue;
    }
    if (p.first_type < 0 || p.first_type >= types.size()) return 1;
    if (!(1 <= p.first_riders && p.first_riders <= p.riders &&
          p.riders <= inst.quota(static_cast<int>(i)))) {
      return 1;
    }
    total += p.riders;
    first_by_type[p.first_type] += p.first_riders;
  }
  if (total != inst.num_agents()) return 2;
  for (int t = 0; t < types.size(); ++t) {
    if (first_by_type[t] > types.count[t]) return 3;
  }
  // Condition 4 only needs checking at the last agent of each type.
  for (int t = 0; t < types.size(); ++t) {
    int slots = 0;
    for (const TaxiPlan& p : cfg.taxis) {
      if (p.unused()) continue;
      if (p.first_type < t) slots += p.riders;
      if (p.first_type == t) slots += p.first_riders;
    }
    if (types.first_agent[t] + types.count[t] > slots) return 4;
  }
  return 0;
}

long long EnumerateConfigurations(
    const Instance& inst, const ConfigurationOptions& options,
    const std::function<bool(const Configuration&)>& visit) {
  return ConfigurationWalker(inst, options, visit).Run();
}

std::vector<int> PlaceByConfiguration(const Instance& inst,
                                      const Configuration& cfg) {
  const TypeSet types = TypesOf(inst);
  const int k = inst.num_taxis();
  std::vector<std::vector<Rational>> seated(k);
  std::vector<int> taxi_of(inst.num_agents(), -1);
  for (int a = 0; a < inst.num_agents(); ++a) {
    const int t = types.type_of[a];
    int chosen = -1;
    for (int i = 0; i < k && chosen < 0; ++i) {
      const TaxiPlan& p = cfg.taxis[i];
      if (p.first_type == t &&
          static_cast<int>(seated[i].size()) < p.first_riders) {
        chosen = i;
      }
    }
    if (chosen < 0) {
      Cost best = Cost::Infinity();
      for (int i = 0; i < k; ++i) {
        const TaxiPlan& p = cfg.taxis[i];
        if (p.unused() || p.first_type >= t ||
            static_cast<int>(seated[i].size()) >= p.riders) {
          continue;
        }
        Cost c = Psi(seated[i], inst.x(a), p.riders);
        if (chosen < 0 || c < best) {
          chosen = i;
          best = std::move(c);
        }
      }
    }
    if (chosen < 0) continue;
    taxi_of[a] = chosen;
    seated[chosen].push_back(inst.x(a));
  }
  return taxi_of;
}

std::optional<Allocation> GreedyFromConfiguration(const Instance& inst,
                                                  const Configuration& cfg) {
  if (int c = ViolatedCondition(inst, cfg); c != 0) {
    throw Error(ErrorCode::kConfigurationInvalid,
                "condition " + std::to_string(c) + " fails");
  }
  const std::vector<int> taxi_of = PlaceByConfiguration(inst, cfg);
  Allocation alloc(inst.num_taxis());
  for (int a = 0; a < inst.num_agents(); ++a) {
    if (taxi_of[a] < 0) return std::nullopt;
    alloc[taxi_of[a]].push_back(a);
  }
  if (!IsFeasible(inst, alloc) || !CheckEnvyFree(inst, alloc).holds) {
    return std::nullopt;
  }
  return alloc;
}

std::optional<Allocation> SolveEfConstantTaxis(
    const Instance& inst, const ConfigurationOptions& options) {
  std::optional<Allocation> found;
  EnumerateConfigurations(inst, options, [&](const Configuration& cfg) {
    found = GreedyFromConfiguration(inst, cfg);
    return !found.has_value();
  });
  return found;
}

}  // namespace fairline
