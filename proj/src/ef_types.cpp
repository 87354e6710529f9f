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

#include "fairline/ef_types.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "fairline/criteria.hpp"
#include "fairline/error.hpp"

namespace fairline {
namespace {

class ForestWalker {
 public:
  ForestWalker(int p, long long budget,
               const std::function<bool(const StarForest&)>& visit)
      : budget_(budget), visit_(visit), children_(p, 0) {
    forest_.parent.assign(p, -1);
  }

  long long Run() {
    Walk(0);
    return count_;
  }

 private:
  bool Walk(int v) {
    const int p = static_cast<int>(forest_.parent.size());
    if (v == p) {
      if (++count_ > budget_) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "more than " + std::to_string(budget_) + " star-forests");
      }
      return visit_(forest_);
    }
    for (int u = -1; u < v; ++u) {
      // A non-root may carry a single child only.
      if (u >= 0 && forest_.parent[u] != -1 && children_[u] > 0) continue;
      forest_.parent[v] = u;
      if (u >= 0) ++children_[u];
      const bool go_on = Walk(v + 1);
      if (u >= 0) --children_[u];
      if (!go_on) return false;
    }
    forest_.parent[v] = -1;
    return true;
  }

  long long budget_;
  const std::function<bool(const StarForest&)>& visit_;
  StarForest forest_;
  std::vector<int> children_;
  long long count_ = 0;
};

bool DividesInRange(const ForestComponent& c, int lambda) {
  if (lambda < 1 || c.agents % lambda != 0) return false;
  if (c.out_degree() == 0) return true;
  const int longest = *std::max_element(c.path_agents.begin(),
                                        c.path_agents.end());
  return longest < lambda && lambda * c.out_degree() <= c.agents;
}

bool PathSizesDistinct(const ForestComponent& c) {
  std::set<int> seen(c.path_agents.begin(), c.path_agents.end());
  return seen.size() == c.path_agents.size();
}

}  // namespace

bool IsStarForest(const StarForest& forest) {
  const int p = static_cast<int>(forest.parent.size());
  std::vector<int> children(p, 0);
  for (int v = 0; v < p; ++v) {
    const int u = forest.parent[v];
    if (u < -1 || u >= v) return false;
    if (u >= 0) ++children[u];
  }
  for (int v = 0; v < p; ++v) {
    if (forest.parent[v] != -1 && children[v] > 1) return false;
  }
  return true;
}

std::vector<ForestComponent> Components(const StarForest& forest,
                                        const TypeSet& types) {
  const int p = static_cast<int>(forest.parent.size());
  std::vector<int> child(p, -1);
  std::vector<ForestComponent> out;
  std::vector<int> index_of_root(p, -1);
  for (int v = 0; v < p; ++v) {
    const int u = forest.parent[v];
    if (u == -1) {
      index_of_root[v] = static_cast<int>(out.size());
      ForestComponent c;
      c.root = v;
      c.agents = types.count[v];
      out.push_back(std::move(c));
    } else if (forest.parent[u] != -1) {
      child[u] = v;
    }
  }
  for (int v = 0; v < p; ++v) {
    const int u = forest.parent[v];
    if (u == -1 || forest.parent[u] != -1) continue;
    ForestComponent& c = out[index_of_root[u]];
    std::vector<int> path;
    int size = 0;
    for (int w = v; w != -1; w = child[w]) {
      path.push_back(w);
      size += types.count[w];
    }
    c.paths.push_back(std::move(path));
    c.path_agents.push_back(size);
    c.agents += size;
  }
  return out;
}

AllocationGraph BuildAllocationGraph(const Instance& inst,
                                     const Allocation& alloc) {
  ValidatePartition(inst, alloc);
  const TypeSet types = TypesOf(inst);
  const int p = types.size();
  std::set<std::pair<int, int>> edges;
  for (Coalition c : alloc) {
    std::sort(c.begin(), c.end());
    for (std::size_t m = 1; m < c.size(); ++m) {
      const int y = types.type_of[c[m - 1]];
      const int z = types.type_of[c[m]];
      if (y != z) edges.emplace(y, z);
    }
  }
  AllocationGraph graph;
  graph.num_types = p;
  graph.edges.assign(edges.begin(), edges.end());

  std::vector<int> in(p, 0), out(p, 0);
  StarForest forest;
  forest.parent.assign(p, -1);
  for (const auto& [y, z] : graph.edges) {
    ++out[y];
    ++in[z];
    forest.parent[z] = y;
  }
  graph.is_star_forest = true;
  for (int v = 0; v < p; ++v) {
    if (in[v] > 1 || (in[v] == 1 && out[v] > 1)) graph.is_star_forest = false;
  }
  if (graph.is_star_forest) graph.forest = std::move(forest);
  return graph;
}

long long EnumerateStarForests(
    int p, long long max_forests,
    const std::function<bool(const StarForest&)>& visit) {
  if (p < 0) throw std::invalid_argument("negative type count");
  return ForestWalker(p, max_forests, visit).Run();
}

std::string_view ShapeConditionName(ShapeCondition c) {
  switch (c) {
    case ShapeCondition::kDistinctPathSizes:
      return "distinct-path-sizes";
    case ShapeCondition::kTaxiCount:
      return "taxi-count";
    case ShapeCondition::kDivisorInRange:
      return "divisor-in-range";
    case ShapeCondition::kNonincreasing:
      return "nonincreasing-sizes";
    case ShapeCondition::kCapacity:
      return "capacity";
  }
  return "unknown";
}

std::optional<ShapeViolation> FirstShapeViolation(
    const Instance& inst, const std::vector<ForestComponent>& components,
    const SizeVector& lambda) {
  const int t = static_cast<int>(components.size());
  if (static_cast<int>(lambda.size()) != t) {
    throw std::invalid_argument("size vector length differs from components");
  }
  for (int j = 0; j < t; ++j) {
    if (!PathSizesDistinct(components[j])) {
      return ShapeViolation{ShapeCondition::kDistinctPathSizes, -1};
    }
  }
  // Compared as an exact fraction so a non-divisor cannot hide an overflow.
  Rational taxis = 0;
  for (int j = 0; j < t; ++j) {
    if (lambda[j] < 1) return ShapeViolation{ShapeCondition::kDivisorInRange, j};
    Rational share(components[j].agents, lambda[j]);
    share.canonicalize();
    taxis += share;
  }
  if (taxis > inst.num_taxis()) {
    return ShapeViolation{ShapeCondition::kTaxiCount, -1};
  }
  for (int j = 0; j < t; ++j) {
    if (!DividesInRange(components[j], lambda[j])) {
      return ShapeViolation{ShapeCondition::kDivisorInRange, j};
    }
  }
  for (int j = 1; j < t; ++j) {
    if (lambda[j - 1] < lambda[j]) {
      return ShapeViolation{ShapeCondition::kNonincreasing, j};
    }
  }
  int eta = 0;
  for (int j = 0; j < t; ++j) {
    eta += components[j].agents / lambda[j];
    if (lambda[j] > inst.quota(eta - 1)) {
      return ShapeViolation{ShapeCondition::kCapacity, j};
    }
  }
  return std::nullopt;
}

Realization Realize(const Instance& inst, const StarForest& forest,
                    const SizeVector& lambda) {
  if (!IsStarForest(forest)) {
    throw std::invalid_argument("not a star-forest");
  }
  const TypeSet types = TypesOf(inst);
  if (static_cast<int>(forest.parent.size()) != types.size()) {
    throw std::invalid_argument("forest and instance disagree on type count");
  }
  const std::vector<ForestComponent> components = Components(forest, types);
  if (lambda.size() != components.size()) {
    throw std::invalid_argument("size vector length differs from components");
  }
  for (std::size_t j = 0; j < components.size(); ++j) {
    if (!PathSizesDistinct(components[j])) {
      throw Error(ErrorCode::kConditionsViolated,
                  std::string(ShapeConditionName(
                      ShapeCondition::kDistinctPathSizes)) +
                      " at component " + std::to_string(j));
    }
    if (!DividesInRange(components[j], lambda[j])) {
      throw Error(ErrorCode::kConditionsViolated,
                  std::string(ShapeConditionName(
                      ShapeCondition::kDivisorInRange)) +
                      " at component " + std::to_string(j));
    }
  }

  Realization out;
  auto agents_of = [&](int type) {
    std::vector<int> v(types.count[type]);
    for (int m = 0; m < types.count[type]; ++m) v[m] = types.first_agent[type] + m;
    return v;
  };
  for (std::size_t j = 0; j < components.size(); ++j) {
    const ForestComponent& c = components[j];
    const std::vector<int> roots = agents_of(c.root);
    std::size_t next_root = 0;
    auto emit = [&](Coalition coalition) {
      std::sort(coalition.begin(), coalition.end());
      out.alloc.push_back(std::move(coalition));
      out.component_of_taxi.push_back(static_cast<int>(j));
    };
    for (std::size_t l = 0; l < c.paths.size(); ++l) {
      Coalition coalition;
      const int pad = lambda[j] - c.path_agents[l];
      for (int m = 0; m < pad; ++m) coalition.push_back(roots[next_root++]);
      for (int type : c.paths[l]) {
        for (int a : agents_of(type)) coalition.push_back(a);
      }
      emit(std::move(coalition));
    }
    while (next_root < roots.size()) {
      Coalition coalition(roots.begin() + next_root,
                          roots.begin() + next_root + lambda[j]);
      next_root += lambda[j];
      emit(std::move(coalition));
    }
  }
  while (static_cast<int>(out.alloc.size()) < inst.num_taxis()) {
    out.alloc.emplace_back();
    out.component_of_taxi.push_back(-1);
  }
  return out;
}

std::optional<Allocation> SolveEfFptTypes(const Instance& inst,
                                          const TypesSolverOptions& options,
                                          TypesSolverStats* stats) {
  const TypeSet types = TypesOf(inst);
  TypesSolverStats local;
  std::optional<Allocation> found;

  auto try_forest = [&](const StarForest& forest) {
    ++local.forests;
    const std::vector<ForestComponent> components = Components(forest, types);
    const int t = static_cast<int>(components.size());
    // Lambda_j is always {1..top[j]} restricted to valid sizes, so only the
    // maximum needs tracking.
    SizeVector top(t);
    for (int j = 0; j < t; ++j) top[j] = components[j].agents;
    int steps = 0;
    bool done = false;
    while (!done) {
      ++steps;
      const auto violation = FirstShapeViolation(inst, components, top);
      int drop = -1;
      if (violation) {
        if (violation->component < 0) break;
        drop = violation->component;
      } else {
        Realization r = Realize(inst, forest, top);
        const Allocation& alloc = r.alloc;
        const std::vector<int> taxi_of = TaxiAssignment(inst, alloc);
        for (int b = 0; b < inst.num_agents() && drop != 0; ++b) {
          const int j = r.component_of_taxi[taxi_of[b]];
          if (drop != -1 && j >= drop) continue;
          for (int a = 0; a < inst.num_agents(); ++a) {
            if (taxi_of[a] != taxi_of[b] && Envies(inst, alloc, a, b)) {
              drop = j;
              break;
            }
          }
        }
        if (drop == -1) {
          found = std::move(r.alloc);
          done = true;
          break;
        }
      }
      if (--top[drop] < 1) break;
    }
    local.lattice_steps += steps;
    local.max_steps_per_forest = std::max(local.max_steps_per_forest, steps);
    return !done;
  };

  EnumerateStarForests(types.size(), options.max_forests, try_forest);
  if (stats) *stats = local;
  return found;
}

}  // namespace fairline
