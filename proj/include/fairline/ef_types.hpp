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

// Envy-free allocations parameterized by the number of destination types.
//
// An envy-free allocation is pinned down (up to isomorphism) by its
// allocation graph, a star-forest over the types, and by one common coalition
// size per connected component. The solver walks every star-forest and, for
// each, descends the lattice of size vectors from the top.

#ifndef FAIRLINE_EF_TYPES_HPP
#define FAIRLINE_EF_TYPES_HPP

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fairline/core.hpp"

namespace fairline {

struct StarForest {
  // parent[v] is -1 for a root or a smaller type index. Edges point from
  // parent to child.
  std::vector<int> parent;

  friend bool operator==(const StarForest&, const StarForest&) = default;
};

// Edges ascend and every non-root has at most one child.
bool IsStarForest(const StarForest& forest);

struct ForestComponent {
  int root = -1;
  // Type indices of each path hanging off the root, root-adjacent first.
  std::vector<std::vector<int>> paths;
  int agents = 0;                 // |A in C_j|
  std::vector<int> path_agents;   // |A in C_j^l| per path

  int out_degree() const { return static_cast<int>(paths.size()); }
};

// Components ordered by ascending root type.
std::vector<ForestComponent> Components(const StarForest& forest,
                                        const TypeSet& types);

struct AllocationGraph {
  int num_types = 0;
  std::vector<std::pair<int, int>> edges;  // sorted (from, to) type indices
  bool is_star_forest = false;
  std::optional<StarForest> forest;        // set when is_star_forest
};

AllocationGraph BuildAllocationGraph(const Instance& inst,
                                     const Allocation& alloc);

// Visits every star-forest on p labelled types; return false to stop.
// Throws kBudgetExceeded after max_forests.
long long EnumerateStarForests(
    int p, long long max_forests,
    const std::function<bool(const StarForest&)>& visit);

// Common coalition size per component.
using SizeVector = std::vector<int>;

enum class ShapeCondition {
  kDistinctPathSizes,  // path agent counts differ within a component
  kTaxiCount,          // sum of |A in C_j| / lambda_j <= k
  kDivisorInRange,     // lambda_j | |A in C_j|, max path < lambda_j <= |A|/d_j
  kNonincreasing,      // lambda_1 >= ... >= lambda_t
  kCapacity,           // lambda_j <= capacity of the last taxi of component j
};

std::string_view ShapeConditionName(ShapeCondition c);

struct ShapeViolation {
  ShapeCondition condition;
  int component = -1;  // -1 for the whole-forest conditions
};

// Checks in the order the solver does and reports the first failure.
std::optional<ShapeViolation> FirstShapeViolation(
    const Instance& inst, const std::vector<ForestComponent>& components,
    const SizeVector& lambda);

struct Realization {
  Allocation alloc;
  std::vector<int> component_of_taxi;  // -1 for unused taxis
};

// Canonical allocation for (forest, lambda): per component, one coalition per
// path padded with root-type agents, the rest pure root-type; components take
// consecutive taxis. Throws kConditionsViolated if the path sizes repeat or a
// size is not a proper divisor in range.
Realization Realize(const Instance& inst, const StarForest& forest,
                    const SizeVector& lambda);
inline Allocation RealizeAllocation(const Instance& inst,
                                    const StarForest& forest,
                                    const SizeVector& lambda) {
  return Realize(inst, forest, lambda).alloc;
}

struct TypesSolverOptions {
  long long max_forests = 10'000'000;
};

struct TypesSolverStats {
  long long forests = 0;
  long long lattice_steps = 0;
  int max_steps_per_forest = 0;
};

std::optional<Allocation> SolveEfFptTypes(const Instance& inst,
                                          const TypesSolverOptions& options = {},
                                          TypesSolverStats* stats = nullptr);

}  // namespace fairline

#endif  // FAIRLINE_EF_TYPES_HPP
