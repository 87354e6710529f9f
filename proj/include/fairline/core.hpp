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

// Domain types, exact arithmetic and the Shapley cost engine.
//
// Agents are indexed 0..n-1 in nondecreasing order of destination and taxis
// 0..k-1 in nonincreasing order of capacity; `Instance` keeps the permutations
// back to the caller's original numbering.

#ifndef FAIRLINE_CORE_HPP
#define FAIRLINE_CORE_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fairline {

using Rational = mpq_class;

// Accepts "7", "-3/6", "2.75". Always returns a canonical value.
Rational ParseRational(std::string_view text);
std::string ToString(const Rational& value);

// A payment: an exact rational or the symbolic infinity charged to riders of
// an over-full taxi.
class Cost {
 public:
  Cost() = default;  // zero
  Cost(Rational value) : value_(std::move(value)) {}  // NOLINT
  Cost(long value) : value_(value) {}                 // NOLINT

  static Cost Infinity() {
    Cost c;
    c.value_.reset();
    return c;
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  // Precondition: is_finite().
  const Rational& value() const;

  Cost& operator+=(const Cost& other);
  friend Cost operator+(Cost lhs, const Cost& rhs) { return lhs += rhs; }

  friend bool operator==(const Cost& a, const Cost& b);
  friend std::strong_ordering operator<=>(const Cost& a, const Cost& b);

 private:
  std::optional<Rational> value_ = Rational(0);
};

std::string ToString(const Cost& cost);  // "p/q" or "inf"

// Sorted agent indices riding one taxi; empty means the taxi is unused.
using Coalition = std::vector<int>;
// Coalition i rides taxi i.
using Allocation = std::vector<Coalition>;

class Instance {
 public:
  // Sorts agents by destination and taxis by capacity (both stable) and keeps
  // the permutations. Throws kEmptyInput, kNonPositiveDestination,
  // kNonPositiveCapacity.
  static Instance Load(std::span<const Rational> raw_destinations,
                       std::span<const int> raw_capacities);

  int num_agents() const { return static_cast<int>(destinations_.size()); }
  int num_taxis() const { return static_cast<int>(capacities_.size()); }

  const std::vector<Rational>& destinations() const { return destinations_; }
  const std::vector<int>& capacities() const { return capacities_; }
  const Rational& x(int agent) const { return destinations_[agent]; }
  // Capacity of `taxi`; 0 for indices past the last taxi so that any
  // coalition placed there costs infinity.
  int quota(int taxi) const;
  long total_capacity() const;

  // agent_ids()[a] is the 0-based position of sorted agent a in the raw input.
  const std::vector<int>& agent_ids() const { return agent_ids_; }
  const std::vector<int>& taxi_ids() const { return taxi_ids_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Rational> destinations_;
  std::vector<int> capacities_;
  std::vector<int> agent_ids_;
  std::vector<int> taxi_ids_;
};

// Distinct destinations ("types") of an instance. Agents of one type occupy
// the contiguous index range [first_agent[t], first_agent[t] + count[t]).
struct TypeSet {
  std::vector<Rational> values;
  std::vector<int> count;
  std::vector<int> first_agent;
  std::vector<int> type_of;  // per agent

  int size() const { return static_cast<int>(values.size()); }
};

TypeSet TypesOf(const Instance& inst);

inline Instance LoadInstance(std::span<const Rational> raw_destinations,
                             std::span<const int> raw_capacities) {
  return Instance::Load(raw_destinations, raw_capacities);
}

// Throws kNotAPartition unless every agent appears in exactly one coalition.
void ValidatePartition(const Instance& inst, const Allocation& alloc);

// Sorted members, padded with empty coalitions up to k. Validates first.
Allocation Canonicalize(const Instance& inst, Allocation alloc);

// taxi_of[a] for every agent. Validates first.
std::vector<int> TaxiAssignment(const Instance& inst, const Allocation& alloc);

bool IsFeasible(const Instance& inst, const Allocation& alloc);

std::vector<Rational> DestinationsOf(const Instance& inst,
                                     const Coalition& coalition);

// Shapley payment at point x for a coalition given by its members'
// destinations: the integral of 1/n_T(r) over (0, x], evaluated as an exact
// segment sum. Infinity when no member rides as far as x.
Cost Phi(std::span<const Rational> destinations, const Rational& x);

// Phi with the capacity rule of taxi `taxi`.
Cost PhiCapacitated(const Instance& inst, int taxi, const Coalition& coalition,
                    const Rational& x);

// Cost at x of a taxi that will carry `mu` riders of which `prefix` are the
// ones already known; the other mu - |prefix| ride at least to x.
Cost Psi(std::span<const Rational> prefix, const Rational& x, int mu);

// Literal Shapley value of member `position` (0-based, into `destinations`)
// under c(T) = max x (infinity above quota), averaged over all join orders.
// Exponential; limited to 8 members.
Cost ShapleyPermutationOracle(std::span<const Rational> destinations, int quota,
                              int position);

Cost AgentCost(const Instance& inst, const Allocation& alloc, int agent);
std::vector<Cost> AgentCosts(const Instance& inst, const Allocation& alloc);

// Sum of last drop-off points; infinity if any coalition exceeds its quota.
Cost TotalCost(const Instance& inst, const Allocation& alloc);

}  // namespace fairline

#endif  // FAIRLINE_CORE_HPP
