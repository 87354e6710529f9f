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

#include "fairline/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "fairline/error.hpp"

namespace fairline {
namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

std::vector<Rational> Sorted(std::span<const Rational> values) {
  std::vector<Rational> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  return out;
}

Cost PhiSorted(std::span<const Rational> sorted, const Rational& x) {
  if (sgn(x) <= 0) {
    throw Error(ErrorCode::kNonPositivePoint, "phi needs x > 0");
  }
  Rational acc = 0;
  Rational prev = 0;
  std::size_t remaining = sorted.size();
  std::size_t i = 0;
  while (i < sorted.size()) {
    const Rational& d = sorted[i];
    if (d >= x) {
      acc += (x - prev) / Rational(static_cast<long>(remaining));
      return acc;
    }
    acc += (d - prev) / Rational(static_cast<long>(remaining));
    prev = d;
    while (i < sorted.size() && sorted[i] == prev) {
      ++i;
      --remaining;
    }
  }
  return Cost::Infinity();
}

}  // namespace

Rational ParseRational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorCode::kParseError,
                "not a rational: '" + std::string(text) + "'");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) return fail();
    mpz_class d{std::string(den), 10};
    if (d == 0) return fail();
    out = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if ((!whole.empty() && !AllDigits(whole)) ||
        (!frac.empty() && !AllDigits(frac))) {
      return fail();
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    // Base 10 explicitly: GMP would read a leading zero as octal.
    mpz_class digits{std::string(whole) + std::string(frac), 10};
    out = Rational(digits, scale);
  } else {
    if (!AllDigits(body)) return fail();
    out = Rational(mpz_class(std::string(body), 10));
  }
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

std::string ToString(const Rational& value) { return value.get_str(); }

const Rational& Cost::value() const {
  if (!value_) throw std::logic_error("Cost::value() on infinity");
  return *value_;
}

Cost& Cost::operator+=(const Cost& other) {
  if (is_infinite() || other.is_infinite()) {
    value_.reset();
  } else {
    *value_ += *other.value_;
  }
  return *this;
}

bool operator==(const Cost& a, const Cost& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return a.is_infinite() && b.is_infinite();
  }
  return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
  if (a.is_infinite()) {
    return b.is_infinite() ? std::strong_ordering::equal
                           : std::strong_ordering::greater;
  }
  if (b.is_infinite()) return std::strong_ordering::less;
  return cmp(*a.value_, *b.value_) <=> 0;
}

std::string ToString(const Cost& cost) {
  return cost.is_infinite() ? "inf" : ToString(cost.value());
}

Instance Instance::Load(std::span<const Rational> raw_destinations,
                        std::span<const int> raw_capacities) {
  if (raw_destinations.empty() || raw_capacities.empty()) {
    throw Error(ErrorCode::kEmptyInput, "need at least one agent and taxi");
  }
  // GMP comparisons assume canonical form, which raw (p, q) constructors
  // do not guarantee.
  std::vector<Rational> dests(raw_destinations.begin(), raw_destinations.end());
  for (std::size_t i = 0; i < dests.size(); ++i) {
    dests[i].canonicalize();
    if (sgn(dests[i]) <= 0) {
      throw Error(ErrorCode::kNonPositiveDestination,
                  "agent " + std::to_string(i + 1) + " has destination " +
                      ToString(dests[i]));
    }
  }
  for (std::size_t i = 0; i < raw_capacities.size(); ++i) {
    if (raw_capacities[i] <= 0) {
      throw Error(ErrorCode::kNonPositiveCapacity,
                  "taxi " + std::to_string(i + 1) + " has capacity " +
                      std::to_string(raw_capacities[i]));
    }
  }

  Instance inst;
  inst.agent_ids_.resize(raw_destinations.size());
  std::iota(inst.agent_ids_.begin(), inst.agent_ids_.end(), 0);
  std::stable_sort(inst.agent_ids_.begin(), inst.agent_ids_.end(),
                   [&](int a, int b) {
                     return dests[a] < dests[b];
                   });
  inst.taxi_ids_.resize(raw_capacities.size());
  std::iota(inst.taxi_ids_.begin(), inst.taxi_ids_.end(), 0);
  std::stable_sort(inst.taxi_ids_.begin(), inst.taxi_ids_.end(),
                   [&](int a, int b) {
                     return raw_capacities[a] > raw_capacities[b];
                   });
  for (int id : inst.agent_ids_) {
    inst.destinations_.push_back(dests[id]);
  }
  for (int id : inst.taxi_ids_) {
    inst.capacities_.push_back(raw_capacities[id]);
  }
  return inst;
}

int Instance::quota(int taxi) const {
  return taxi >= 0 && taxi < num_taxis() ? capacities_[taxi] : 0;
}

long Instance::total_capacity() const {
  return std::accumulate(capacities_.begin(), capacities_.end(), 0L);
}

TypeSet TypesOf(const Instance& inst) {
  TypeSet types;
  types.type_of.resize(inst.num_agents());
  for (int a = 0; a < inst.num_agents(); ++a) {
    if (a == 0 || inst.x(a) != inst.x(a - 1)) {
      types.values.push_back(inst.x(a));
      types.count.push_back(0);
      types.first_agent.push_back(a);
    }
    ++types.count.back();
    types.type_of[a] = types.size() - 1;
  }
  return types;
}

void ValidatePartition(const Instance& inst, const Allocation& alloc) {
  std::vector<char> seen(inst.num_agents(), 0);
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    for (int a : alloc[i]) {
      if (a < 0 || a >= inst.num_agents()) {
        throw Error(ErrorCode::kNotAPartition,
                    "agent index " + std::to_string(a) + " out of range");
      }
      if (seen[a]) {
        throw Error(ErrorCode::kNotAPartition,
                    "agent " + std::to_string(a) + " appears twice");
      }
      seen[a] = 1;
    }
  }
  for (int a = 0; a < inst.num_agents(); ++a) {
    if (!seen[a]) {
      throw Error(ErrorCode::kNotAPartition,
                  "agent " + std::to_string(a) + " is not allocated");
    }
  }
}

Allocation Canonicalize(const Instance& inst, Allocation alloc) {
  ValidatePartition(inst, alloc);
  for (auto& coalition : alloc) std::sort(coalition.begin(), coalition.end());
  if (alloc.size() < static_cast<std::size_t>(inst.num_taxis())) {
    alloc.resize(inst.num_taxis());
  }
  return alloc;
}

std::vector<int> TaxiAssignment(const Instance& inst, const Allocation& alloc) {
  ValidatePartition(inst, alloc);
  std::vector<int> taxi_of(inst.num_agents(), -1);
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    for (int a : alloc[i]) taxi_of[a] = static_cast<int>(i);
  }
  return taxi_of;
}

bool IsFeasible(const Instance& inst, const Allocation& alloc) {
  ValidatePartition(inst, alloc);
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    if (alloc[i].empty()) continue;
    if (static_cast<int>(alloc[i].size()) > inst.quota(static_cast<int>(i))) {
      return false;
    }
  }
  return true;
}

std::vector<Rational> DestinationsOf(const Instance& inst,
                                     const Coalition& coalition) {
  std::vector<Rational> out;
  out.reserve(coalition.size());
  for (int a : coalition) out.push_back(inst.x(a));
  return out;
}

Cost Phi(std::span<const Rational> destinations, const Rational& x) {
  return PhiSorted(Sorted(destinations), x);
}

Cost PhiCapacitated(const Instance& inst, int taxi, const Coalition& coalition,
                    const Rational& x) {
  if (taxi < 0 || taxi >= inst.num_taxis()) {
    throw Error(ErrorCode::kTaxiIndexOutOfRange,
                "taxi " + std::to_string(taxi) + " of " +
                    std::to_string(inst.num_taxis()));
  }
  if (sgn(x) <= 0) {
    throw Error(ErrorCode::kNonPositivePoint, "phi needs x > 0");
  }
  if (static_cast<int>(coalition.size()) > inst.quota(taxi)) {
    return Cost::Infinity();
  }
  return Phi(DestinationsOf(inst, coalition), x);
}

Cost Psi(std::span<const Rational> prefix, const Rational& x, int mu) {
  if (mu < static_cast<int>(prefix.size())) {
    throw Error(ErrorCode::kMuTooSmall,
                "mu=" + std::to_string(mu) + " below |S|=" +
                    std::to_string(prefix.size()));
  }
  if (sgn(x) <= 0) {
    throw Error(ErrorCode::kNonPositivePoint, "psi needs x > 0");
  }
  const std::vector<Rational> sorted = Sorted(prefix);
  Rational acc = 0;
  Rational prev = 0;
  long riders = mu;  // n_S(r) + mu - |S| on the current segment
  std::size_t i = 0;
  while (i < sorted.size() && sorted[i] < x) {
    const Rational& d = sorted[i];
    if (d > prev) {
      if (riders <= 0) return Cost::Infinity();
      acc += (d - prev) / Rational(riders);
      prev = d;
    }
    while (i < sorted.size() && sorted[i] == d) {
      ++i;
      --riders;
    }
  }
  if (riders <= 0) return Cost::Infinity();
  acc += (x - prev) / Rational(riders);
  return acc;
}

Cost ShapleyPermutationOracle(std::span<const Rational> destinations, int quota,
                              int position) {
  const int t = static_cast<int>(destinations.size());
  if (t > 8) {
    throw Error(ErrorCode::kCoalitionTooLargeForOracle,
                std::to_string(t) + " members; the oracle enumerates t!");
  }
  if (position < 0 || position >= t) {
    throw std::out_of_range("agent position outside the coalition");
  }
  // c(S): 0 for the empty set, max destination up to quota, infinity above.
  auto cost_of = [&](const std::vector<int>& members) -> Cost {
    if (members.empty()) return Cost();
    if (static_cast<int>(members.size()) > quota) return Cost::Infinity();
    Rational best = destinations[members.front()];
    for (int m : members) if (destinations[m] > best) best = destinations[m];
    return best;
  };

  std::vector<int> order(t);
  std::iota(order.begin(), order.end(), 0);
  Rational sum = 0;
  long permutations = 0;
  do {
    std::vector<int> before;
    for (int m : order) {
      if (m == position) break;
      before.push_back(m);
    }
    const Cost without = cost_of(before);
    before.push_back(position);
    const Cost with = cost_of(before);
    if (with.is_infinite()) return Cost::Infinity();
    sum += with.value() - without.value();
    ++permutations;
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(sum / Rational(permutations));
}

Cost AgentCost(const Instance& inst, const Allocation& alloc, int agent) {
  const std::vector<int> taxi_of = TaxiAssignment(inst, alloc);
  const int taxi = taxi_of.at(agent);
  if (taxi >= inst.num_taxis()) return Cost::Infinity();
  return PhiCapacitated(inst, taxi, alloc[taxi], inst.x(agent));
}

std::vector<Cost> AgentCosts(const Instance& inst, const Allocation& alloc) {
  ValidatePartition(inst, alloc);
  std::vector<Cost> out(inst.num_agents());
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    const int taxi = static_cast<int>(i);
    for (int a : alloc[i]) {
      out[a] = taxi >= inst.num_taxis()
                   ? Cost::Infinity()
                   : PhiCapacitated(inst, taxi, alloc[i], inst.x(a));
    }
  }
  return out;
}

Cost TotalCost(const Instance& inst, const Allocation& alloc) {
  ValidatePartition(inst, alloc);
  Cost total;
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    if (alloc[i].empty()) continue;
    if (static_cast<int>(alloc[i].size()) > inst.quota(static_cast<int>(i))) {
      return Cost::Infinity();
    }
    Rational last = inst.x(alloc[i].front());
    for (int a : alloc[i]) if (inst.x(a) > last) last = inst.x(a);
    total += Cost(last);
  }
  return total;
}

}  // namespace fairline
