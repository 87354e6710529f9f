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

#include "fairline/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "fairline/error.hpp"

namespace fairline {
namespace {

class Enumerator {
 public:
  Enumerator(const Instance& inst, const EnumerationBudget& budget,
             const AllocationVisitor& visit)
      : inst_(inst),
        budget_(budget),
        visit_(visit),
        types_(TypesOf(inst)),
        k_(inst.num_taxis()),
        load_(k_, 0),
        alloc_(k_) {}

  long long Run() {
    if (budget_.dedup_by_isomorphism) {
      counts_.assign(types_.size(), std::vector<int>(k_, 0));
      tied_.assign(k_, 0);
      for (int i = 0; i + 1 < k_; ++i) {
        tied_[i] = inst_.quota(i) == inst_.quota(i + 1);
      }
      ByType(0);
    } else {
      ByAgent(0);
    }
    return visited_;
  }

 private:
  bool Emit() {
    if (++visited_ > budget_.max_allocations) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "more than " + std::to_string(budget_.max_allocations) +
                      " allocations");
    }
    if (!visit_(alloc_)) stopped_ = true;
    return !stopped_;
  }

  void ByAgent(int a) {
    if (stopped_) return;
    if (a == inst_.num_agents()) {
      Emit();
      return;
    }
    for (int i = 0; i < k_ && !stopped_; ++i) {
      if (load_[i] == inst_.quota(i)) continue;
      ++load_[i];
      alloc_[i].push_back(a);
      ByAgent(a + 1);
      alloc_[i].pop_back();
      --load_[i];
    }
  }

  // Distribute the agents of type t over the taxis as a count vector; columns
  // of equal-capacity taxis stay lexicographically nonincreasing.
  void ByType(int t) {
    if (stopped_) return;
    if (t == types_.size()) {
      Materialize();
      Emit();
      return;
    }
    Distribute(t, 0, types_.count[t]);
  }

  void Distribute(int t, int taxi, int left) {
    if (stopped_) return;
    if (taxi == k_) {
      if (left == 0) ByType(t + 1);
      return;
    }
    int hi = std::min(left, inst_.quota(taxi) - load_[taxi]);
    if (taxi > 0 && tied_[taxi - 1]) {
      hi = std::min(hi, counts_[t][taxi - 1]);
    }
    for (int c = hi; c >= 0; --c) {
      counts_[t][taxi] = c;
      load_[taxi] += c;
      const char saved = taxi > 0 ? tied_[taxi - 1] : 0;
      if (taxi > 0 && saved) tied_[taxi - 1] = counts_[t][taxi - 1] == c;
      Distribute(t, taxi + 1, left - c);
      if (taxi > 0) tied_[taxi - 1] = saved;
      load_[taxi] -= c;
    }
    counts_[t][taxi] = 0;
  }

  void Materialize() {
    for (auto& c : alloc_) c.clear();
    for (int t = 0; t < types_.size(); ++t) {
      int agent = types_.first_agent[t];
      for (int i = 0; i < k_; ++i) {
        for (int c = 0; c < counts_[t][i]; ++c) alloc_[i].push_back(agent++);
      }
    }
    for (auto& c : alloc_) std::sort(c.begin(), c.end());
  }

  const Instance& inst_;
  const EnumerationBudget& budget_;
  const AllocationVisitor& visit_;
  TypeSet types_;
  int k_;
  std::vector<int> load_;
  Allocation alloc_;
  std::vector<std::vector<int>> counts_;
  std::vector<char> tied_;
  long long visited_ = 0;
  bool stopped_ = false;
};

}  // namespace

long long EnumerateFeasible(const Instance& inst,
                            const EnumerationBudget& budget,
                            const AllocationVisitor& visit) {
  if (inst.num_agents() > budget.max_agents) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(inst.num_agents()) + " agents exceed the limit " +
                    std::to_string(budget.max_agents));
  }
  if (inst.total_capacity() < inst.num_agents()) return 0;
  return Enumerator(inst, budget, visit).Run();
}

std::vector<Allocation> CollectFeasible(const Instance& inst,
                                        const EnumerationBudget& budget) {
  std::vector<Allocation> out;
  EnumerateFeasible(inst, budget, [&](const Allocation& alloc) {
    out.push_back(alloc);
    return true;
  });
  return out;
}

std::string IsomorphismKey(const Instance& inst, const Allocation& alloc) {
  const TypeSet types = TypesOf(inst);
  std::vector<std::vector<int>> columns;
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    std::vector<int> column(types.size() + 1, 0);
    column[0] = inst.quota(static_cast<int>(i));
    for (int a : alloc[i]) ++column[1 + types.type_of[a]];
    columns.push_back(std::move(column));
  }
  for (std::size_t i = alloc.size(); i < static_cast<std::size_t>(inst.num_taxis());
       ++i) {
    std::vector<int> column(types.size() + 1, 0);
    column[0] = inst.quota(static_cast<int>(i));
    columns.push_back(std::move(column));
  }
  std::sort(columns.begin(), columns.end());
  std::ostringstream key;
  for (const auto& column : columns) {
    for (int v : column) key << v << ',';
    key << ';';
  }
  return key.str();
}

OracleAnswer OracleSearch(
    const Instance& inst,
    const std::function<bool(const Allocation&)>& predicate,
    const EnumerationBudget& budget) {
  OracleAnswer answer;
  EnumerateFeasible(inst, budget, [&](const Allocation& alloc) {
    if (predicate(alloc)) {
      if (!answer.witness) answer.witness = alloc;
      ++answer.count;
      return !budget.stop_at_first;
    }
    return true;
  });
  answer.exists = answer.witness.has_value();
  return answer;
}

OracleAnswer OracleExists(const Instance& inst, Concept predicate,
                          const EnumerationBudget& budget) {
  if (predicate != Concept::kSociallyOptimal) {
    return OracleSearch(
        inst,
        [&](const Allocation& alloc) {
          return Satisfies(inst, alloc, predicate);
        },
        budget);
  }
  OracleAnswer answer;
  EnumerateFeasible(inst, budget, [&](const Allocation& alloc) {
    Cost total = TotalCost(inst, alloc);
    if (!answer.optimum || total < *answer.optimum) {
      answer.optimum = std::move(total);
      answer.witness = alloc;
      answer.count = 1;
    } else if (total == *answer.optimum) {
      ++answer.count;
    }
    return true;
  });
  answer.exists = answer.witness.has_value();
  return answer;
}

}  // namespace fairline
