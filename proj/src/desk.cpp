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

#include "fairline/desk.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>

#include "fairline/backward.hpp"
#include "fairline/core.hpp"
#include "fairline/criteria.hpp"
#include "fairline/ef_cap4.hpp"
#include "fairline/ef_config.hpp"
#include "fairline/ef_consecutive.hpp"
#include "fairline/ef_types.hpp"
#include "fairline/generators.hpp"
#include "fairline/io.hpp"
#include "fairline/oracle.hpp"

namespace fairline {
namespace {

// Counts checks and keeps the first failure for the report.
class Tally {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && failures_++ == 0) first_failure_ = what;
  }

  bool ok() const { return failures_ == 0; }

  std::string Summary(const std::string& unit) const {
    std::ostringstream out;
    out << checked_ << " " << unit;
    if (failures_ > 0) {
      out << ", " << failures_ << " failed; first: " << first_failure_;
    }
    return out.str();
  }

 private:
  long checked_ = 0;
  long failures_ = 0;
  std::string first_failure_;
};

int Scaled(const DeskOptions& o, int count) {
  return std::max(1, static_cast<int>(std::lround(count * o.scale)));
}

std::string Describe(const Instance& inst) {
  std::ostringstream out;
  out << "x=(";
  for (int a = 0; a < inst.num_agents(); ++a) {
    out << (a ? "," : "") << ToString(inst.x(a));
  }
  out << ") q=(";
  for (int i = 0; i < inst.num_taxis(); ++i) {
    out << (i ? "," : "") << inst.quota(i);
  }
  out << ")";
  return out.str();
}

int CeilDiv(int a, int b) { return (a + b - 1) / b; }

// Random instance with enough seats for everyone. Half the draws use the
// clustered family so that near-ties between types show up.
Instance RandomInstance(std::mt19937_64& rng, int n, int k, int max_q,
                        int types) {
  GeneratorOptions opts;
  opts.n = n;
  opts.k = k;
  opts.max_q = max_q;
  opts.types = types;
  opts.cover = true;
  const InstanceFile file =
      Draw(rng, 0, 1) ? Clustered(rng, opts) : UniformTypes(rng, opts);
  return file.ToInstance();
}

Instance PaperInstance(std::string_view id) {
  return PaperExample(id).ToInstance();
}

Allocation PaperAlloc(const Instance& inst, std::string_view id) {
  return AllocationFromIds(inst, PaperAllocation(id));
}

EnumerationBudget Classes() {
  EnumerationBudget b;
  b.max_agents = 10;
  b.dedup_by_isomorphism = true;
  return b;
}

EnumerationBudget FirstClass() {
  EnumerationBudget b = Classes();
  b.stop_at_first = true;
  return b;
}

Rational MinX(const Instance& inst, const Coalition& c) {
  return inst.x(*std::min_element(c.begin(), c.end()));
}

bool Monotone(const Instance& inst, const Allocation& alloc) {
  for (const Coalition& t : alloc) {
    for (const Coalition& u : alloc) {
      if (t.empty() || u.empty()) continue;
      const Rational mt = MinX(inst, t);
      const Rational mu = MinX(inst, u);
      if (mt < mu && t.size() < u.size()) return false;
      if (mt == mu && t.size() != u.size()) return false;
    }
  }
  return true;
}

bool Local(const Instance& inst, const Allocation& alloc) {
  for (std::size_t i = 0; i < alloc.size(); ++i) {
    const std::vector<Rational> own = DestinationsOf(inst, alloc[i]);
    for (int a : alloc[i]) {
      const Cost here = Phi(own, inst.x(a));
      for (std::size_t j = 0; j < alloc.size(); ++j) {
        if (j == i || alloc[j].empty()) continue;
        const Cost there = Phi(DestinationsOf(inst, alloc[j]), inst.x(a));
        const bool strict = inst.x(a) > MinX(inst, alloc[j]);
        if (strict ? !(here < there) : !(here <= there)) return false;
      }
    }
  }
  return true;
}

// Nonempty coalitions by first drop-off, larger first among ties, followed
// by the empty taxis.
std::vector<int> NormalizedSizes(const Instance& inst, const Allocation& alloc,
                                 std::vector<const Coalition*>* order) {
  std::vector<const Coalition*> nonempty;
  for (const Coalition& c : alloc) {
    if (!c.empty()) nonempty.push_back(&c);
  }
  std::stable_sort(nonempty.begin(), nonempty.end(),
                   [&](const Coalition* a, const Coalition* b) {
                     const Rational ma = MinX(inst, *a);
                     const Rational mb = MinX(inst, *b);
                     if (ma != mb) return ma < mb;
                     const Rational& la = inst.x(a->back());
                     const Rational& lb = inst.x(b->back());
                     if (la != lb) return la < lb;
                     return a->size() > b->size();
                   });
  std::vector<int> sizes;
  for (const Coalition* c : nonempty) {
    sizes.push_back(static_cast<int>(c->size()));
  }
  sizes.resize(alloc.size(), 0);
  *order = std::move(nonempty);
  return sizes;
}

// Compares every type's observed split pattern with the table; returns an
// empty string on success.
std::string SplitPatternMismatch(const Instance& inst,
                                 const Allocation& alloc) {
  std::vector<const Coalition*> order;
  const std::vector<int> sizes = NormalizedSizes(inst, alloc, &order);
  const TypeSet types = TypesOf(inst);
  for (int t = 0; t < types.size(); ++t) {
    std::vector<int> block;
    SplitPattern observed;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int c = static_cast<int>(
          std::count_if(order[i]->begin(), order[i]->end(),
                        [&](int a) { return types.type_of[a] == t; }));
      if (c > 0) {
        block.push_back(static_cast<int>(i));
        observed.push_back(c);
      }
    }
    const int s = block.front();
    if (block.back() - s + 1 != static_cast<int>(block.size())) {
      return "taxis with type " + ToString(types.values[t]) +
             " are not consecutive";
    }
    std::sort(observed.rbegin(), observed.rend());
    const int count = types.count[t];
    const std::size_t next = s + CeilDiv(count, 4);
    const int next_size = next < sizes.size() ? sizes[next] : 0;
    const SplitPattern expected = SplitPatternFor(sizes[s], count, next_size);
    if (observed != expected) {
      std::ostringstream out;
      out << "type " << ToString(types.values[t]) << " observed (";
      for (std::size_t m = 0; m < observed.size(); ++m) {
        out << (m ? "," : "") << observed[m];
      }
      out << ") expected (";
      for (std::size_t m = 0; m < expected.size(); ++m) {
        out << (m ? "," : "") << expected[m];
      }
      out << ")";
      return out.str();
    }
  }
  return "";
}

// Relabels a consecutive allocation into index blocks ordered along the
// line. Coalitions sharing a first stop are ordered by last stop, so a pure
// block precedes one that runs on. Returns false unless block sizes are
// nonincreasing in that order.
bool AsBlocks(const Instance& inst, const Allocation& alloc,
              std::vector<AgentRange>* blocks) {
  std::vector<const Coalition*> nonempty;
  for (const Coalition& c : alloc) {
    if (!c.empty()) nonempty.push_back(&c);
  }
  std::stable_sort(nonempty.begin(), nonempty.end(),
                   [&](const Coalition* a, const Coalition* b) {
                     const Rational ma = MinX(inst, *a);
                     const Rational mb = MinX(inst, *b);
                     if (ma != mb) return ma < mb;
                     const Rational& la = inst.x(a->back());
                     const Rational& lb = inst.x(b->back());
                     if (la != lb) return la < lb;
                     return a->size() > b->size();
                   });
  blocks->clear();
  int begin = 0;
  for (const Coalition* c : nonempty) {
    const int size = static_cast<int>(c->size());
    if (!blocks->empty() && blocks->back().size() < size) return false;
    blocks->push_back({begin, begin + size});
    begin += size;
  }
  return true;
}

Allocation FromBlocks(const Instance& inst,
                      const std::vector<AgentRange>& blocks) {
  Allocation alloc(inst.num_taxis());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (int a = blocks[i].begin; a < blocks[i].end; ++a) alloc[i].push_back(a);
  }
  return alloc;
}

bool BoundariesOk(const Instance& inst, const std::vector<AgentRange>& blocks) {
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (!BoundaryEnvyOk(inst, blocks[i - 1], blocks[i])) return false;
  }
  return true;
}

// --- criteria -------------------------------------------------------------

CriterionResult Named(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

CriterionResult ShapleyGolden(const DeskOptions&) {
  CriterionResult r = Named(1, "Shapley payments on the four-rider taxi");
  r.limit_seconds = 0.001;
  const Instance inst = PaperInstance("1");
  const std::vector<Cost> costs = AgentCosts(inst, PaperAlloc(inst, "1"));
  const std::vector<Cost> expected = {Cost(3), Cost(7), Cost(13), Cost(17)};
  r.passed = costs == expected;
  r.detail = "payments";
  for (const Cost& c : costs) r.detail += " " + ToString(c);
  return r;
}

CriterionResult PermutationOracle(const DeskOptions& o) {
  CriterionResult r = Named(2, "phi equals permutation Shapley");
  r.limit_seconds = 10;
  std::mt19937_64 rng(o.seed ^ 0x2);
  Tally tally;
  for (int trial = 0; trial < Scaled(o, 500); ++trial) {
    const int t = Draw(rng, 1, 7);
    std::vector<Rational> dests;
    for (int m = 0; m < t; ++m) {
      dests.push_back(Rational(Draw(rng, 1, 40), Draw(rng, 1, 6)));
      dests.back().canonicalize();
    }
    for (int m = 0; m < t; ++m) {
      const Cost fast = Phi(dests, dests[m]);
      const Cost slow = ShapleyPermutationOracle(dests, t, m);
      tally.Expect(fast == slow, "coalition " + std::to_string(trial) +
                                     " member " + std::to_string(m) + ": " +
                                     ToString(fast) + " vs " + ToString(slow));
    }
  }
  r.passed = tally.ok();
  r.detail = tally.Summary("payments");
  return r;
}

CriterionResult Conservation(const DeskOptions& o) {
  CriterionResult r = Named(3, "payments sum to the longest ride");
  r.limit_seconds = 5;
  std::mt19937_64 rng(o.seed ^ 0x3);
  Tally tally;
  for (int trial = 0; trial < Scaled(o, 1000); ++trial) {
    const int t = Draw(rng, 1, 8);
    std::vector<Rational> dests;
    for (int m = 0; m < t; ++m) {
      dests.push_back(Rational(Draw(rng, 1, 60), Draw(rng, 1, 8)));
      dests.back().canonicalize();
    }
    Cost sum;
    for (const Rational& x : dests) sum += Phi(dests, x);
    const Rational longest = *std::max_element(dests.begin(), dests.end());
    tally.Expect(sum == Cost(longest), "coalition " + std::to_string(trial) +
                                           " sums to " + ToString(sum));
  }
  r.passed = tally.ok();
  r.detail = tally.Summary("coalitions");
  return r;
}

CriterionResult ConceptSeparations(const DeskOptions&) {
  CriterionResult r = Named(4, "concept separations on worked instances");
  r.limit_seconds = 1;
  struct Case {
    const char* id;
    std::function<bool(const ConceptReport&)> pattern;
    const char* text;
  };
  const Case cases[] = {
      {"2", [](const ConceptReport& c) { return *c.so && *c.ns && !*c.wss; },
       "SO NS !WSS"},
      {"3", [](const ConceptReport& c) { return *c.ns && *c.ef && !*c.so; },
       "NS EF !SO"},
      {"4", [](const ConceptReport& c) { return *c.so && *c.ef && !*c.ns; },
       "SO EF !NS"},
      {"5", [](const ConceptReport& c) { return *c.sss && !*c.ef; },
       "SSS !EF"},
      {"6", [](const ConceptReport& c) { return *c.wss && !*c.sss; },
       "WSS !SSS"},
  };
  Tally tally;
  for (const Case& c : cases) {
    const Instance inst = PaperInstance(c.id);
    const ConceptReport report = Evaluate(inst, PaperAlloc(inst, c.id));
    tally.Expect(report.feasible && c.pattern(report),
                 std::string("instance ") + c.id + " is not " + c.text);
  }
  r.passed = tally.ok();
  r.detail = tally.Summary("instances");
  return r;
}

CriterionResult BackwardGreedyOptimal(const DeskOptions& o) {
  CriterionResult r = Named(5, "backward greedy is NS, SSS and optimal");
  r.limit_seconds = 60;
  std::mt19937_64 rng(o.seed ^ 0x5);
  Tally tally;
  for (int trial = 0; trial < Scaled(o, 300); ++trial) {
    const int n = Draw(rng, 1, 8);
    const int k = Draw(rng, 1, 4);
    const Instance inst = RandomInstance(
        rng, n, k, Draw(rng, CeilDiv(n, k), n), Draw(rng, 1, n));
    const Allocation alloc = BackwardGreedy(inst);
    const OracleAnswer best =
        OracleExists(inst, Concept::kSociallyOptimal, Classes());
    const bool ok = IsFeasible(inst, alloc) &&
                    CheckNashStable(inst, alloc).holds &&
                    CheckSwapStable(inst, alloc, SwapMode::kStrong).holds &&
                    best.optimum && TotalCost(inst, alloc) == *best.optimum;
    tally.Expect(ok, Describe(inst));
  }
  r.passed = tally.ok();
  r.detail = tally.Summary("instances");
  return r;
}

CriterionResult EfSolversVsOracle(const DeskOptions& o) {
  CriterionResult r = Named(6, "EF solvers agree with the oracle");
  r.limit_seconds = 300;
  std::mt19937_64 rng(o.seed ^ 0x6);
  Tally config, cap4, types;
  long found = 0;
  auto judge = [&](Tally& tally, const char* name, const Instance& inst,
                   const std::optional<Allocation>& alloc) {
    const bool exists =
        OracleExists(inst, Concept::kEnvyFree, FirstClass()).exists;
    bool ok = alloc.has_value() == exists;
    if (alloc) {
      ++found;
      ok = ok && IsFeasible(inst, *alloc) && CheckEnvyFree(inst, *alloc).holds;
    }
    tally.Expect(ok, std::string(name) + " on " + Describe(inst) +
                         (exists ? " (EF exists)" : " (no EF)"));
  };
  for (int trial = 0; trial < Scaled(o, 300); ++trial) {
    const int n = Draw(rng, 1, 8);
    const int k = Draw(rng, 1, 2);
    const Instance inst = RandomInstance(
        rng, n, k, Draw(rng, CeilDiv(n, k), 8), Draw(rng, 1, 4));
    judge(config, "ef_config", inst, SolveEfConstantTaxis(inst));
  }
  for (int trial = 0; trial < Scaled(o, 300); ++trial) {
    const int n = Draw(rng, 1, 8);
    const int max_q = Draw(rng, 1, 4);
    const int min_k = CeilDiv(n, max_q);
    const int k = Draw(rng, min_k, std::max(min_k, 4));
    const Instance inst = RandomInstance(rng, n, k, max_q, Draw(rng, 1, n));
    judge(cap4, "ef_cap4", inst, SolveEfCap4(inst));
  }
  for (int trial = 0; trial < Scaled(o, 300); ++trial) {
    const int n = Draw(rng, 1, 8);
    const int k = Draw(rng, 1, 4);
    const Instance inst = RandomInstance(
        rng, n, k, Draw(rng, CeilDiv(n, k), n), Draw(rng, 1, 3));
    judge(types, "ef_types", inst, SolveEfFptTypes(inst));
  }
  r.passed = config.ok() && cap4.ok() && types.ok();
  r.detail = "ef_config " + config.Summary("instances") + "; ef_cap4 " +
             cap4.Summary("instances") + "; ef_types " +
             types.Summary("instances") + "; " + std::to_string(found) +
             " allocations returned";
  return r;
}

CriterionResult Golden78(const DeskOptions&) {
  CriterionResult r = Named(7, "no envy-free allocation, and a unique one");
  r.limit_seconds = 10;
  Tally tally;
  {
    const Instance inst = PaperInstance("7");
    tally.Expect(!SolveEfConstantTaxis(inst), "ef_config found EF in ex 7");
    tally.Expect(!SolveEfCap4(inst), "ef_cap4 found EF in ex 7");
    tally.Expect(!SolveEfFptTypes(inst), "ef_types found EF in ex 7");
    tally.Expect(!SolveEfConsecutive(inst), "ef_consecutive found EF in ex 7");
    tally.Expect(!OracleExists(inst, Concept::kEnvyFree, Classes()).exists,
                 "oracle found EF in ex 7");
  }
  {
    const Instance inst = PaperInstance("8");
    const std::string key = IsomorphismKey(inst, PaperAlloc(inst, "8"));
    const OracleAnswer all = OracleExists(inst, Concept::kEnvyFree, Classes());
    tally.Expect(all.count == 1, "ex 8 has " + std::to_string(all.count) +
                                     " EF classes");
    tally.Expect(!SolveEfConsecutive(inst), "ef_consecutive found EF in ex 8");
    const auto by_types = SolveEfFptTypes(inst);
    tally.Expect(by_types && IsomorphismKey(inst, *by_types) == key,
                 "ef_types misses the ex 8 allocation");
    const auto by_config = SolveEfConstantTaxis(inst);
    tally.Expect(by_config && IsomorphismKey(inst, *by_config) == key,
                 "ef_config misses the ex 8 allocation");
  }
  r.passed = tally.ok();
  r.detail = tally.Summary("checks");
  return r;
}

// Visits every envy-free allocation of a random suite.
template <typename Visit>
long ForEachEnvyFree(std::mt19937_64& rng, int instances, int max_q_cap,
                     Visit visit) {
  long seen = 0;
  for (int trial = 0; trial < instances; ++trial) {
    const int n = Draw(rng, 1, 7);
    const int min_k = CeilDiv(n, max_q_cap);
    const int k = Draw(rng, min_k, std::max(min_k, 3));
    const int max_q = Draw(rng, CeilDiv(n, k), std::min(n, max_q_cap));
    const Instance inst = RandomInstance(rng, n, k, max_q, Draw(rng, 1, n));
    EnumerateFeasible(inst, EnumerationBudget{}, [&](const Allocation& alloc) {
      if (CheckEnvyFree(inst, alloc).holds) {
        ++seen;
        visit(inst, alloc);
      }
      return true;
    });
  }
  return seen;
}

CriterionResult StructuralProperties(const DeskOptions& o) {
  CriterionResult r = Named(8, "monotonicity, split and locality on EF allocations");
  std::mt19937_64 rng(o.seed ^ 0x8);
  Tally tally;
  const long seen = ForEachEnvyFree(
      rng, Scaled(o, 300), 7, [&](const Instance& inst, const Allocation& a) {
        tally.Expect(Monotone(inst, a), "monotonicity on " + Describe(inst));
        tally.Expect(CheckSplitConditions(inst, a),
                     "split conditions on " + Describe(inst));
        tally.Expect(Local(inst, a), "locality on " + Describe(inst));
      });
  r.passed = tally.ok() && seen > 0;
  r.detail = std::to_string(seen) + " EF allocations, " +
             tally.Summary("checks");
  return r;
}

CriterionResult SplitTable(const DeskOptions& o) {
  CriterionResult r = Named(9, "split patterns follow the capacity-4 table");
  std::mt19937_64 rng(o.seed ^ 0x9);
  Tally tally;
  const long seen = ForEachEnvyFree(
      rng, Scaled(o, 300), 4, [&](const Instance& inst, const Allocation& a) {
        const std::string why = SplitPatternMismatch(inst, a);
        tally.Expect(why.empty(), why + " on " + Describe(inst));
      });
  r.passed = tally.ok() && seen > 0;
  r.detail = std::to_string(seen) + " EF allocations, " +
             tally.Summary("checks");
  return r;
}

CriterionResult ConsecutiveDp(const DeskOptions& o) {
  CriterionResult r = Named(10, "consecutive DP agrees with the oracle");
  r.limit_seconds = 60;
  std::mt19937_64 rng(o.seed ^ 0xa);
  Tally existence, block_rule;
  long boundary_only_wrong = 0;
  for (int trial = 0; trial < Scaled(o, 300); ++trial) {
    const int n = Draw(rng, 1, 8);
    const int k = Draw(rng, 1, 4);
    const Instance inst = RandomInstance(
        rng, n, k, Draw(rng, CeilDiv(n, k), n), Draw(rng, 1, n));
    const std::optional<Allocation> dp = SolveEfConsecutive(inst);
    bool exists = false;
    EnumerateFeasible(inst, Classes(), [&](const Allocation& alloc) {
      if (!CheckConsecutive(inst, alloc)) return true;
      const bool ef = CheckEnvyFree(inst, alloc).holds;
      exists = exists || ef;
      std::vector<AgentRange> blocks;
      if (AsBlocks(inst, alloc, &blocks)) {
        const bool full = CheckEnvyFree(inst, FromBlocks(inst, blocks)).holds;
        block_rule.Expect(BlocksEnvyFree(inst, blocks) == full,
                          "block rule disagrees on " + Describe(inst));
        if (BoundariesOk(inst, blocks) != full) ++boundary_only_wrong;
      }
      return true;
    });
    bool ok = dp.has_value() == exists;
    if (dp) {
      std::vector<AgentRange> blocks;
      ok = ok && IsFeasible(inst, *dp) && CheckConsecutive(inst, *dp) &&
           CheckEnvyFree(inst, *dp).holds && AsBlocks(inst, *dp, &blocks) &&
           BoundariesOk(inst, blocks);
    }
    existence.Expect(ok, Describe(inst));
  }
  r.passed = existence.ok() && block_rule.ok();
  r.detail = "existence " + existence.Summary("instances") +
             "; block rule vs full " + block_rule.Summary("allocations") +
             "; boundary-only rule wrong on " +
             std::to_string(boundary_only_wrong);
  return r;
}

}  // namespace

CriterionResult RunCriterion(int id, const DeskOptions& options) {
  using Runner = CriterionResult (*)(const DeskOptions&);
  static constexpr Runner kRunners[kNumCriteria] = {
      ShapleyGolden,         PermutationOracle, Conservation,
      ConceptSeparations,    BackwardGreedyOptimal, EfSolversVsOracle,
      Golden78,              StructuralProperties,   SplitTable,
      ConsecutiveDp,
  };
  if (id < 1 || id > kNumCriteria) {
    throw std::out_of_range("criterion " + std::to_string(id));
  }
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = kRunners[id - 1](options);
  } catch (const std::exception& e) {
    r.id = id;
    r.name = "criterion " + std::to_string(id);
    r.passed = false;
    r.detail = std::string("threw: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
    r.passed = false;
    r.detail += "; over the time limit";
  }
  return r;
}

std::vector<CriterionResult> RunDeskSuite(
    const DeskOptions& options,
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kNumCriteria; ++id) {
    out.push_back(RunCriterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string FormatResultLine(const CriterionResult& r) {
  char time[64];
  if (r.limit_seconds > 0) {
    std::snprintf(time, sizeof time, "%.3fs < %gs", r.seconds,
                  r.limit_seconds);
  } else {
    std::snprintf(time, sizeof time, "%.3fs", r.seconds);
  }
  std::ostringstream out;
  out << "criterion " << r.id << (r.id < 10 ? "  " : " ")
      << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " [" << time
      << "] " << r.detail;
  return out.str();
}

}  // namespace fairline
