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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "fairline/criteria.hpp"
#include "fairline/ef_consecutive.hpp"
#include "fairline/oracle.hpp"
#include "test_util.hpp"

namespace fairline {
namespace {

using testing::CodeOf;
using testing::Make;
using testing::MakeInts;
using testing::Worked;
using testing::WorkedAlloc;
using testing::Q;

// Boundary agents are content here, yet the first agent of the second block
// prefers the seat of the first agent overall.
Instance BoundaryTrap() {
  return Make({Q("41/4"), Q("43/4"), 30, 30, Q("163/4"), Q("201/4"),
               Q("101/2")},
              {5, 5, 2});
}

// Nonempty coalitions along the line: by first stop, then last stop, then
// larger first.
std::vector<Coalition> Blocks(const Instance& inst, const Allocation& a) {
  std::vector<Coalition> out;
  for (const Coalition& c : a) {
    if (!c.empty()) out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](const Coalition& l, const Coalition& r) {
                     if (inst.x(l[0]) != inst.x(r[0])) {
                       return inst.x(l[0]) < inst.x(r[0]);
                     }
                     if (inst.x(l.back()) != inst.x(r.back())) {
                       return inst.x(l.back()) < inst.x(r.back());
                     }
                     return l.size() > r.size();
                   });
  return out;
}

TEST_CASE("boundary envy") {
  CHECK(BoundaryEnvyOk(Worked("4"), {0, 3}, {3, 5}));
  CHECK_FALSE(BoundaryEnvyOk(Worked("7"), {0, 2}, {2, 4}));
  Instance same = MakeInts({3, 3, 3, 3}, {2, 2});
  CHECK(BoundaryEnvyOk(same, {0, 2}, {2, 4}));
  CHECK(CodeOf([&] { BoundaryEnvyOk(same, {0, 1}, {2, 4}); }) ==
        ErrorCode::kBlocksNotAdjacent);
}

TEST_CASE("boundaries alone miss envy") {
  Instance inst = BoundaryTrap();
  const AgentRange blocks[] = {{0, 5}, {5, 7}};
  CHECK(BoundaryEnvyOk(inst, blocks[0], blocks[1]));
  CHECK_FALSE(BlocksEnvyFree(inst, blocks));

  Allocation literal{{0, 1, 2, 3, 4}, {5, 6}, {}};
  auto r = CheckEnvyFree(inst, literal);
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness);
  CHECK(r.witness->envier == 5);
  CHECK(r.witness->envied == 0);
  CHECK(r.witness->envier_cost == Cost(Rational(201, 8)));
  CHECK(r.witness->replaced_cost == Cost(Rational(1747, 80)));

  auto loose = SolveEfConsecutive(inst, ConsecutiveRule::kBoundaryOnly);
  REQUIRE(loose);
  CHECK(*loose == literal);

  auto exact = SolveEfConsecutive(inst);
  if (exact) {
    CHECK(CheckEnvyFree(inst, *exact).holds);
    CHECK(CheckConsecutive(inst, *exact));
  }
}

TEST_CASE("worked instances") {
  CHECK_FALSE(SolveEfConsecutive(Worked("8")));
  auto ex4 = SolveEfConsecutive(Worked("4"));
  REQUIRE(ex4);
  CHECK(*ex4 == WorkedAlloc("4"));

  Instance few = MakeInts({4, 1, 4}, {1, 1, 1, 2});
  auto singles = SolveEfConsecutive(few);
  REQUIRE(singles);
  for (const Coalition& c : *singles) CHECK(c.size() <= 1);
}

TEST_CASE("random instances: soundness and oracle agreement") {
  std::mt19937_64 rng(31);
  EnumerationBudget all;
  int with_answer = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 4);
    GeneratorOptions opts;
    opts.n = n;
    opts.k = k;
    opts.max_q = 4;
    opts.types = 1 + trial % 5;
    Instance inst = (trial % 2 ? UniformTypes(rng, opts)
                               : Clustered(rng, opts)).ToInstance();

    bool exists = false;
    EnumerateFeasible(inst, all, [&](const Allocation& a) {
      if (!CheckConsecutive(inst, a)) return true;
      const bool ef = CheckEnvyFree(inst, a).holds;
      exists = exists || ef;
      // Same-type riders are interchangeable, so index blocks of the same
      // sizes carry the same costs. The block rule must match the pairwise
      // check whenever sizes do not grow along the line.
      std::vector<AgentRange> ranges;
      bool ordered = true;
      int begin = 0;
      for (const Coalition& c : Blocks(inst, a)) {
        const int size = static_cast<int>(c.size());
        if (!ranges.empty() && ranges.back().size() < size) ordered = false;
        ranges.push_back({begin, begin + size});
        begin += size;
      }
      if (ordered) CHECK(BlocksEnvyFree(inst, ranges) == ef);
      return true;
    });

    auto got = SolveEfConsecutive(inst);
    CHECK(got.has_value() == exists);
    if (!got) continue;
    ++with_answer;
    CHECK(IsFeasible(inst, *got));
    CHECK(CheckConsecutive(inst, *got));
    CHECK(CheckEnvyFree(inst, *got).holds);
    auto blocks = Blocks(inst, *got);
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      CHECK(blocks[i - 1].size() >= blocks[i].size());
    }
  }
  CHECK(with_answer > 20);
}

}  // namespace
}  // namespace fairline
