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
#include <map>
#include <random>
#include <set>

#include "fairline/criteria.hpp"
#include "fairline/ef_cap4.hpp"
#include "fairline/oracle.hpp"
#include "test_util.hpp"

namespace fairline {
namespace {

using testing::CodeOf;
using testing::MakeInts;
using testing::Worked;

std::vector<int> SortedSizes(const Allocation& a) {
  std::vector<int> s;
  for (const Coalition& c : a) s.push_back(static_cast<int>(c.size()));
  std::sort(s.rbegin(), s.rend());
  return s;
}

// Type content of each coalition, ignoring which taxi carries it.
std::multiset<std::vector<Rational>> Shape(const Instance& inst,
                                           const Allocation& a) {
  std::multiset<std::vector<Rational>> out;
  for (const Coalition& c : a) {
    if (!c.empty()) out.insert(DestinationsOf(inst, c));
  }
  return out;
}

TEST_CASE("size profiles") {
  auto p1 = EnumerateSizeProfiles(MakeInts({1, 2, 3, 4}, {2, 2}));
  CHECK(p1 == std::vector<SizeProfile>{{2, 2}});
  auto p2 = EnumerateSizeProfiles(MakeInts({1, 2, 3}, {2, 1}));
  CHECK(p2 == std::vector<SizeProfile>{{2, 1}});
  auto p3 = EnumerateSizeProfiles(MakeInts({1, 2, 3, 4, 5}, {3, 3}));
  CHECK(p3 == std::vector<SizeProfile>{{3, 2}});
  auto p4 = EnumerateSizeProfiles(MakeInts({1, 2, 3}, {4, 4}));
  CHECK(p4 == std::vector<SizeProfile>{{3, 0}, {2, 1}});
}

TEST_CASE("split pattern table") {
  CHECK(SplitPatternFor(4, 8, 0) == SplitPattern{4, 4});
  CHECK(SplitPatternFor(4, 7, 4) == SplitPattern{4, 2, 1});
  CHECK(SplitPatternFor(4, 7, 3) == SplitPattern{4, 3});
  CHECK(SplitPatternFor(3, 4, 0) == SplitPattern{3, 1});
  CHECK(SplitPatternFor(2, 5, 0) == SplitPattern{2, 2, 1});
  CHECK(SplitPatternFor(1, 3, 0) == SplitPattern{1, 1, 1});
}

TEST_CASE("worked instances") {
  CHECK_FALSE(SolveEfCap4(Worked("7")));
  CHECK_FALSE(SolveEfCap4(Worked("5")));

  Instance four = MakeInts({1, 1, 1, 1}, {2, 2});
  auto got = SolveEfCap4(four);
  REQUIRE(got);
  CHECK(SortedSizes(*got) == std::vector<int>{2, 2});
  CHECK(CheckEnvyFree(four, *got).holds);
}

TEST_CASE("capacity above four is rejected") {
  CHECK(CodeOf([] { SolveEfCap4(MakeInts({1, 2}, {5, 1})); }) ==
        ErrorCode::kCapacityTooLarge);
}

TEST_CASE("random instances: oracle agreement and uniqueness per profile") {
  std::mt19937_64 rng(23);
  EnumerationBudget all;
  int with_ef = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 3);
    Instance inst = testing::RandomInstance(rng, n, std::max(k, (n + 3) / 4),
                                            4, 1 + trial % 4);

    std::map<std::vector<int>, std::set<std::multiset<std::vector<Rational>>>>
        ef_by_sizes;
    EnumerateFeasible(inst, all, [&](const Allocation& a) {
      if (CheckEnvyFree(inst, a).holds) {
        ef_by_sizes[SortedSizes(a)].insert(Shape(inst, a));
      }
      return true;
    });

    auto got = SolveEfCap4(inst);
    CHECK(got.has_value() == !ef_by_sizes.empty());
    if (got) {
      ++with_ef;
      CHECK(IsFeasible(inst, *got));
      CHECK(CheckEnvyFree(inst, *got).holds);
    }
    for (const SizeProfile& mu : EnumerateSizeProfiles(inst)) {
      Allocation a = GreedyForProfile(inst, mu);
      if (!CheckEnvyFree(inst, a).holds || !IsFeasible(inst, a)) continue;
      std::vector<int> sizes(mu.begin(), mu.end());
      std::sort(sizes.rbegin(), sizes.rend());
      CHECK(ef_by_sizes[sizes].size() == 1);
    }
  }
  CHECK(with_ef > 10);
}

}  // namespace
}  // namespace fairline
