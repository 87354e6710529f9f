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

#include <random>
#include <set>

#include "fairline/oracle.hpp"
#include "test_util.hpp"

namespace fairline {
namespace {

using testing::CodeOf;
using testing::MakeInts;
using testing::Worked;

// Ordered partitions with |T_i| <= q_i, counted by plain recursion over agents.
long long CountOrdered(int left, std::vector<int>& room) {
  if (left == 0) return 1;
  long long total = 0;
  for (int& r : room) {
    if (r == 0) continue;
    --r;
    total += CountOrdered(left - 1, room);
    ++r;
  }
  return total;
}

TEST_CASE("tiny enumerations") {
  Instance one = MakeInts({5}, {1});
  CHECK(EnumerateFeasible(one, {}, [](const Allocation&) { return true; }) ==
        1);

  Instance pair = MakeInts({4, 4}, {2, 1});
  EnumerationBudget dedup;
  dedup.dedup_by_isomorphism = true;
  auto classes = CollectFeasible(pair, dedup);
  CHECK(classes.size() == 2);

  Instance none = MakeInts({1, 2, 3}, {1, 1});
  CHECK(CollectFeasible(none, {}).empty());
}

TEST_CASE("every allocation of an instance without envy-free allocations has envy") {
  Instance ex7 = Worked("7");
  long long seen = EnumerateFeasible(ex7, {}, [&](const Allocation& a) {
    CHECK_FALSE(CheckEnvyFree(ex7, a).holds);
    return true;
  });
  CHECK(seen == 6);
}

TEST_CASE("completeness against an independent counter") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 4);
    std::vector<int> x(n);
    for (int& v : x) v = 1 + static_cast<int>(rng() % 3);
    std::vector<int> q(k);
    for (int& v : q) v = 1 + static_cast<int>(rng() % 4);
    Instance inst = MakeInts(x, q);

    std::vector<int> room = q;
    const long long expected = CountOrdered(n, room);
    std::set<Allocation> distinct;
    std::set<std::string> keys;
    long long seen = EnumerateFeasible(inst, {}, [&](const Allocation& a) {
      CHECK(IsFeasible(inst, a));
      CHECK(a.size() == static_cast<std::size_t>(k));
      distinct.insert(a);
      keys.insert(IsomorphismKey(inst, a));
      return true;
    });
    CHECK(seen == expected);
    CHECK(distinct.size() == static_cast<std::size_t>(expected));

    // Dedup yields exactly one allocation per class.
    EnumerationBudget dedup;
    dedup.dedup_by_isomorphism = true;
    std::set<std::string> dedup_keys;
    long long classes = EnumerateFeasible(inst, dedup, [&](const Allocation& a) {
      CHECK(dedup_keys.insert(IsomorphismKey(inst, a)).second);
      return true;
    });
    CHECK(classes == static_cast<long long>(keys.size()));
    CHECK(dedup_keys == keys);
  }
}

TEST_CASE("isomorphism key ignores equal-capacity taxi order") {
  Instance inst = MakeInts({1, 2, 2, 3}, {2, 2});
  CHECK(IsomorphismKey(inst, {{0, 1}, {2, 3}}) ==
        IsomorphismKey(inst, {{2, 3}, {0, 1}}));
  CHECK(IsomorphismKey(inst, {{0, 1}, {2, 3}}) ==
        IsomorphismKey(inst, {{0, 2}, {1, 3}}));
  CHECK(IsomorphismKey(inst, {{0, 1}, {2, 3}}) !=
        IsomorphismKey(inst, {{0, 3}, {1, 2}}));
}

TEST_CASE("oracle queries on worked instances") {
  EnumerationBudget ten;
  ten.max_agents = 10;
  ten.dedup_by_isomorphism = true;
  OracleAnswer ex8 = OracleExists(Worked("8"), Concept::kEnvyFree, ten);
  CHECK(ex8.exists);
  CHECK(ex8.count == 1);
  REQUIRE(ex8.witness);
  CHECK(CheckEnvyFree(Worked("8"), *ex8.witness).holds);

  OracleAnswer ex5 = OracleExists(Worked("5"), Concept::kEnvyFree, {});
  CHECK_FALSE(ex5.exists);
  CHECK_FALSE(ex5.witness);

  OracleAnswer so = OracleExists(Worked("2"), Concept::kSociallyOptimal, {});
  REQUIRE(so.optimum);
  CHECK(*so.optimum == Cost(8));
  CHECK(so.count >= 1);
}

TEST_CASE("early stop") {
  EnumerationBudget first;
  first.stop_at_first = true;
  OracleAnswer a = OracleExists(Worked("4"), Concept::kEnvyFree, first);
  CHECK(a.exists);
  CHECK(a.count == 1);
}

TEST_CASE("budgets") {
  EnumerationBudget small;
  small.max_agents = 3;
  CHECK(CodeOf([&] { CollectFeasible(Worked("4"), small); }) ==
        ErrorCode::kBudgetExceeded);
  EnumerationBudget few;
  few.max_allocations = 5;
  CHECK(CodeOf([&] { CollectFeasible(Worked("4"), few); }) ==
        ErrorCode::kBudgetExceeded);
}

}  // namespace
}  // namespace fairline
