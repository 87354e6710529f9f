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

#include "fairline/backward.hpp"
#include "fairline/criteria.hpp"
#include "fairline/generators.hpp"
#include "fairline/io.hpp"
#include "test_util.hpp"

namespace fairline {
namespace {

using testing::CodeOf;
using testing::Worked;
using testing::WorkedAlloc;

TEST_CASE("instance files parse rationals exactly") {
  InstanceFile f = ParseInstance(R"({
    "destinations": [3, "5/2", "0.25", "7"],
    "capacities": [2, 2],
    "labels": ["a", "b", "c", "d"],
    "groups": [[1, 2], [3, 4]]
  })");
  CHECK(f.destinations ==
        std::vector<Rational>{3, Rational(5, 2), Rational(1, 4), 7});
  CHECK(f.capacities == std::vector<int>{2, 2});
  CHECK(f.labels.size() == 4);
  CHECK(f.groups == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
  Instance inst = f.ToInstance();
  CHECK(inst.x(0) == Rational(1, 4));
}

TEST_CASE("instance files reject bad input") {
  auto code = [](const char* text) {
    return CodeOf([&] { ParseInstance(text); });
  };
  CHECK(code("{") == ErrorCode::kParseError);
  CHECK(code(R"({"capacities": [1]})") == ErrorCode::kParseError);
  CHECK(code(R"({"destinations": [1.5], "capacities": [1]})") ==
        ErrorCode::kParseError);
  CHECK(code(R"({"destinations": ["x"], "capacities": [1]})") ==
        ErrorCode::kParseError);
  CHECK(code(R"({"destinations": [1], "capacities": ["1"]})") ==
        ErrorCode::kParseError);
  CHECK(CodeOf([] {
          ParseInstance(R"({"destinations": [0], "capacities": [1]})")
              .ToInstance();
        }) == ErrorCode::kNonPositiveDestination);
}

TEST_CASE("instance round trip") {
  for (const std::string& id : PaperExampleIds()) {
    InstanceFile f = PaperExample(id);
    CHECK(ParseInstance(SerializeInstance(f)) == f);
  }
  InstanceFile g = ParseInstance(
      R"({"destinations": ["1/3", 2], "capacities": [1, 1],
          "labels": ["p", "q"], "groups": [[2], [1]]})");
  CHECK(ParseInstance(SerializeInstance(g)) == g);
}

TEST_CASE("allocation files use input ids") {
  // Input order: 40, 12 -> sorted agents 12 (id 2), 40 (id 1).
  InstanceFile f;
  f.destinations = {40, 12};
  f.capacities = {1, 2};
  Instance inst = f.ToInstance();
  Allocation a = ParseAllocation(inst, "[[1], [2]]");
  // Input taxi 1 has capacity 1 and becomes sorted taxi 1.
  CHECK(a == Allocation{{0}, {1}});
  CHECK(ParseAllocation(inst, R"({"allocation": [[1], [2]]})") == a);
  CHECK(ParseAllocation(inst, SerializeAllocation(inst, a)) == a);
  CHECK(ParseAllocation(inst, "[[1, 2]]") == Allocation{{}, {0, 1}});
}

TEST_CASE("allocation files reject non-partitions") {
  Instance inst = Worked("4");
  auto code = [&](const char* text) {
    return CodeOf([&] { ParseAllocation(inst, text); });
  };
  CHECK(code("[[1, 2, 3], [4]]") == ErrorCode::kNotAPartition);
  CHECK(code("[[1, 2, 3], [3, 4, 5]]") == ErrorCode::kNotAPartition);
  CHECK(code("[[1, 2, 3], [4, 6]]") == ErrorCode::kNotAPartition);
  CHECK(code("[[1], [2], [3, 4, 5]]") == ErrorCode::kParseError);
  CHECK(code("[[1, \"a\"]]") == ErrorCode::kParseError);
  CHECK(code("nope") == ErrorCode::kParseError);
}

TEST_CASE("groups") {
  Instance inst = Worked("7");
  auto g = ParseGroups("[[1], [2, 3, 4]]");
  CHECK(GroupsToSorted(inst, g) == std::vector<std::vector<int>>{{0}, {1, 2, 3}});
  CHECK(ParseGroups(R"({"groups": [[1, 2], [3, 4]]})").size() == 2);
  CHECK(CodeOf([&] { GroupsToSorted(inst, {{1, 5}}); }) ==
        ErrorCode::kGroupsNotAPartition);
}

TEST_CASE("result round trip re-derives costs") {
  for (const char* id : {"1", "2", "4", "6", "8"}) {
    Instance inst = Worked(id);
    ResultFile r;
    r.solver = "check";
    r.status = SolveStatus::kFound;
    r.allocation = WorkedAlloc(id);
    r.costs = AgentCosts(inst, *r.allocation);
    r.report = Evaluate(inst, *r.allocation);
    r.wall_time_ms = 1.5;
    CHECK(CostsVerify(inst, r));
    ResultFile back = ParseResult(inst, SerializeResult(inst, r));
    CHECK(back == r);
  }

  Instance ex7 = Worked("7");
  ResultFile none;
  none.solver = "ef-auto";
  none.status = SolveStatus::kNoneExists;
  CHECK(ParseResult(ex7, SerializeResult(ex7, none)) == none);
}

TEST_CASE("result files with wrong costs are rejected") {
  Instance inst = Worked("1");
  ResultFile r;
  r.solver = "check";
  r.status = SolveStatus::kFound;
  r.allocation = WorkedAlloc("1");
  r.costs = AgentCosts(inst, *r.allocation);
  r.costs[0] = Cost(4);
  CHECK_FALSE(CostsVerify(inst, r));
  CHECK(CodeOf([&] { ParseResult(inst, SerializeResult(inst, r)); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("result costs are listed in input order") {
  InstanceFile f;
  f.destinations = {40, 12, 36, 24};
  f.capacities = {4};
  Instance inst = f.ToInstance();
  ResultFile r;
  r.solver = "backward";
  r.status = SolveStatus::kFound;
  r.allocation = BackwardGreedy(inst);
  r.costs = AgentCosts(inst, *r.allocation);
  const std::string text = SerializeResult(inst, r, -1);
  CHECK(text.find(R"("costs":["17","3","13","7"])") != std::string::npos);
  CHECK(text.find(R"("total_cost":"40")") != std::string::npos);
}

TEST_CASE("generators") {
  GeneratorOptions opts;
  opts.n = 7;
  opts.k = 3;
  opts.max_q = 3;
  opts.types = 3;
  for (const char* family : {"uniform-types", "clustered"}) {
    InstanceFile a = Generate(family, 42, opts);
    CHECK(a == Generate(family, 42, opts));
    CHECK(a.destinations.size() == 7);
    CHECK(a.capacities.size() == 3);
    long total = 0;
    for (int q : a.capacities) {
      CHECK(q >= 1);
      CHECK(q <= 3);
      total += q;
    }
    CHECK(total >= 7);
    for (const Rational& x : a.destinations) {
      CHECK(x > 0);
      CHECK(ToString(x) == ToString(ParseRational(ToString(x))));
    }
  }
  CHECK(Generate("uniform-types", 1, opts) != Generate("uniform-types", 2, opts));
  CHECK(TypesOf(Generate("uniform-types", 3, opts).ToInstance()).size() <= 3);

  InstanceFile ex7 = Generate("paper-example:7", 0, opts);
  CHECK(ex7.destinations == std::vector<Rational>{2, 4, 4, 4});
  CHECK(ex7.capacities == std::vector<int>{2, 2});
  InstanceFile ex2 = Generate("paper-example:2", 0, opts);
  CHECK(ex2.destinations.size() == 9);
  CHECK(ex2.capacities == std::vector<int>{5, 4});
  CHECK(PaperExample("fig7").destinations.size() == 46);

  CHECK(CodeOf([&] { Generate("nope", 1, opts); }) ==
        ErrorCode::kUnknownFamily);
  CHECK(CodeOf([&] { Generate("paper-example:99", 1, opts); }) ==
        ErrorCode::kUnknownFamily);
}

TEST_CASE("every worked allocation is a partition of its instance") {
  for (const std::string& id : PaperExampleIds()) {
    Instance inst = PaperExample(id).ToInstance();
    CHECK_NOTHROW(AllocationFromIds(inst, PaperAllocation(id)));
  }
}

}  // namespace
}  // namespace fairline
