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

#include "fairline/core.hpp"
#include "test_util.hpp"

namespace fairline {
namespace {

using testing::Alloc;
using testing::CodeOf;
using testing::Dests;
using testing::Make;
using testing::MakeInts;
using testing::Q;

// Integral of 1/n_T(r) over (0, x] by walking unit-free breakpoints; kept
// independent of the library's segment code.
Rational SegmentOracle(std::vector<Rational> dests, const Rational& x) {
  std::sort(dests.begin(), dests.end());
  Rational total = 0;
  Rational prev = 0;
  for (const Rational& d : dests) {
    Rational hi = d < x ? d : x;
    if (hi > prev) {
      long riding = std::count_if(dests.begin(), dests.end(),
                                  [&](const Rational& e) { return e >= hi; });
      total += (hi - prev) / riding;
      prev = hi;
    }
  }
  return total;
}

TEST_CASE("rationals parse exactly") {
  CHECK(Q("7") == 7);
  CHECK(Q("-3/6") == Rational(-1, 2));
  CHECK(Q("2.75") == Rational(11, 4));
  CHECK(Q("0.1") * 10 == 1);
  CHECK(Q("0.25") == Rational(1, 4));
  CHECK(Q("010") == 10);
  CHECK(Q("007/014") == Rational(1, 2));
  CHECK(ToString(Q("10/4")) == "5/2");
  CHECK(CodeOf([] { Q("1/0"); }) == ErrorCode::kParseError);
  CHECK(CodeOf([] { Q("abc"); }) == ErrorCode::kParseError);
}

TEST_CASE("cost infinity dominates and absorbs") {
  Cost inf = Cost::Infinity();
  CHECK(inf.is_infinite());
  CHECK(Cost(5) < inf);
  CHECK((inf + Cost(3)).is_infinite());
  CHECK(Cost(2) + Cost(Rational(1, 2)) == Cost(Rational(5, 2)));
  CHECK(ToString(inf) == "inf");
}

TEST_CASE("load sorts agents and taxis and keeps the permutation") {
  Instance inst = MakeInts({4, 2, 4, 4}, {2, 2});
  CHECK(inst.destinations() == std::vector<Rational>{2, 4, 4, 4});
  CHECK(inst.capacities() == std::vector<int>{2, 2});
  CHECK(inst.agent_ids() == std::vector<int>{1, 0, 2, 3});

  Instance one = MakeInts({5}, {1});
  CHECK(one.num_agents() == 1);
  CHECK(one.x(0) == 5);

  Instance ex4 = MakeInts({1, 2, 2, 4, 4}, {3, 3});
  CHECK(ex4.destinations() == std::vector<Rational>{1, 2, 2, 4, 4});

  Instance taxis = MakeInts({1, 2}, {1, 3, 2});
  CHECK(taxis.capacities() == std::vector<int>{3, 2, 1});
  CHECK(taxis.taxi_ids() == std::vector<int>{1, 2, 0});
  CHECK(taxis.quota(3) == 0);
}

TEST_CASE("load rejects bad input") {
  CHECK(CodeOf([] { MakeInts({}, {1}); }) == ErrorCode::kEmptyInput);
  CHECK(CodeOf([] { MakeInts({1}, {}); }) == ErrorCode::kEmptyInput);
  CHECK(CodeOf([] { MakeInts({0, 1}, {2}); }) ==
        ErrorCode::kNonPositiveDestination);
  CHECK(CodeOf([] { MakeInts({1}, {0}); }) == ErrorCode::kNonPositiveCapacity);
}

TEST_CASE("feasibility") {
  Instance ex4 = MakeInts({1, 2, 2, 4, 4}, {3, 3});
  CHECK(IsFeasible(ex4, Alloc(ex4, {{1, 2, 3}, {4, 5}})));
  Instance ex7 = MakeInts({2, 4, 4, 4}, {2, 2});
  CHECK_FALSE(IsFeasible(ex7, Alloc(ex7, {{1, 2, 3}, {4}})));
  Instance small = MakeInts({3, 1, 2}, {1, 1, 1});
  CHECK(IsFeasible(small, Alloc(small, {{1}, {2}, {3}})));
}

TEST_CASE("partition validation") {
  Instance inst = MakeInts({1, 2, 3}, {3});
  CHECK(CodeOf([&] { ValidatePartition(inst, {{0, 1}}); }) ==
        ErrorCode::kNotAPartition);
  CHECK(CodeOf([&] { ValidatePartition(inst, {{0, 1, 1, 2}}); }) ==
        ErrorCode::kNotAPartition);
  CHECK(CodeOf([&] { ValidatePartition(inst, {{0, 1, 3}}); }) ==
        ErrorCode::kNotAPartition);
  Allocation canon = Canonicalize(inst, {{2, 0, 1}});
  CHECK(canon == Allocation{{0, 1, 2}});
}

TEST_CASE("phi on the four-rider example") {
  auto t = Dests({12, 24, 36, 40});
  CHECK(Phi(t, 12) == Cost(3));
  CHECK(Phi(t, 24) == Cost(7));
  CHECK(Phi(t, 36) == Cost(13));
  CHECK(Phi(t, 40) == Cost(17));
  CHECK(Phi(Dests({5}), 5) == Cost(5));
  CHECK(Phi(Dests({2, 4}), 4) == Cost(3));
  CHECK(Phi(Dests({2, 4}), 5).is_infinite());
  CHECK(CodeOf([] { Phi(Dests({2}), 0); }) == ErrorCode::kNonPositivePoint);
}

TEST_CASE("capacitated phi") {
  Instance inst = MakeInts({1, 2, 3}, {2, 4});
  // Sorted capacities are (4, 2).
  CHECK(PhiCapacitated(inst, 1, {0, 1, 2}, 1).is_infinite());
  CHECK(PhiCapacitated(inst, 0, {0, 1, 2}, 3) == Cost(Rational(11, 6)));
  Instance ex1 = MakeInts({12, 24, 36, 40}, {4});
  CHECK(PhiCapacitated(ex1, 0, {0, 1, 2, 3}, 40) == Cost(17));
  Instance lone = MakeInts({5}, {1});
  CHECK(PhiCapacitated(lone, 0, {0}, 5) == Cost(5));
  CHECK(CodeOf([&] { PhiCapacitated(lone, 1, {0}, 5); }) ==
        ErrorCode::kTaxiIndexOutOfRange);
}

TEST_CASE("psi") {
  CHECK(Psi({}, 4, 2) == Cost(2));
  CHECK(Psi(Dests({12, 24, 36}), 40, 4) == Cost(17));
  CHECK(Psi(Dests({2}), 4, 3) == Cost(Rational(5, 3)));
  CHECK(CodeOf([] { Psi(Dests({1, 2}), 4, 1); }) == ErrorCode::kMuTooSmall);
}

TEST_CASE("permutation oracle") {
  auto t = Dests({12, 24, 36, 40});
  CHECK(ShapleyPermutationOracle(t, 4, 1) == Cost(7));
  CHECK(ShapleyPermutationOracle(Dests({5}), 1, 0) == Cost(5));
  CHECK(ShapleyPermutationOracle(Dests({2, 2, 6}), 3, 2) ==
        Cost(Rational(14, 3)));
  CHECK(ShapleyPermutationOracle(Dests({2, 2, 6}), 2, 2).is_infinite());
}

TEST_CASE("total cost") {
  Instance ex2 = MakeInts({1, 2, 2, 4, 4, 4, 4, 4, 4}, {5, 4});
  CHECK(TotalCost(ex2, Alloc(ex2, {{2, 3, 7, 8, 9}, {1, 4, 5, 6}})) ==
        Cost(8));
  Instance lone = MakeInts({5}, {1});
  CHECK(TotalCost(lone, Alloc(lone, {{1}})) == Cost(5));
  Instance ex3 = MakeInts({1, 1, 1, 1}, {2, 2, 4});
  CHECK(TotalCost(ex3, Alloc(ex3, {{1, 2}, {3, 4}, {}})) == Cost(2));
  CHECK(TotalCost(ex3, Alloc(ex3, {{}, {}, {1, 2, 3, 4}})) == Cost(1));
  CHECK(TotalCost(ex3, Alloc(ex3, {{1, 2, 3}, {4}, {}})).is_infinite());
}

TEST_CASE("agent costs follow input numbering through the permutation") {
  Instance inst = MakeInts({40, 12, 36, 24}, {4});
  Allocation all = Alloc(inst, {{1, 2, 3, 4}});
  auto costs = AgentCosts(inst, all);
  REQUIRE(costs.size() == 4);
  CHECK(costs[0] == Cost(3));
  CHECK(costs[3] == Cost(17));
}

TEST_CASE("random coalitions: conservation, oracle agreement, identities") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int size = 1 + static_cast<int>(rng() % 6);
    std::vector<Rational> t;
    for (int i = 0; i < size; ++i) {
      Rational v(1 + static_cast<long>(rng() % 12), 1 + rng() % 3);
      v.canonicalize();
      t.push_back(v);
    }
    std::vector<Rational> sorted = t;
    std::sort(sorted.begin(), sorted.end());

    Rational sum = 0;
    for (int b = 0; b < size; ++b) {
      Cost phi = Phi(t, t[b]);
      REQUIRE(phi.is_finite());
      sum += phi.value();
      CHECK(phi.value() == SegmentOracle(t, t[b]));
      CHECK(phi == ShapleyPermutationOracle(t, size, b));

      std::vector<Rational> below;
      for (const Rational& d : t) {
        if (d < t[b]) below.push_back(d);
      }
      CHECK(Psi(below, t[b], size) == phi);
    }
    CHECK(sum == sorted.back());

    // Average cost x -> phi/x is nondecreasing; phi is nondecreasing.
    for (int i = 1; i < size; ++i) {
      const Rational& lo = sorted[i - 1];
      const Rational& hi = sorted[i];
      CHECK(Phi(t, lo) <= Phi(t, hi));
      CHECK(Phi(t, lo).value() / lo <= Phi(t, hi).value() / hi);
    }

    // Adding a rider who goes at least as far never raises the payment.
    const Rational& x = t[0];
    std::vector<Rational> bigger = t;
    bigger.push_back(x + Rational(static_cast<long>(rng() % 4)));
    CHECK(Phi(bigger, x) <= Phi(t, x));
  }
}

}  // namespace
}  // namespace fairline
