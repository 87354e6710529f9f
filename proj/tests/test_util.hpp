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

#ifndef FAIRLINE_TESTS_TEST_UTIL_HPP
#define FAIRLINE_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "fairline/core.hpp"
#include "fairline/error.hpp"
#include "fairline/generators.hpp"
#include "fairline/io.hpp"

namespace fairline::testing {

inline Rational Q(const char* text) { return ParseRational(text); }

inline Instance Make(std::initializer_list<Rational> x,
                     std::initializer_list<int> q) {
  std::vector<Rational> xs(x);
  std::vector<int> qs(q);
  return Instance::Load(xs, qs);
}

inline Instance MakeInts(const std::vector<int>& x, const std::vector<int>& q) {
  std::vector<Rational> xs;
  for (int v : x) xs.emplace_back(v);
  return Instance::Load(xs, q);
}

// 1-based ids in input order, coalition i for input taxi i.
inline Allocation Alloc(const Instance& inst,
                        const std::vector<std::vector<int>>& ids) {
  return AllocationFromIds(inst, ids);
}

inline Instance Worked(const char* id) { return PaperExample(id).ToInstance(); }

inline Allocation WorkedAlloc(const char* id) {
  return AllocationFromIds(Worked(id), PaperAllocation(id));
}

inline std::vector<Rational> Dests(std::initializer_list<Rational> x) {
  return std::vector<Rational>(x);
}

// Small random instances; capacities cover n.
inline Instance RandomInstance(std::mt19937_64& rng, int n, int k, int max_q,
                               int types) {
  GeneratorOptions opts;
  opts.n = n;
  opts.k = k;
  opts.max_q = max_q;
  opts.types = types;
  return UniformTypes(rng, opts).ToInstance();
}

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(-1);
}

}  // namespace fairline::testing

#endif  // FAIRLINE_TESTS_TEST_UTIL_HPP
