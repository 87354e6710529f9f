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

#include "fairline/generators.hpp"

#include <algorithm>
#include <numeric>

#include "fairline/error.hpp"

namespace fairline {
namespace {

struct Example {
  std::string_view id;
  std::vector<int> destinations;
  std::vector<int> capacities;
  std::vector<std::vector<int>> allocation;
};

std::vector<int> Range(int first, int last) {
  std::vector<int> v(last - first + 1);
  std::iota(v.begin(), v.end(), first);
  return v;
}

std::vector<int> Concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Star-forest figure: types in drawing order r1 a1 b1 b2 c1 c2 r2 r3 d1 d2 d3
// r4 e1 f1 f2. The figure fixes only the order; these coordinates make the
// drawn allocation envy-free, which evenly spaced ones do not.
Example Figure7() {
  const int counts[] = {7, 5, 2, 2, 1, 1, 7, 10, 1, 1, 1, 3, 3, 1, 1};
  const int position[] = {100, 101, 102, 103, 105, 106, 111, 113,
                          123, 124, 125, 175, 176, 226, 231};
  Example e{"fig7", {}, {6, 6, 6, 5, 5, 5, 5, 4, 4}, {}};
  for (int t = 0; t < 15; ++t) {
    e.destinations.insert(e.destinations.end(), counts[t], position[t]);
  }
  e.allocation = {
      Concat({{1}, Range(8, 12)}),
      Concat({{2, 3}, Range(13, 16)}),
      Concat({Range(4, 7), {17, 18}}),
      Concat({{19, 20}, Range(36, 38)}),
      Range(21, 25),
      Range(26, 30),
      Range(31, 35),
      {39, 42, 43, 44},
      {40, 41, 45, 46},
  };
  return e;
}

const std::vector<Example>& Examples() {
  static const std::vector<Example> kExamples = {
      {"1", {12, 24, 36, 40}, {4}, {{1, 2, 3, 4}}},
      {"2",
       {1, 2, 2, 4, 4, 4, 4, 4, 4},
       {5, 4},
       {{2, 3, 7, 8, 9}, {1, 4, 5, 6}}},
      {"3", {1, 1, 1, 1}, {2, 2, 4}, {{1, 2}, {3, 4}, {}}},
      {"4", {1, 2, 2, 4, 4}, {3, 3}, {{1, 2, 3}, {4, 5}}},
      {"5", {1, 2, 2}, {2, 1}, {{1, 2}, {3}}},
      {"6", {1, 1, 2, 2}, {2, 2}, {{1, 3}, {2, 4}}},
      {"7", {2, 4, 4, 4}, {2, 2}, {{1, 2}, {3, 4}}},
      {"8",
       {1, 1, 1, 1, 10, 10, 10, 10, 20, 20},
       {6, 4},
       {{1, 2, 3, 4, 9, 10}, {5, 6, 7, 8}}},
      Figure7(),
  };
  return kExamples;
}

const Example& Find(std::string_view id) {
  for (const Example& e : Examples()) {
    if (e.id == id) return e;
  }
  throw Error(ErrorCode::kUnknownFamily,
              "no worked instance '" + std::string(id) + "'");
}

void FitCapacities(std::mt19937_64& rng, const GeneratorOptions& opts,
                   std::vector<int>& caps) {
  if (!opts.cover) return;
  long total = std::accumulate(caps.begin(), caps.end(), 0L);
  if (static_cast<long>(opts.k) * opts.max_q < opts.n) {
    std::fill(caps.begin(), caps.end(), opts.max_q);
    return;
  }
  while (total < opts.n) {
    const int i = Draw(rng, 0, opts.k - 1);
    if (caps[i] < opts.max_q) {
      ++caps[i];
      ++total;
    }
  }
}

void CheckOptions(const GeneratorOptions& opts) {
  if (opts.n < 1 || opts.k < 1 || opts.max_q < 1 || opts.types < 1) {
    throw std::invalid_argument("n, k, max_q and types must be positive");
  }
}

std::vector<int> RandomCapacities(std::mt19937_64& rng,
                                  const GeneratorOptions& opts) {
  std::vector<int> caps(opts.k);
  for (int& q : caps) q = Draw(rng, 1, opts.max_q);
  FitCapacities(rng, opts, caps);
  return caps;
}

}  // namespace

int Draw(std::mt19937_64& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

InstanceFile UniformTypes(std::mt19937_64& rng, const GeneratorOptions& opts) {
  CheckOptions(opts);
  std::vector<int> pool = Range(1, 3 * opts.types + 3);
  // Partial Fisher-Yates with the portable draw.
  for (int i = 0; i < opts.types; ++i) {
    std::swap(pool[i], pool[Draw(rng, i, static_cast<int>(pool.size()) - 1)]);
  }
  pool.resize(opts.types);
  InstanceFile file;
  for (int a = 0; a < opts.n; ++a) {
    file.destinations.emplace_back(pool[Draw(rng, 0, opts.types - 1)]);
  }
  file.capacities = RandomCapacities(rng, opts);
  return file;
}

InstanceFile Clustered(std::mt19937_64& rng, const GeneratorOptions& opts) {
  CheckOptions(opts);
  InstanceFile file;
  for (int a = 0; a < opts.n; ++a) {
    const int centre = 10 * Draw(rng, 1, opts.types);
    Rational offset(Draw(rng, 0, 3), 4);
    offset.canonicalize();
    file.destinations.push_back(centre + offset);
  }
  file.capacities = RandomCapacities(rng, opts);
  return file;
}

std::vector<std::string> PaperExampleIds() {
  std::vector<std::string> out;
  for (const Example& e : Examples()) out.emplace_back(e.id);
  return out;
}

InstanceFile PaperExample(std::string_view id) {
  const Example& e = Find(id);
  InstanceFile file;
  for (int d : e.destinations) file.destinations.emplace_back(d);
  file.capacities = e.capacities;
  return file;
}

std::vector<std::vector<int>> PaperAllocation(std::string_view id) {
  return Find(id).allocation;
}

InstanceFile Generate(std::string_view family, std::uint64_t seed,
                      const GeneratorOptions& opts) {
  constexpr std::string_view kPaper = "paper-example:";
  if (family.substr(0, kPaper.size()) == kPaper) {
    return PaperExample(family.substr(kPaper.size()));
  }
  std::mt19937_64 rng(seed);
  if (family == "uniform-types") return UniformTypes(rng, opts);
  if (family == "clustered") return Clustered(rng, opts);
  throw Error(ErrorCode::kUnknownFamily,
              "unknown family '" + std::string(family) + "'");
}

}  // namespace fairline
