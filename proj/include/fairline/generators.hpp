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

// Instance generators: the published worked instances and two seeded random
// families. Output depends only on the seed and the options.

#ifndef FAIRLINE_GENERATORS_HPP
#define FAIRLINE_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "fairline/io.hpp"

namespace fairline {

struct GeneratorOptions {
  int n = 6;
  int k = 3;
  int max_q = 3;
  int types = 3;
  // Raise capacities until they hold every agent, when k * max_q allows.
  bool cover = true;
};

// Uniform integer in [lo, hi]; portable across standard libraries, unlike
// std::uniform_int_distribution.
int Draw(std::mt19937_64& rng, int lo, int hi);

// Up to `types` distinct integer destinations, each agent picking one
// uniformly.
InstanceFile UniformTypes(std::mt19937_64& rng, const GeneratorOptions& opts);
// Agents scattered in quarter steps around `types` well separated centres.
InstanceFile Clustered(std::mt19937_64& rng, const GeneratorOptions& opts);

// "1".."8" for the small worked instances and "fig7" for the 46-rider
// star-forest instance.
std::vector<std::string> PaperExampleIds();
InstanceFile PaperExample(std::string_view id);
// The allocation that accompanies the instance, as 1-based agent ids per
// taxi. Instance "7" has no envy-free allocation; its entry has envy.
std::vector<std::vector<int>> PaperAllocation(std::string_view id);

// family is "uniform-types", "clustered" or "paper-example:<id>".
// Throws kUnknownFamily.
InstanceFile Generate(std::string_view family, std::uint64_t seed,
                      const GeneratorOptions& opts);

}  // namespace fairline

#endif  // FAIRLINE_GENERATORS_HPP
