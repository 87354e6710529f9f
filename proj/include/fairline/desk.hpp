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

// The desk-scale acceptance suite: ten numbered criteria, each a
// self-contained randomized or golden check against exhaustive search.

#ifndef FAIRLINE_DESK_HPP
#define FAIRLINE_DESK_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fairline {

struct DeskOptions {
  std::uint64_t seed = 20260915;
  // Multiplies every instance count; 1.0 is the full suite.
  double scale = 1.0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0 means no limit
};

constexpr int kNumCriteria = 10;

CriterionResult RunCriterion(int id, const DeskOptions& options = {});

// Runs all criteria in order, reporting each as it finishes.
std::vector<CriterionResult> RunDeskSuite(
    const DeskOptions& options = {},
    const std::function<void(const CriterionResult&)>& on_result = {});

std::string FormatResultLine(const CriterionResult& r);

}  // namespace fairline

#endif  // FAIRLINE_DESK_HPP
