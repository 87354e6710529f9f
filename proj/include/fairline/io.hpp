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

// JSON file formats. Everything a user sees refers to agents and taxis by
// their 1-based position in the input file; rationals travel as strings.

#ifndef FAIRLINE_IO_HPP
#define FAIRLINE_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairline/core.hpp"
#include "fairline/criteria.hpp"

namespace fairline {

struct InstanceFile {
  std::vector<Rational> destinations;
  std::vector<int> capacities;
  std::vector<std::string> labels;       // empty, or one per agent
  std::vector<std::vector<int>> groups;  // 1-based agent ids; may be empty

  Instance ToInstance() const;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Destinations may be JSON integers or strings ("7", "5/2", "0.25"). JSON
// floats are rejected since they are binary approximations.
InstanceFile ParseInstance(std::string_view text);
std::string SerializeInstance(const InstanceFile& file);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

// Either a bare list of coalitions or {"allocation": [...]}. Coalition i
// rides the i-th taxi of the input; missing trailing coalitions are empty.
// Throws kParseError on malformed input and kNotAPartition when the ids do not
// partition the agents.
Allocation ParseAllocation(const Instance& inst, std::string_view text);
std::string SerializeAllocation(const Instance& inst, const Allocation& alloc);
// Same mapping from 1-based input ids, without the JSON layer.
Allocation AllocationFromIds(const Instance& inst,
                             const std::vector<std::vector<int>>& lists);

// Groups are either a bare list or {"groups": [...]} of 1-based agent ids.
std::vector<std::vector<int>> ParseGroups(std::string_view text);
std::vector<std::vector<int>> GroupsToSorted(
    const Instance& inst, const std::vector<std::vector<int>>& groups);

enum class SolveStatus { kFound, kNoneExists, kUnknown };
std::string_view SolveStatusName(SolveStatus status);

struct ResultFile {
  std::string solver;
  SolveStatus status = SolveStatus::kUnknown;
  std::optional<Allocation> allocation;
  std::vector<Cost> costs;  // per sorted agent, set with the allocation
  std::optional<ConceptReport> report;
  double wall_time_ms = 0;

  friend bool operator==(const ResultFile&, const ResultFile&) = default;
};

std::string SerializeResult(const Instance& inst, const ResultFile& result,
                            int indent = 2);
// Recomputes every reported cost and throws kParseError on a mismatch.
ResultFile ParseResult(const Instance& inst, std::string_view text);
bool CostsVerify(const Instance& inst, const ResultFile& result);

}  // namespace fairline

#endif  // FAIRLINE_IO_HPP
