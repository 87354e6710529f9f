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

#include "fairline/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fairline/error.hpp"

namespace fairline {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(std::string("malformed JSON: ") + e.what());
  }
}

Rational RationalFrom(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(std::to_string(j.get<unsigned long long>()))
                                  : Rational(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_float()) {
    Fail("non-integer numbers must be quoted, got " + j.dump());
  }
  Fail("expected a rational, got " + j.dump());
}

int PositiveIntFrom(const json& j, const char* what) {
  if (!j.is_number_integer()) Fail(std::string(what) + " must be an integer");
  const long long v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() ||
      v > std::numeric_limits<int>::max()) {
    Fail(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Fail(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<std::vector<int>> IdLists(const json& j, const char* what) {
  if (!j.is_array()) Fail(std::string(what) + " must be a list of lists");
  std::vector<std::vector<int>> out;
  for (const json& row : j) {
    if (!row.is_array()) Fail(std::string(what) + " must be a list of lists");
    std::vector<int>& ids = out.emplace_back();
    for (const json& id : row) ids.push_back(PositiveIntFrom(id, what));
  }
  return out;
}

// Sorted taxi index for each input position.
std::vector<int> TaxiOfInput(const Instance& inst) {
  std::vector<int> out(inst.num_taxis());
  for (int i = 0; i < inst.num_taxis(); ++i) out[inst.taxi_ids()[i]] = i;
  return out;
}

std::vector<int> AgentOfInput(const Instance& inst) {
  std::vector<int> out(inst.num_agents());
  for (int a = 0; a < inst.num_agents(); ++a) out[inst.agent_ids()[a]] = a;
  return out;
}

int SortedAgent(const Instance& inst, const std::vector<int>& agent_of,
                int id) {
  if (id < 1 || id > inst.num_agents()) {
    throw Error(ErrorCode::kNotAPartition,
                "agent id " + std::to_string(id) + " outside 1.." +
                    std::to_string(inst.num_agents()));
  }
  return agent_of[id - 1];
}

json AllocationJson(const Instance& inst, const Allocation& alloc) {
  json out = json::array();
  std::vector<std::vector<int>> by_input(inst.num_taxis());
  for (int i = 0; i < inst.num_taxis() && i < static_cast<int>(alloc.size());
       ++i) {
    auto& ids = by_input[inst.taxi_ids()[i]];
    for (int a : alloc[i]) ids.push_back(inst.agent_ids()[a] + 1);
    std::sort(ids.begin(), ids.end());
  }
  for (const auto& ids : by_input) out.push_back(ids);
  return out;
}

Allocation AllocationFrom(const Instance& inst, const json& j) {
  return AllocationFromIds(inst, IdLists(j, "allocation"));
}

json CostJson(const Cost& c) { return ToString(c); }

Cost CostFrom(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Cost::Infinity();
  return Cost(RationalFrom(j));
}

json EnvyJson(const Instance& inst, const EnvyWitness& w) {
  return {{"envier", inst.agent_ids()[w.envier] + 1},
          {"envied", inst.agent_ids()[w.envied] + 1},
          {"envier_cost", CostJson(w.envier_cost)},
          {"replaced_cost", CostJson(w.replaced_cost)}};
}

EnvyWitness EnvyFrom(const Instance& inst, const std::vector<int>& agent_of,
                     const json& j) {
  EnvyWitness w;
  w.envier = SortedAgent(inst, agent_of,
                         PositiveIntFrom(Field(j, "envier"), "envier"));
  w.envied = SortedAgent(inst, agent_of,
                         PositiveIntFrom(Field(j, "envied"), "envied"));
  w.envier_cost = CostFrom(Field(j, "envier_cost"));
  w.replaced_cost = CostFrom(Field(j, "replaced_cost"));
  return w;
}

json SwapJson(const Instance& inst, const SwapWitness& w) {
  return {{"forward", EnvyJson(inst, w.forward)},
          {"reverse_current", CostJson(w.reverse_current)},
          {"reverse_replaced", CostJson(w.reverse_replaced)}};
}

SwapWitness SwapFrom(const Instance& inst, const std::vector<int>& agent_of,
                     const json& j) {
  SwapWitness w;
  w.forward = EnvyFrom(inst, agent_of, Field(j, "forward"));
  w.reverse_current = CostFrom(Field(j, "reverse_current"));
  w.reverse_replaced = CostFrom(Field(j, "reverse_replaced"));
  return w;
}

int TaxiFromId(const Instance& inst, const std::vector<int>& taxi_of,
               int id) {
  if (id < 1 || id > inst.num_taxis()) Fail("taxi id out of range");
  return taxi_of[id - 1];
}

const std::pair<const char*, std::optional<bool> ConceptReport::*> kFlags[] = {
    {"ef", &ConceptReport::ef},
    {"ns", &ConceptReport::ns},
    {"wss", &ConceptReport::wss},
    {"sss", &ConceptReport::sss},
    {"so", &ConceptReport::so},
    {"consecutive", &ConceptReport::consecutive},
    {"split", &ConceptReport::split_conditions},
    {"ef_in_groups", &ConceptReport::ef_in_groups},
};

json ReportJson(const Instance& inst, const ConceptReport& r) {
  json out = {{"feasible", r.feasible}};
  for (const auto& [key, member] : kFlags) {
    if ((r.*member).has_value()) out[key] = *(r.*member);
  }
  json witnesses = json::object();
  if (r.ef_witness) witnesses["ef"] = EnvyJson(inst, *r.ef_witness);
  if (r.ns_witness) {
    const DeviationWitness& w = *r.ns_witness;
    witnesses["ns"] = {{"agent", inst.agent_ids()[w.agent] + 1},
                       {"from_taxi", inst.taxi_ids()[w.from_taxi] + 1},
                       {"to_taxi", inst.taxi_ids()[w.to_taxi] + 1},
                       {"old_cost", CostJson(w.old_cost)},
                       {"new_cost", CostJson(w.new_cost)}};
  }
  if (r.wss_witness) witnesses["wss"] = SwapJson(inst, *r.wss_witness);
  if (r.sss_witness) witnesses["sss"] = SwapJson(inst, *r.sss_witness);
  if (r.ef_in_groups_witness) {
    witnesses["ef_in_groups"] = EnvyJson(inst, *r.ef_in_groups_witness);
  }
  if (!witnesses.empty()) out["witnesses"] = std::move(witnesses);
  return out;
}

ConceptReport ReportFrom(const Instance& inst, const json& j) {
  ConceptReport r;
  const json& feasible = Field(j, "feasible");
  if (!feasible.is_boolean()) Fail("'feasible' must be a boolean");
  r.feasible = feasible.get<bool>();
  for (const auto& [key, member] : kFlags) {
    if (!j.contains(key)) continue;
    if (!j.at(key).is_boolean()) Fail(std::string("'") + key + "' must be a boolean");
    r.*member = j.at(key).get<bool>();
  }
  if (!j.contains("witnesses")) return r;
  const json& w = j.at("witnesses");
  const std::vector<int> agent_of = AgentOfInput(inst);
  if (w.contains("ef")) r.ef_witness = EnvyFrom(inst, agent_of, w.at("ef"));
  if (w.contains("ns")) {
    const json& d = w.at("ns");
    const std::vector<int> taxi_of = TaxiOfInput(inst);
    DeviationWitness dev;
    dev.agent = SortedAgent(inst, agent_of,
                            PositiveIntFrom(Field(d, "agent"), "agent"));
    dev.from_taxi = TaxiFromId(
        inst, taxi_of, PositiveIntFrom(Field(d, "from_taxi"), "from_taxi"));
    dev.to_taxi = TaxiFromId(inst, taxi_of,
                             PositiveIntFrom(Field(d, "to_taxi"), "to_taxi"));
    dev.old_cost = CostFrom(Field(d, "old_cost"));
    dev.new_cost = CostFrom(Field(d, "new_cost"));
    r.ns_witness = dev;
  }
  if (w.contains("wss")) r.wss_witness = SwapFrom(inst, agent_of, w.at("wss"));
  if (w.contains("sss")) r.sss_witness = SwapFrom(inst, agent_of, w.at("sss"));
  if (w.contains("ef_in_groups")) {
    r.ef_in_groups_witness = EnvyFrom(inst, agent_of, w.at("ef_in_groups"));
  }
  return r;
}

}  // namespace

Instance InstanceFile::ToInstance() const {
  return Instance::Load(destinations, capacities);
}

InstanceFile ParseInstance(std::string_view text) {
  const json j = Parse(text);
  InstanceFile file;
  const json& dests = Field(j, "destinations");
  if (!dests.is_array()) Fail("'destinations' must be a list");
  for (const json& d : dests) file.destinations.push_back(RationalFrom(d));
  const json& caps = Field(j, "capacities");
  if (!caps.is_array()) Fail("'capacities' must be a list");
  for (const json& q : caps) {
    file.capacities.push_back(PositiveIntFrom(q, "capacity"));
  }
  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_array() || labels.size() != file.destinations.size()) {
      Fail("'labels' must list one string per agent");
    }
    for (const json& l : labels) {
      if (!l.is_string()) Fail("labels must be strings");
      file.labels.push_back(l.get<std::string>());
    }
  }
  if (j.contains("groups")) file.groups = IdLists(j.at("groups"), "groups");
  return file;
}

std::string SerializeInstance(const InstanceFile& file) {
  json j;
  j["destinations"] = json::array();
  for (const Rational& d : file.destinations) {
    j["destinations"].push_back(ToString(d));
  }
  j["capacities"] = file.capacities;
  if (!file.labels.empty()) j["labels"] = file.labels;
  if (!file.groups.empty()) j["groups"] = file.groups;
  return j.dump(2) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

Allocation ParseAllocation(const Instance& inst, std::string_view text) {
  const json j = Parse(text);
  return AllocationFrom(inst, j.is_object() ? Field(j, "allocation") : j);
}

std::string SerializeAllocation(const Instance& inst, const Allocation& alloc) {
  return json{{"allocation", AllocationJson(inst, alloc)}}.dump() + "\n";
}

Allocation AllocationFromIds(const Instance& inst,
                             const std::vector<std::vector<int>>& lists) {
  if (static_cast<int>(lists.size()) > inst.num_taxis()) {
    Fail(std::to_string(lists.size()) + " coalitions for " +
         std::to_string(inst.num_taxis()) + " taxis");
  }
  const std::vector<int> taxi_of = TaxiOfInput(inst);
  const std::vector<int> agent_of = AgentOfInput(inst);
  Allocation alloc(inst.num_taxis());
  std::vector<int> seen(inst.num_agents(), 0);
  for (std::size_t p = 0; p < lists.size(); ++p) {
    Coalition& c = alloc[taxi_of[p]];
    for (int id : lists[p]) {
      c.push_back(SortedAgent(inst, agent_of, id));
      if (++seen[id - 1] == 2) {
        throw Error(ErrorCode::kNotAPartition,
                    "agent " + std::to_string(id) + " is allocated twice");
      }
    }
  }
  for (int id = 1; id <= inst.num_agents(); ++id) {
    if (seen[id - 1] == 0) {
      throw Error(ErrorCode::kNotAPartition,
                  "agent " + std::to_string(id) + " is not allocated");
    }
  }
  return Canonicalize(inst, std::move(alloc));
}


std::vector<std::vector<int>> ParseGroups(std::string_view text) {
  const json j = Parse(text);
  return IdLists(j.is_object() ? Field(j, "groups") : j, "groups");
}

std::vector<std::vector<int>> GroupsToSorted(
    const Instance& inst, const std::vector<std::vector<int>>& groups) {
  const std::vector<int> agent_of = AgentOfInput(inst);
  std::vector<std::vector<int>> out;
  for (const auto& g : groups) {
    std::vector<int>& sorted = out.emplace_back();
    for (int id : g) {
      if (id < 1 || id > inst.num_agents()) {
        throw Error(ErrorCode::kGroupsNotAPartition,
                    "group member " + std::to_string(id) + " out of range");
      }
      sorted.push_back(agent_of[id - 1]);
    }
    std::sort(sorted.begin(), sorted.end());
  }
  return out;
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kFound:
      return "found";
    case SolveStatus::kNoneExists:
      return "none exists";
    case SolveStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::string SerializeResult(const Instance& inst, const ResultFile& result,
                            int indent) {
  json j;
  j["solver"] = result.solver;
  j["status"] = SolveStatusName(result.status);
  if (result.allocation) {
    j["allocation"] = AllocationJson(inst, *result.allocation);
    std::vector<std::string> costs(inst.num_agents());
    for (int a = 0; a < inst.num_agents() &&
                    a < static_cast<int>(result.costs.size());
         ++a) {
      costs[inst.agent_ids()[a]] = ToString(result.costs[a]);
    }
    j["costs"] = costs;
    j["total_cost"] = ToString(TotalCost(inst, *result.allocation));
  }
  if (result.report) j["report"] = ReportJson(inst, *result.report);
  j["wall_time_ms"] = result.wall_time_ms;
  return j.dump(indent) + "\n";
}

ResultFile ParseResult(const Instance& inst, std::string_view text) {
  const json j = Parse(text);
  ResultFile result;
  const json& solver = Field(j, "solver");
  if (!solver.is_string()) Fail("'solver' must be a string");
  result.solver = solver.get<std::string>();
  const json& status = Field(j, "status");
  bool known = false;
  for (SolveStatus s : {SolveStatus::kFound, SolveStatus::kNoneExists,
                        SolveStatus::kUnknown}) {
    if (status.is_string() && status.get<std::string>() == SolveStatusName(s)) {
      result.status = s;
      known = true;
    }
  }
  if (!known) Fail("unknown status " + status.dump());
  if (j.contains("allocation")) {
    result.allocation = AllocationFrom(inst, j.at("allocation"));
    const json& costs = Field(j, "costs");
    if (!costs.is_array() ||
        static_cast<int>(costs.size()) != inst.num_agents()) {
      Fail("'costs' must list one cost per agent");
    }
    result.costs.resize(inst.num_agents());
    for (int a = 0; a < inst.num_agents(); ++a) {
      result.costs[a] = CostFrom(costs.at(inst.agent_ids()[a]));
    }
    if (!CostsVerify(inst, result)) {
      Fail("reported costs do not match the allocation");
    }
  }
  if (j.contains("report")) result.report = ReportFrom(inst, j.at("report"));
  if (j.contains("wall_time_ms")) {
    if (!j.at("wall_time_ms").is_number()) Fail("'wall_time_ms' must be a number");
    result.wall_time_ms = j.at("wall_time_ms").get<double>();
  }
  return result;
}

bool CostsVerify(const Instance& inst, const ResultFile& result) {
  if (!result.allocation) return result.costs.empty();
  return result.costs == AgentCosts(inst, *result.allocation);
}

}  // namespace fairline
