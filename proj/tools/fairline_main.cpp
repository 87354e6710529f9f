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

// Command line front end: check, solve, gen and bench.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairline/backward.hpp"
#include "fairline/core.hpp"
#include "fairline/criteria.hpp"
#include "fairline/desk.hpp"
#include "fairline/ef_cap4.hpp"
#include "fairline/ef_config.hpp"
#include "fairline/ef_consecutive.hpp"
#include "fairline/ef_types.hpp"
#include "fairline/error.hpp"
#include "fairline/generators.hpp"
#include "fairline/io.hpp"
#include "fairline/oracle.hpp"

namespace fairline {
namespace {

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotAPartition = 3;
constexpr int kExitInapplicable = 4;
constexpr int kExitBudget = 5;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kEmptyInput:
    case ErrorCode::kNonPositiveDestination:
    case ErrorCode::kNonPositiveCapacity:
    case ErrorCode::kGroupsNotAPartition:
    case ErrorCode::kUnknownFamily:
      return kExitParse;
    case ErrorCode::kNotAPartition:
      return kExitNotAPartition;
    case ErrorCode::kStrategyInapplicable:
    case ErrorCode::kCapacityTooLarge:
      return kExitInapplicable;
    case ErrorCode::kBudgetExceeded:
      return kExitBudget;
    default:
      return kExitFailure;
  }
}

std::string YesNo(const std::optional<bool>& flag) {
  return flag ? (*flag ? "yes" : "no") : "-";
}

std::string Agent(const Instance& inst, int a) {
  return std::to_string(inst.agent_ids()[a] + 1);
}

void PrintEnvy(std::ostream& out, const Instance& inst, const char* label,
               const EnvyWitness& w) {
  out << "  " << label << ": agent " << Agent(inst, w.envier)
      << " envies agent " << Agent(inst, w.envied) << " ("
      << ToString(w.envier_cost) << " > " << ToString(w.replaced_cost)
      << ")\n";
}

void PrintSummary(std::ostream& out, const Instance& inst,
                  const ResultFile& r) {
  out << "solver: " << r.solver << "\n";
  out << "status: " << SolveStatusName(r.status) << "\n";
  if (r.allocation) {
    // Taxis in input order, agents by input id.
    std::vector<int> taxi_of_input(inst.num_taxis());
    for (int i = 0; i < inst.num_taxis(); ++i) {
      taxi_of_input[inst.taxi_ids()[i]] = i;
    }
    for (int p = 0; p < inst.num_taxis(); ++p) {
      const int i = taxi_of_input[p];
      std::vector<int> ids;
      for (int a : (*r.allocation)[i]) ids.push_back(inst.agent_ids()[a] + 1);
      std::sort(ids.begin(), ids.end());
      out << "taxi " << p + 1 << " (q=" << inst.quota(i) << "):";
      for (int id : ids) out << " " << id;
      out << "\n";
    }
    std::vector<std::string> by_input(inst.num_agents());
    for (int a = 0; a < inst.num_agents(); ++a) {
      by_input[inst.agent_ids()[a]] = ToString(r.costs[a]);
    }
    out << "costs:";
    for (int id = 0; id < inst.num_agents(); ++id) {
      out << " " << id + 1 << ":" << by_input[id];
    }
    out << "\ntotal cost: " << ToString(TotalCost(inst, *r.allocation))
        << "\n";
  }
  if (r.report) {
    const ConceptReport& c = *r.report;
    out << "feasible " << (c.feasible ? "yes" : "no") << "  ef " << YesNo(c.ef)
        << "  ns " << YesNo(c.ns) << "  wss " << YesNo(c.wss) << "  sss "
        << YesNo(c.sss) << "  so " << YesNo(c.so) << "  consecutive "
        << YesNo(c.consecutive) << "  split " << YesNo(c.split_conditions);
    if (c.ef_in_groups) out << "  ef-in-groups " << YesNo(c.ef_in_groups);
    out << "\n";
    if (c.ef_witness) PrintEnvy(out, inst, "ef", *c.ef_witness);
    if (c.ns_witness) {
      const DeviationWitness& w = *c.ns_witness;
      out << "  ns: agent " << Agent(inst, w.agent) << " moves from taxi "
          << inst.taxi_ids()[w.from_taxi] + 1 << " to taxi "
          << inst.taxi_ids()[w.to_taxi] + 1 << " (" << ToString(w.old_cost)
          << " > " << ToString(w.new_cost) << ")\n";
    }
    if (c.wss_witness) PrintEnvy(out, inst, "wss", c.wss_witness->forward);
    if (c.sss_witness) PrintEnvy(out, inst, "sss", c.sss_witness->forward);
    if (c.ef_in_groups_witness) {
      PrintEnvy(out, inst, "ef-in-groups", *c.ef_in_groups_witness);
    }
  }
}

void Emit(const Instance& inst, const ResultFile& result,
          const std::string& json_path) {
  if (json_path == "-") {
    std::cout << SerializeResult(inst, result);
    return;
  }
  PrintSummary(std::cout, inst, result);
  if (!json_path.empty()) {
    WriteTextFile(json_path, SerializeResult(inst, result));
  }
}

ConceptSet ParseConcepts(const std::vector<std::string>& names) {
  if (names.empty()) return ConceptSet::All();
  ConceptSet set = ConceptSet::None();
  const std::map<std::string, bool ConceptSet::*> known = {
      {"ef", &ConceptSet::ef},   {"ns", &ConceptSet::ns},
      {"wss", &ConceptSet::wss}, {"sss", &ConceptSet::sss},
      {"so", &ConceptSet::so},   {"consecutive", &ConceptSet::consecutive},
      {"split", &ConceptSet::split},
  };
  for (const std::string& name : names) {
    auto it = known.find(name);
    if (it == known.end()) {
      throw Error(ErrorCode::kParseError, "unknown concept '" + name + "'");
    }
    set.*(it->second) = true;
  }
  return set;
}

ResultFile Certify(const Instance& inst, std::string solver,
                   std::optional<Allocation> alloc, SolveStatus status,
                   double ms) {
  ResultFile r;
  r.solver = std::move(solver);
  r.status = status;
  r.wall_time_ms = ms;
  if (alloc) {
    r.costs = AgentCosts(inst, *alloc);
    r.report = Evaluate(inst, *alloc);
    r.allocation = std::move(alloc);
  }
  return r;
}

struct SolveFlags {
  std::string instance;
  std::string strategy;
  long long budget_allocs = 20'000'000;
  long long budget_forests = 10'000'000;
  std::string json;
};

struct Outcome {
  std::string solver;
  std::optional<Allocation> alloc;
  SolveStatus status = SolveStatus::kUnknown;
};

Outcome Found(std::string solver, std::optional<Allocation> alloc) {
  const SolveStatus s =
      alloc ? SolveStatus::kFound : SolveStatus::kNoneExists;
  return {std::move(solver), std::move(alloc), s};
}

Outcome Brute(const Instance& inst, const SolveFlags& f) {
  EnumerationBudget budget;
  budget.max_agents = 16;  // the allocation budget is the real guard
  budget.max_allocations = f.budget_allocs;
  budget.dedup_by_isomorphism = true;
  budget.stop_at_first = true;
  const OracleAnswer a = OracleExists(inst, Concept::kEnvyFree, budget);
  return Found("brute", a.witness);
}

Outcome AutoSolve(const Instance& inst, const SolveFlags& f) {
  const int n = inst.num_agents();
  const int k = inst.num_taxis();
  if (k >= n) {
    Allocation singletons(k);
    for (int a = 0; a < n; ++a) singletons[a] = {a};
    return Found("ef-auto/singletons", singletons);
  }
  if (k <= 2) return Found("ef-auto/ef-config", SolveEfConstantTaxis(inst));
  if (inst.capacities().front() <= 4) {
    return Found("ef-auto/ef-cap4", SolveEfCap4(inst));
  }
  if (TypesOf(inst).size() <= 6) {
    TypesSolverOptions options;
    options.max_forests = f.budget_forests;
    return Found("ef-auto/ef-types", SolveEfFptTypes(inst, options));
  }
  try {
    Outcome o = Brute(inst, f);
    o.solver = "ef-auto/brute";
    return o;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kBudgetExceeded) throw;
    return {"ef-auto/brute", std::nullopt, SolveStatus::kUnknown};
  }
}

Outcome RunStrategy(const Instance& inst, const SolveFlags& f) {
  const std::string& s = f.strategy;
  if (s == "backward") {
    try {
      return Found("backward", BackwardGreedy(inst));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoFeasibleAllocation) throw;
      return Found("backward", std::nullopt);
    }
  }
  if (s == "ef-auto") return AutoSolve(inst, f);
  if (s == "ef-config") {
    ConfigurationOptions options;
    options.break_symmetry = true;
    return Found(s, SolveEfConstantTaxis(inst, options));
  }
  if (s == "ef-cap4") {
    if (inst.capacities().front() > 4) {
      throw Error(ErrorCode::kStrategyInapplicable,
                  "ef-cap4 needs every capacity at most 4");
    }
    return Found(s, SolveEfCap4(inst));
  }
  if (s == "ef-types") {
    TypesSolverOptions options;
    options.max_forests = f.budget_forests;
    return Found(s, SolveEfFptTypes(inst, options));
  }
  if (s == "ef-consecutive") return Found(s, SolveEfConsecutive(inst));
  if (s == "brute") return Brute(inst, f);
  throw Error(ErrorCode::kStrategyInapplicable, "unknown strategy '" + s + "'");
}

int Solve(const SolveFlags& f) {
  const InstanceFile file = ParseInstance(ReadTextFile(f.instance));
  const Instance inst = file.ToInstance();
  const auto start = std::chrono::steady_clock::now();
  Outcome o = RunStrategy(inst, f);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  Emit(inst, Certify(inst, o.solver, std::move(o.alloc), o.status, ms),
       f.json);
  return 0;
}

struct CheckFlags {
  std::string instance;
  std::string allocation;
  std::vector<std::string> concepts;
  std::string groups;
  std::string json;
};

int Check(const CheckFlags& f) {
  const InstanceFile file = ParseInstance(ReadTextFile(f.instance));
  const Instance inst = file.ToInstance();
  const Allocation alloc = ParseAllocation(inst, ReadTextFile(f.allocation));
  std::vector<std::vector<int>> groups;
  bool with_groups = false;
  if (!f.groups.empty()) {
    groups = GroupsToSorted(inst, ParseGroups(ReadTextFile(f.groups)));
    with_groups = true;
  } else if (!file.groups.empty()) {
    groups = GroupsToSorted(inst, file.groups);
    with_groups = true;
  }
  const auto start = std::chrono::steady_clock::now();
  ResultFile r;
  r.solver = "check";
  r.status = SolveStatus::kFound;
  r.costs = AgentCosts(inst, alloc);
  r.report = Evaluate(inst, alloc, ParseConcepts(f.concepts),
                      with_groups ? &groups : nullptr);
  r.allocation = alloc;
  r.wall_time_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  Emit(inst, r, f.json);
  return 0;
}

struct GenFlags {
  std::string family;
  std::uint64_t seed = 0;
  GeneratorOptions options;
  std::string out;
};

int Gen(const GenFlags& f) {
  const std::string text =
      SerializeInstance(Generate(f.family, f.seed, f.options));
  if (f.out.empty()) {
    std::cout << text;
  } else {
    WriteTextFile(f.out, text);
  }
  return 0;
}

int Bench(const std::string& suite, const DeskOptions& options) {
  if (suite != "desk") {
    throw Error(ErrorCode::kParseError, "unknown suite '" + suite + "'");
  }
  int failed = 0;
  RunDeskSuite(options, [&](const CriterionResult& r) {
    std::cout << FormatResultLine(r) << std::endl;
    if (!r.passed) ++failed;
  });
  std::cout << (kNumCriteria - failed) << "/" << kNumCriteria
            << " criteria passed\n";
  return failed == 0 ? 0 : kExitFailure;
}

int Main(int argc, char** argv) {
  CLI::App app{"Fair ride allocation on a line"};
  app.require_subcommand(1);

  CheckFlags check;
  CLI::App* check_cmd =
      app.add_subcommand("check", "Evaluate an allocation against concepts");
  check_cmd->add_option("instance", check.instance, "Instance JSON")
      ->required();
  check_cmd->add_option("allocation", check.allocation, "Allocation JSON")
      ->required();
  check_cmd->add_option("--concepts", check.concepts,
                        "Subset of ef,ns,wss,sss,so,consecutive,split")
      ->delimiter(',');
  check_cmd->add_option("--groups", check.groups,
                        "Groups JSON for envy within groups");
  check_cmd->add_option("--json", check.json,
                        "Write the result file here ('-' for stdout only)");

  SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run a solver");
  solve_cmd->add_option("instance", solve.instance, "Instance JSON")
      ->required();
  solve_cmd->add_option("--strategy", solve.strategy, "Solver")
      ->required()
      ->check(CLI::IsMember({"backward", "ef-auto", "ef-config", "ef-cap4",
                             "ef-types", "ef-consecutive", "brute"}));
  solve_cmd->add_option("--budget-allocs", solve.budget_allocs,
                        "Allocation budget for exhaustive search");
  solve_cmd->add_option("--budget-forests", solve.budget_forests,
                        "Star-forest budget for ef-types");
  solve_cmd->add_option("--json", solve.json,
                        "Write the result file here ('-' for stdout only)");

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd
      ->add_option("--family", gen.family,
                   "uniform-types, clustered or paper-example:<id>")
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->required();
  gen_cmd->add_option("--n", gen.options.n, "Agents");
  gen_cmd->add_option("--k", gen.options.k, "Taxis");
  gen_cmd->add_option("--max-q", gen.options.max_q, "Largest capacity");
  gen_cmd->add_option("--types", gen.options.types, "Destination types");
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");

  std::string suite;
  DeskOptions desk;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
  bench_cmd->add_option("--suite", suite, "Suite name")->required();
  bench_cmd->add_option("--seed", desk.seed, "Random seed");
  bench_cmd->add_option("--scale", desk.scale, "Instance count multiplier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*check_cmd) return Check(check);
    if (*solve_cmd) return Solve(solve);
    if (*gen_cmd) return Gen(gen);
    if (*bench_cmd) return Bench(suite, desk);
  } catch (const Error& e) {
    std::cerr << "fairline: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "fairline: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace
}  // namespace fairline

int main(int argc, char** argv) { return fairline::Main(argc, argv); }
