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

// Thin bindings. Rationals cross the boundary as strings ("p/q", "inf"); the
// Python package turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fairline/backward.hpp"
#include "fairline/core.hpp"
#include "fairline/criteria.hpp"
#include "fairline/ef_cap4.hpp"
#include "fairline/ef_config.hpp"
#include "fairline/ef_consecutive.hpp"
#include "fairline/ef_types.hpp"
#include "fairline/error.hpp"
#include "fairline/generators.hpp"
#include "fairline/io.hpp"
#include "fairline/oracle.hpp"

namespace py = pybind11;
using namespace fairline;

namespace {

std::vector<Rational> ParseAll(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(ParseRational(t));
  return out;
}

std::vector<std::string> Strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  for (const Rational& v : values) out.push_back(ToString(v));
  return out;
}

std::vector<std::string> Strings(const std::vector<Cost>& values) {
  std::vector<std::string> out;
  for (const Cost& v : values) out.push_back(ToString(v));
  return out;
}

Concept ConceptNamed(const std::string& name) {
  static const std::pair<const char*, Concept> kNames[] = {
      {"ef", Concept::kEnvyFree},
      {"ns", Concept::kNashStable},
      {"wss", Concept::kWeakSwapStable},
      {"sss", Concept::kStrongSwapStable},
      {"so", Concept::kSociallyOptimal},
      {"consecutive", Concept::kConsecutive},
      {"split", Concept::kSplitConditions},
  };
  for (const auto& [n, c] : kNames) {
    if (name == n) return c;
  }
  throw Error(ErrorCode::kParseError, "unknown concept '" + name + "'");
}

py::dict ReportDict(const ConceptReport& r) {
  py::dict d;
  d["feasible"] = r.feasible;
  auto put = [&](const char* key, const std::optional<bool>& v) {
    if (v) d[key] = *v;
  };
  put("ef", r.ef);
  put("ns", r.ns);
  put("wss", r.wss);
  put("sss", r.sss);
  put("so", r.so);
  put("consecutive", r.consecutive);
  put("split_conditions", r.split_conditions);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact fair cost sharing for shared rides on a line.";

  static py::exception<Error> error(m, "FairlineError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(ErrorCodeName(e.code())),
                                      std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def(py::init([](const std::vector<std::string>& destinations,
                       const std::vector<int>& capacities) {
             const std::vector<Rational> x = ParseAll(destinations);
             return Instance::Load(x, capacities);
           }),
           py::arg("destinations"), py::arg("capacities"))
      .def_static("from_json",
                  [](const std::string& text) {
                    return ParseInstance(text).ToInstance();
                  })
      .def_property_readonly("num_agents", &Instance::num_agents)
      .def_property_readonly("num_taxis", &Instance::num_taxis)
      .def_property_readonly(
          "destinations",
          [](const Instance& i) { return Strings(i.destinations()); })
      .def_property_readonly("capacities", &Instance::capacities)
      .def_property_readonly("agent_ids", &Instance::agent_ids)
      .def_property_readonly("taxi_ids", &Instance::taxi_ids);

  m.def("from_ids", &AllocationFromIds, py::arg("instance"), py::arg("ids"),
        "Sorted allocation from 1-based input ids per input taxi.");
  m.def("phi",
        [](const std::vector<std::string>& destinations, const std::string& x) {
          const std::vector<Rational> d = ParseAll(destinations);
          return ToString(Phi(d, ParseRational(x)));
        });
  m.def("costs", [](const Instance& i, const Allocation& a) {
    return Strings(AgentCosts(i, a));
  });
  m.def("total_cost", [](const Instance& i, const Allocation& a) {
    return ToString(TotalCost(i, a));
  });
  m.def("is_feasible", &IsFeasible);
  m.def("envies", &Envies);
  m.def("evaluate", [](const Instance& i, const Allocation& a) {
    return ReportDict(Evaluate(i, a));
  });
  m.def("satisfies", [](const Instance& i, const Allocation& a,
                        const std::string& c) {
    return Satisfies(i, a, ConceptNamed(c));
  });

  m.def("backward_greedy", &BackwardGreedy);
  m.def("solve_ef_config", [](const Instance& i) {
    ConfigurationOptions options;
    options.break_symmetry = true;
    return SolveEfConstantTaxis(i, options);
  });
  m.def("solve_ef_cap4", [](const Instance& i) { return SolveEfCap4(i); });
  m.def(
      "solve_ef_types",
      [](const Instance& i, long long max_forests) {
        TypesSolverOptions options;
        options.max_forests = max_forests;
        return SolveEfFptTypes(i, options);
      },
      py::arg("instance"), py::arg("max_forests") = 10'000'000LL);
  m.def("solve_ef_consecutive",
        [](const Instance& i) { return SolveEfConsecutive(i); });

  m.def(
      "oracle",
      [](const Instance& i, const std::string& predicate, int max_agents,
         bool dedup, bool stop_at_first) {
        EnumerationBudget budget;
        budget.max_agents = max_agents;
        budget.dedup_by_isomorphism = dedup;
        budget.stop_at_first = stop_at_first;
        OracleAnswer a = OracleExists(i, ConceptNamed(predicate), budget);
        py::dict d;
        d["exists"] = a.exists;
        d["count"] = a.count;
        d["witness"] = a.witness;
        if (a.optimum) d["optimum"] = ToString(*a.optimum);
        return d;
      },
      py::arg("instance"), py::arg("predicate"), py::arg("max_agents") = 9,
      py::arg("dedup") = false, py::arg("stop_at_first") = false);

  m.def(
      "generate_json",
      [](const std::string& family, std::uint64_t seed, int n, int k,
         int max_q, int types) {
        GeneratorOptions opts;
        opts.n = n;
        opts.k = k;
        opts.max_q = max_q;
        opts.types = types;
        return SerializeInstance(Generate(family, seed, opts));
      },
      py::arg("family"), py::arg("seed"), py::arg("n") = 6, py::arg("k") = 3,
      py::arg("max_q") = 3, py::arg("types") = 3);
  m.def("worked_ids", &PaperExampleIds);
  m.def("worked_allocation",
        [](const std::string& id) { return PaperAllocation(id); });
}
