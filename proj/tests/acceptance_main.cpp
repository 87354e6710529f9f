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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any criterion fails. Optional arguments: criterion ids to run.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "fairline/desk.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) {
    for (int id = 1; id <= fairline::kNumCriteria; ++id) ids.push_back(id);
  }
  int failed = 0;
  for (int id : ids) {
    const fairline::CriterionResult r = fairline::RunCriterion(id);
    std::cout << fairline::FormatResultLine(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (ids.size() - failed) << "/" << ids.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
