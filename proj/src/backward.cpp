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

#include "fairline/backward.hpp"

#include <algorithm>

#include "fairline/error.hpp"

namespace fairline {

Allocation BackwardGreedy(const Instance& inst) {
  Allocation alloc(inst.num_taxis());
  int taxi = 0;
  for (int a = inst.num_agents() - 1; a >= 0; --a) {
    if (static_cast<int>(alloc[taxi].size()) == inst.quota(taxi)) {
      if (++taxi == inst.num_taxis()) {
        throw Error(ErrorCode::kNoFeasibleAllocation,
                    "total capacity " + std::to_string(inst.total_capacity()) +
                        " < " + std::to_string(inst.num_agents()) + " agents");
      }
    }
    alloc[taxi].push_back(a);
  }
  for (auto& coalition : alloc) std::reverse(coalition.begin(), coalition.end());
  return alloc;
}

}  // namespace fairline
