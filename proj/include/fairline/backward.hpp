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

#ifndef FAIRLINE_BACKWARD_HPP
#define FAIRLINE_BACKWARD_HPP

#include "fairline/core.hpp"

namespace fairline {

// Fills taxi 0 with the farthest riders, then taxi 1, and so on. The result
// is socially optimal, Nash stable and strongly swap-stable. Throws
// kNoFeasibleAllocation when total capacity is below n. O(n + k).
Allocation BackwardGreedy(const Instance& inst);

}  // namespace fairline

#endif  // FAIRLINE_BACKWARD_HPP
