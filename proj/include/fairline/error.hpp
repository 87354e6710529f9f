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

#ifndef FAIRLINE_ERROR_HPP
#define FAIRLINE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fairline {

enum class ErrorCode {
  kEmptyInput,
  kNonPositiveDestination,
  kNonPositiveCapacity,
  kNotAPartition,
  kNonPositivePoint,
  kTaxiIndexOutOfRange,
  kMuTooSmall,
  kCoalitionTooLargeForOracle,
  kInfeasible,
  kNoFeasibleAllocation,
  kGroupsNotAPartition,
  kBudgetExceeded,
  kConfigurationInvalid,
  kCapacityTooLarge,
  kConditionsViolated,
  kBlocksNotAdjacent,
  kParseError,
  kStrategyInapplicable,
  kUnknownFamily,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as this exception; `code()` is stable and is
// what the CLI maps onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fairline

#endif  // FAIRLINE_ERROR_HPP
