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

#include "fairline/error.hpp"

namespace fairline {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNonPositiveDestination: return "NonPositiveDestination";
    case ErrorCode::kNonPositiveCapacity: return "NonPositiveCapacity";
    case ErrorCode::kNotAPartition: return "NotAPartition";
    case ErrorCode::kNonPositivePoint: return "NonPositivePoint";
    case ErrorCode::kTaxiIndexOutOfRange: return "TaxiIndexOutOfRange";
    case ErrorCode::kMuTooSmall: return "MuTooSmall";
    case ErrorCode::kCoalitionTooLargeForOracle:
      return "CoalitionTooLargeForOracle";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kNoFeasibleAllocation: return "NoFeasibleAllocation";
    case ErrorCode::kGroupsNotAPartition: return "GroupsNotAPartition";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kConfigurationInvalid: return "ConfigurationInvalid";
    case ErrorCode::kCapacityTooLarge: return "CapacityTooLarge";
    case ErrorCode::kConditionsViolated: return "ConditionsViolated";
    case ErrorCode::kBlocksNotAdjacent: return "BlocksNotAdjacent";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kStrategyInapplicable: return "StrategyInapplicable";
    case ErrorCode::kUnknownFamily: return "UnknownFamily";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
      code_(code) {}

}  // namespace fairline
