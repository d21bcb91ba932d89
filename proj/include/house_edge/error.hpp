// Copyright 2026 The house-edge Authors
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

#ifndef HOUSE_EDGE_ERROR_HPP_
#define HOUSE_EDGE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace house_edge {

enum class ErrorCode {
  kInvalidParameters,
  kPartsMismatch,
  kInvalidProbability,
  kDegeneratePushOnly,
  kCoherentSystem,
  kIllegalSubset,
  kInvalidPoint,
  kInvalidPaytable,
  kInvalidTicket,
  kInvalidWayTicket,
  kNoWinners,
  kDuplicateCard,
  kInvalidSignature,
  kInvalidTotal,
  kUnreachableState,
  kInvalidCommission,
  kUnsolvedGame,
  kDegenerateGame,
  kInconsistentDeck,
  kIllegalAction,
  kSystemStopped,
  kLimitExceeded,
  kNonDyadicInput,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported with this exception type; `code()`
// identifies the failure class named in the module contracts.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace house_edge

#endif  // HOUSE_EDGE_ERROR_HPP_
