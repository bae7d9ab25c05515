// Copyright 2026 The ecss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ECSS_ERROR_H_
#define ECSS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecss {

enum class ErrorCode {
  kSelfLoop,
  kParallelEdge,
  kVertexOutOfRange,
  kGraphMismatch,
  kPreconditionViolated,
  kInternalInvariant,
  kNoCoverExists,
  kStructureViolation,
  kInfeasible,
  kTooLarge,
  kEpsilonOutOfRange,
  kGenerationFailed,
  kParseError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported with this exception. The message names
// the offending object (edge pair, vertex, component, witness subgraph).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ecss

#endif  // ECSS_ERROR_H_
