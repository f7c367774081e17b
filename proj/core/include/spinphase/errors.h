// Copyright 2026 The spinphase Authors
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

#ifndef SPINPHASE_ERRORS_H_
#define SPINPHASE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinphase {

enum class ErrorCode {
  kInvalidArgument,
  kNonHermitianGenerator,
  kOddParticleNumber,
  kMeanSpinZero,
  kDivergentAtQuadrature,
  kGridTooCoarse,
  kGridMismatch,
  kNoInteriorMinimum,
  kInsufficientData,
  kMagnitudeOverflow,
  kParseError,
};

std::string_view error_code_name(ErrorCode code);

/// True for codes that indicate a numerical failure rather than bad input.
bool is_numerical_failure(ErrorCode code);

/// The single exception type thrown by the library. `code()` identifies the
/// failure; `what()` carries a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinphase

#endif  // SPINPHASE_ERRORS_H_
