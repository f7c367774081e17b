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

#include "spinphase/errors.h"

namespace spinphase {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonHermitianGenerator: return "NonHermitianGenerator";
    case ErrorCode::kOddParticleNumber: return "OddParticleNumber";
    case ErrorCode::kMeanSpinZero: return "MeanSpinZero";
    case ErrorCode::kDivergentAtQuadrature: return "DivergentAtQuadrature";
    case ErrorCode::kGridTooCoarse: return "GridTooCoarse";
    case ErrorCode::kGridMismatch: return "GridMismatch";
    case ErrorCode::kNoInteriorMinimum: return "NoInteriorMinimum";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kMagnitudeOverflow: return "MagnitudeOverflow";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_numerical_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonHermitianGenerator:
    case ErrorCode::kMeanSpinZero:
    case ErrorCode::kDivergentAtQuadrature:
    case ErrorCode::kNoInteriorMinimum:
    case ErrorCode::kMagnitudeOverflow:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace spinphase
