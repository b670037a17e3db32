// Copyright 2026 The conexp Authors.
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

#include "conexp/error.hpp"

namespace conexp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SpectralRadiusZero: return "SpectralRadiusZero";
    case ErrorKind::BoundaryEigenvector: return "BoundaryEigenvector";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::AmbiguousMargin: return "AmbiguousMargin";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::NotUnitDiagonal: return "NotUnitDiagonal";
    case ErrorKind::NotPD: return "NotPD";
    case ErrorKind::BadAngles: return "BadAngles";
    case ErrorKind::DistanceMismatch: return "DistanceMismatch";
    case ErrorKind::WitnessViolation: return "WitnessViolation";
    case ErrorKind::EqualAngles: return "EqualAngles";
    case ErrorKind::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorKind::NotTracePreserving: return "NotTracePreserving";
    case ErrorKind::FitViolation: return "FitViolation";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace conexp
