/*
   Copyright 2026 The cantor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cantor/error.hpp"

namespace cantor {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyBase: return "EmptyBase";
    case Errc::ModulusTooSmall: return "ModulusTooSmall";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::DepthExceeded: return "DepthExceeded";
    case Errc::LevelExceeded: return "LevelExceeded";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NotBijection: return "NotBijection";
    case Errc::NotFullCycle: return "NotFullCycle";
    case Errc::DigitOutOfRange: return "DigitOutOfRange";
    case Errc::ModuliNotCoprime: return "ModuliNotCoprime";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::DepthMismatch: return "DepthMismatch";
    case Errc::NotACovering: return "NotACovering";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::BoundsExceedOne: return "BoundsExceedOne";
    case Errc::BoundBelowDensity: return "BoundBelowDensity";
    case Errc::PeriodTooLarge: return "PeriodTooLarge";
    case Errc::EquivalenceViolated: return "EquivalenceViolated";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::UnknownSource: return "UnknownSource";
    case Errc::DegenerateDigit: return "DegenerateDigit";
    case Errc::NoWitnessAtLevel: return "NoWitnessAtLevel";
    case Errc::QuotientMismatch: return "QuotientMismatch";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

ErrorClass classify(Errc code) noexcept {
  switch (code) {
    case Errc::EquivalenceViolated:
    case Errc::QuotientMismatch:
    case Errc::NotACovering:
    case Errc::NotAPartition:
    case Errc::BoundsExceedOne:
      return ErrorClass::Falsified;
    case Errc::NoWitnessAtLevel:
    case Errc::PeriodTooLarge:
    case Errc::DepthMismatch:
      return ErrorClass::Computation;
    default:
      return ErrorClass::Validation;
  }
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace cantor
