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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

/// Failure reasons raised by the library. Every public operation reports
/// errors by throwing cantor::Error carrying one of these codes.
enum class Errc {
  // base_system
  EmptyBase,
  ModulusTooSmall,
  NotCoprime,
  OutOfRange,
  DepthExceeded,
  LevelExceeded,
  IndexOutOfRange,
  // permutations
  NotBijection,
  NotFullCycle,
  DigitOutOfRange,
  ModuliNotCoprime,
  LengthMismatch,
  ModulusMismatch,
  // dynamics
  DepthMismatch,
  // buck_density
  NotACovering,
  NotAPartition,
  BoundsExceedOne,
  BoundBelowDensity,
  PeriodTooLarge,
  // equidistribution
  EquivalenceViolated,
  PointOutOfRange,
  UnknownSource,
  // analysis
  DegenerateDigit,
  NoWitnessAtLevel,
  QuotientMismatch,
  // text input
  ParseError,
};

/// How a failure should be surfaced to a caller such as the CLI.
enum class ErrorClass {
  Validation,   ///< bad input; nothing was computed
  Computation,  ///< input was valid but the computation could not finish
  Falsified,    ///< a mathematical check ran and did not hold
};

std::string_view to_string(Errc code) noexcept;
ErrorClass classify(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cantor
