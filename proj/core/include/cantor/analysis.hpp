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

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cantor/base_system.hpp"
#include "cantor/permutations.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Four points of one grid cell showing T is neither non-decreasing nor
/// non-increasing there: points[0] < points[1] with images[0] < images[1],
/// points[2] < points[3] with images[2] > images[3].
struct MonotonicityWitness {
  std::size_t level = 0;         // cell level s
  Integer interval_index;        // cell index j
  std::size_t digit_level = 0;   // digit whose permutation supplied the pairs
  std::array<Digit, 4> digits{}; // k_1..k_4
  std::array<Rational, 4> points;
  std::array<Rational, 4> images;
};

/// Searches the permutation of digit `level` for an increasing and a
/// decreasing pair and places the points at j/B_s + k_i/B_{s+1}. Images are
/// evaluated with T at the full depth of pv. Throws NoWitnessAtLevel when
/// either pair is missing (identity, or the swap on Z_2), LevelExceeded,
/// IndexOutOfRange.
MonotonicityWitness find_monotonicity_witness(const PermutationVector& pv, std::size_t level,
                                              const Integer& interval_index);

/// As above, but when digit `level` admits no witness, fixes it to 0 and
/// retries one level deeper, at most `descent_budget` times. The points stay
/// inside the original cell.
MonotonicityWitness find_monotonicity_witness_descending(const PermutationVector& pv,
                                                         std::size_t level,
                                                         const Integer& interval_index,
                                                         std::size_t descent_budget);

/// True when the witness inequalities hold under fresh evaluation of T.
bool verify_witness(const PermutationVector& pv, const MonotonicityWitness& w);

/// Slope of T between alpha and alpha_s, the point differing from alpha only
/// in digit s (set to ell).
struct QuotientSample {
  std::size_t level = 0;
  Digit a = 0;
  Digit ell = 0;
  Rational closed_form;  // (pi_s(a) - pi_s(ell)) / (a - ell)
  Rational direct;       // (T(alpha) - T(alpha_s)) / (alpha - alpha_s)
};

/// Computes the quotient both ways. Throws DegenerateDigit (ell == a),
/// DigitOutOfRange, LevelExceeded, QuotientMismatch.
QuotientSample difference_quotient(const PermutationVector& pv, const DigitExpansion& alpha,
                                   std::size_t level, Digit ell);

/// The closed form alone.
Rational closed_form_quotient(const CyclicPermutation& perm, Digit a, Digit ell);

struct LevelProbe {
  std::size_t level = 0;
  Digit a = 0;
  std::vector<std::pair<Digit, Rational>> quotients;  // (ell, quotient) for every ell != a
  bool one_achievable = false;
  /// pi(a) - pi(a-1) when a != 0, else pi(0) - pi(1).
  Integer candidate;
};

struct DerivativeProbe {
  std::vector<LevelProbe> levels;
  bool one_achievable_everywhere = false;
  /// All per-level candidate values coincide.
  bool candidates_stable = false;
};

/// Probes digit levels 0..max_level-1 of alpha (digits past alpha's depth
/// count as 0). Throws LevelExceeded when max_level exceeds pv's depth.
DerivativeProbe derivative_probe(const PermutationVector& pv, const DigitExpansion& alpha,
                                 std::size_t max_level);

}  // namespace cantor
