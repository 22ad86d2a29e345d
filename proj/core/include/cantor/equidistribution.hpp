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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "cantor/dynamics.hpp"
#include "cantor/permutations.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// One grid cell I_j^(k) and the index set of orbit points that land in it.
struct IntervalRecord {
  Integer index;
  ResidueCondition residue;  // n with v(n) in the cell are exactly residue+(B_k)
  std::uint64_t count = 0;   // orbit points with n < N in the cell
  Rational expected;         // N / B_k
};

struct LevelReport {
  std::size_t level = 0;
  std::uint64_t sample = 0;
  std::vector<IntervalRecord> intervals;
};

/// For each cell I_j^(k), derives the residue class r_{j,k}+(B_k) from the
/// seed's prefix and the cell's prefix, then checks for every n < N that
/// v(n) lies in the cell iff n = r_{j,k} (mod B_k). Cell membership is
/// decided from the exact value of v(n), independently of the digits used
/// to derive the residues.
/// Throws NotFullCycle, LevelExceeded, PeriodTooLarge, EquivalenceViolated.
LevelReport membership_equivalence(const OrbitSpec& spec, std::size_t level,
                                   std::uint64_t sample);

/// Number of n < N with v(n) in I_j^(k), for every j < B_k.
/// Throws LevelExceeded or PeriodTooLarge.
std::vector<std::uint64_t> interval_counts(const OrbitSpec& spec, std::size_t level,
                                           std::uint64_t sample);

/// Counts of arbitrary points in [0,1) per level-k cell.
std::vector<std::uint64_t> interval_counts(std::span<const Rational> points, std::size_t level,
                                           const BaseSequence& base);

struct DiscrepancyResult {
  std::uint64_t sample = 0;
  Rational d_star;
};

/// Exact star discrepancy, max_i max(i/N - x_(i), x_(i) - (i-1)/N) over the
/// sorted sample. Throws PointOutOfRange for points outside [0,1) and
/// OutOfRange for an empty sample.
DiscrepancyResult star_discrepancy(std::span<const Rational> points);

enum class Source { VanDerCorput, Kronecker, Grid };

/// Accepts "vdc"/"van-der-corput", "kronecker"/"golden", "grid".
/// Throws UnknownSource.
Source parse_source(std::string_view name);
std::string_view to_string(Source source) noexcept;

/// First N points of a classical u.d. sequence as exact rationals:
/// van der Corput base 2; Kronecker {n * phi} with phi ~ F_91/F_90; the
/// B_depth grid (n mod B_depth)/B_depth.
std::vector<Rational> source_points(Source source, std::uint64_t count,
                                    const BaseSequence& base, std::size_t depth);

/// Radical inverse of n in base 2.
Rational van_der_corput(std::uint64_t n);

struct PreservationReport {
  Source source = Source::Grid;
  std::size_t level = 0;
  std::uint64_t sample = 0;
  DiscrepancyResult input;
  DiscrepancyResult image;
  std::vector<std::uint64_t> input_counts;
  std::vector<std::uint64_t> image_counts;
};

/// Applies T truncated at the full depth of pv to the first N source points
/// and compares discrepancy and level-k cell counts of input and image.
/// This is evidence only. Throws LevelExceeded, OutOfRange (N < B_k).
PreservationReport ud_preservation_probe(const PermutationVector& pv, Source source,
                                         std::uint64_t sample, std::size_t level);

/// True when T at depth `depth` maps the grid {j/B_depth} onto itself.
bool permutes_grid(const PermutationVector& pv, std::size_t depth);

}  // namespace cantor
