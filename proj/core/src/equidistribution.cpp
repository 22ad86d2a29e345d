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

#include "cantor/equidistribution.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

// Reports hold one record per grid cell; keep that materialisable.
constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 24;

std::uint64_t cell_count(const BaseSequence& base, std::size_t level, std::size_t depth) {
  if (level > depth) {
    throw Error(Errc::LevelExceeded, "level " + std::to_string(level) + " deeper than " +
                                         std::to_string(depth));
  }
  const Integer& b = base.product(level);
  if (b > kMaxCells) {
    throw Error(Errc::PeriodTooLarge, "level " + std::to_string(level) + " has " + to_string(b) +
                                          " cells");
  }
  return static_cast<std::uint64_t>(b);
}

std::uint64_t prefix_cell(std::span<const Digit> digits, std::size_t level, const BaseSequence& base) {
  std::uint64_t index = 0;
  for (std::size_t j = 0; j < level; ++j) index = index * base.modulus(j) + digits[j];
  return index;
}

}  // namespace

LevelReport membership_equivalence(const OrbitSpec& spec, std::size_t level, std::uint64_t sample) {
  spec.pv().require_full_cycles();
  const BaseSequence& base = spec.base();
  const std::uint64_t cells = cell_count(base, level, spec.depth());
  const Integer modulus = base.product(level);
  const auto seed_prefix = spec.seed().digits().first(level);

  LevelReport report;
  report.level = level;
  report.sample = sample;
  report.intervals.reserve(cells);

  // owner[r] = the cell whose index set is r+(B_k)
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> owner(cells, kNone);
  for (std::uint64_t j = 0; j < cells; ++j) {
    const auto cell_prefix = prefix_of_interval(level, j, base);
    ResidueCondition rc = prefix_residue(spec.pv(), seed_prefix, cell_prefix);
    const auto r = static_cast<std::uint64_t>(rc.residue);
    if (owner[r] != kNone) {
      throw Error(Errc::EquivalenceViolated, "cells " + std::to_string(owner[r]) + " and " +
                                                 std::to_string(j) + " share residue " +
                                                 std::to_string(r));
    }
    owner[r] = j;
    report.intervals.push_back(
        IntervalRecord{Integer(j), std::move(rc), 0, Rational(Integer(sample), modulus)});
  }

  for (std::uint64_t n = 0; n < sample; ++n) {
    const OrbitPoint point = orbit_point(spec, n);
    const auto cell = static_cast<std::uint64_t>(interval_of(point.value, level, base).index);
    const std::uint64_t by_residue = owner[n % cells];
    if (cell != by_residue) {
      throw Error(Errc::EquivalenceViolated,
                  "v(" + std::to_string(n) + ") = " + to_string(point.value) + " lies in cell " +
                      std::to_string(cell) + " but n is in the class of cell " +
                      std::to_string(by_residue));
    }
    ++report.intervals[cell].count;
  }
  return report;
}

std::vector<std::uint64_t> interval_counts(const OrbitSpec& spec, std::size_t level,
                                           std::uint64_t sample) {
  const BaseSequence& base = spec.base();
  std::vector<std::uint64_t> counts(cell_count(base, level, spec.depth()), 0);
  for (std::uint64_t n = 0; n < sample; ++n) {
    const auto digits = orbit_digits(spec, n);
    ++counts[prefix_cell(digits, level, base)];
  }
  return counts;
}

std::vector<std::uint64_t> interval_counts(std::span<const Rational> points, std::size_t level,
                                           const BaseSequence& base) {
  std::vector<std::uint64_t> counts(cell_count(base, level, base.depth()), 0);
  for (const auto& x : points) {
    if (x < 0 || x >= 1) throw Error(Errc::PointOutOfRange, to_string(x) + " is not in [0,1)");
    ++counts[static_cast<std::uint64_t>(interval_of(x, level, base).index)];
  }
  return counts;
}

DiscrepancyResult star_discrepancy(std::span<const Rational> points) {
  if (points.empty()) throw Error(Errc::OutOfRange, "star discrepancy of an empty sample");
  std::vector<Rational> sorted(points.begin(), points.end());
  for (const auto& x : sorted) {
    if (x < 0 || x >= 1) throw Error(Errc::PointOutOfRange, to_string(x) + " is not in [0,1)");
  }
  std::sort(sorted.begin(), sorted.end());
  const Integer n(sorted.size());
  Rational worst = 0;
  for (std::size_t i = 1; i <= sorted.size(); ++i) {
    const Rational& x = sorted[i - 1];
    worst = std::max(worst, Rational(Integer(i), n) - x);
    worst = std::max(worst, x - Rational(Integer(i - 1), n));
  }
  return DiscrepancyResult{sorted.size(), worst};
}

Source parse_source(std::string_view name) {
  if (name == "vdc" || name == "van-der-corput" || name == "vandercorput") return Source::VanDerCorput;
  if (name == "kronecker" || name == "golden") return Source::Kronecker;
  if (name == "grid") return Source::Grid;
  throw Error(Errc::UnknownSource, "'" + std::string(name) + "' (expected vdc, kronecker or grid)");
}

std::string_view to_string(Source source) noexcept {
  switch (source) {
    case Source::VanDerCorput: return "vdc";
    case Source::Kronecker: return "kronecker";
    case Source::Grid: return "grid";
  }
  return "unknown";
}

Rational van_der_corput(std::uint64_t n) {
  Integer numerator = 0;
  Integer denominator = 1;
  for (; n != 0; n >>= 1) {
    numerator = numerator * 2 + (n & 1);
    denominator *= 2;
  }
  return Rational(numerator, denominator);
}

std::vector<Rational> source_points(Source source, std::uint64_t count, const BaseSequence& base,
                                    std::size_t depth) {
  std::vector<Rational> points;
  points.reserve(count);
  switch (source) {
    case Source::VanDerCorput:
      for (std::uint64_t n = 0; n < count; ++n) points.push_back(van_der_corput(n));
      break;
    case Source::Kronecker: {
      // F_91 / F_90 approximates the golden ratio to within 1e-37.
      Integer prev = 0, cur = 1;  // F_0, F_1
      for (int i = 1; i < 90; ++i) {
        Integer next = prev + cur;
        prev = std::move(cur);
        cur = std::move(next);
      }
      const Integer f90 = cur;
      const Integer f91 = prev + cur;
      for (std::uint64_t n = 0; n < count; ++n) {
        const Integer scaled = f91 * n;
        points.emplace_back(scaled % f90, f90);
      }
      break;
    }
    case Source::Grid: {
      if (depth > base.depth()) {
        throw Error(Errc::DepthExceeded, "grid depth " + std::to_string(depth));
      }
      const Integer& b = base.product(depth);
      for (std::uint64_t n = 0; n < count; ++n) points.emplace_back(Integer(n) % b, b);
      break;
    }
  }
  return points;
}

PreservationReport ud_preservation_probe(const PermutationVector& pv, Source source,
                                         std::uint64_t sample, std::size_t level) {
  const BaseSequence& base = pv.base();
  const std::size_t depth = pv.levels();
  const std::uint64_t cells = cell_count(base, level, depth);
  if (sample < cells) {
    throw Error(Errc::OutOfRange, "sample " + std::to_string(sample) + " smaller than the " +
                                      std::to_string(cells) + " cells of level " +
                                      std::to_string(level));
  }
  PreservationReport report;
  report.source = source;
  report.level = level;
  report.sample = sample;

  const std::vector<Rational> input = source_points(source, sample, base, depth);
  std::vector<Rational> image;
  image.reserve(input.size());
  for (const auto& x : input) image.push_back(apply_map(pv, encode(x, base, depth)).value());

  report.input = star_discrepancy(input);
  report.image = star_discrepancy(image);
  report.input_counts = interval_counts(input, level, base);
  report.image_counts = interval_counts(image, level, base);
  return report;
}

bool permutes_grid(const PermutationVector& pv, std::size_t depth) {
  const BaseSequence& base = pv.base();
  const std::uint64_t cells = cell_count(base, depth, pv.levels());
  std::vector<bool> hit(cells, false);
  for (std::uint64_t j = 0; j < cells; ++j) {
    const DigitExpansion x(base, prefix_of_interval(depth, j, base));
    const auto target = static_cast<std::uint64_t>(apply_map(pv, x).grid_index());
    if (hit[target]) return false;
    hit[target] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace cantor
