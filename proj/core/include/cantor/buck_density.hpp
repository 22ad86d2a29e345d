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

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cantor/permutations.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// Union of residue classes r+(M) for r in `residues`, over the naturals.
/// The modulus is not required to be minimal; see normalized().
class PeriodicSet {
 public:
  /// Throws OutOfRange for modulus 0 or a residue >= modulus. Duplicates
  /// are merged.
  PeriodicSet(std::uint64_t modulus, std::vector<std::uint64_t> residues);

  static PeriodicSet naturals() { return PeriodicSet(1, {0}); }
  static PeriodicSet empty() { return PeriodicSet(1, {}); }
  /// Throws PeriodTooLarge when the modulus exceeds 64 bits.
  static PeriodicSet from(const ResidueCondition& rc);

  std::uint64_t modulus() const noexcept { return modulus_; }
  std::span<const std::uint64_t> residues() const noexcept { return residues_; }
  bool is_empty() const noexcept { return residues_.empty(); }

  bool contains(std::uint64_t n) const;

  /// Same set over modulus `m`, which must be a multiple of modulus().
  PeriodicSet expanded(std::uint64_t m) const;
  /// Same set over the least period.
  PeriodicSet normalized() const;
  PeriodicSet complement() const;

  /// Same set of naturals (compared over the lcm of the moduli).
  bool same_set(const PeriodicSet& other) const;

  friend bool operator==(const PeriodicSet&, const PeriodicSet&) = default;

 private:
  std::uint64_t modulus_;
  std::vector<std::uint64_t> residues_;
};

/// Buck density |residues| / M. For a single class r+(m) this is 1/m.
Rational density(const PeriodicSet& ps);

PeriodicSet intersect(const PeriodicSet& a, const PeriodicSet& b);
PeriodicSet unite(const PeriodicSet& a, const PeriodicSet& b);

/// A verified covering and the upper bound sum 1/D_j it gives for mu*.
struct CoveringBound {
  std::vector<ResidueCondition> covering;
  Rational bound;
};

/// Checks that every n in [0, L) with member(n mod target_period) lies in
/// some class of the covering, where L = lcm(target_period, D_1, ...), and
/// reports sum 1/D_j. Throws NotACovering or PeriodTooLarge.
CoveringBound covering_bound(std::uint64_t target_period,
                             const std::function<bool(std::uint64_t)>& member,
                             std::vector<ResidueCondition> covering);

CoveringBound covering_bound(const PeriodicSet& target, std::vector<ResidueCondition> covering);

/// Outcome of the finite-partition measurability criterion.
struct Krit1Verdict {
  bool measurable = false;
  /// Buck measure of each part (equal to its bound when measurable).
  std::vector<Rational> measures;
  Rational bound_sum;
};

/// Disjoint parts covering the naturals whose Buck upper densities sum to at
/// most 1 are Buck measurable, each with measure equal to its bound.
/// Verifies the partition over one lcm period. Throws NotAPartition,
/// BoundsExceedOne, BoundBelowDensity or PeriodTooLarge.
Krit1Verdict krit1_check(std::span<const std::pair<PeriodicSet, Rational>> parts);
/// Uses each part's exact density as its bound.
Krit1Verdict krit1_check(std::span<const PeriodicSet> parts);

/// "r1,r2,...(M)", e.g. "0,3(6)"; "(M)" is the empty set.
PeriodicSet parse_periodic_set(std::string_view text);
std::string to_string(const PeriodicSet& ps);

}  // namespace cantor
