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
#include <vector>

#include "cantor/base_system.hpp"
#include "cantor/permutations.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// T(x): permutes every digit of x by its level's permutation. The result
/// keeps x's depth, so T is evaluated exactly on the B_depth grid and
/// differs from the infinite-digit map by less than 1/B_depth.
/// Throws DepthMismatch when x is deeper than pv or over a different base.
DigitExpansion apply_map(const PermutationVector& pv, const DigitExpansion& x);

/// Seed and map of an orbit v(n) = T^n(alpha), truncated at the seed's depth.
class OrbitSpec {
 public:
  /// Throws DepthMismatch.
  OrbitSpec(DigitExpansion seed, PermutationVector pv);

  const DigitExpansion& seed() const noexcept { return seed_; }
  const PermutationVector& pv() const noexcept { return pv_; }
  const BaseSequence& base() const noexcept { return pv_.base(); }
  std::size_t depth() const noexcept { return seed_.depth(); }

 private:
  DigitExpansion seed_;
  PermutationVector pv_;
};

struct OrbitPoint {
  Integer index;
  DigitExpansion digits;
  Rational value;
};

/// v(n) by per-digit powers; O(depth) regardless of n.
OrbitPoint orbit_point(const OrbitSpec& spec, std::uint64_t n);
OrbitPoint orbit_point(const OrbitSpec& spec, const Integer& n);

/// Only the digits of v(n), skipping the rational value.
std::vector<Digit> orbit_digits(const OrbitSpec& spec, std::uint64_t n);

/// v(0), ..., v(count-1).
std::vector<OrbitPoint> orbit_prefix(const OrbitSpec& spec, std::uint64_t count);

/// 1/B_level: two points in the same level cell have images whose first
/// `level` digits agree, so their images are within this distance.
/// Throws LevelExceeded.
Rational continuity_bound(const PermutationVector& pv, std::size_t level);

/// Checks the uniform-continuity certificate for a concrete pair: if x and y
/// lie in the same level cell then T(x) and T(y) share their first `level`
/// digits and |T(x) - T(y)| < 1/B_level. Pairs in different cells are
/// vacuously accepted.
bool certify_continuity(const PermutationVector& pv, const DigitExpansion& x,
                        const DigitExpansion& y, std::size_t level);

}  // namespace cantor
