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
#include <vector>

#include "cantor/base_system.hpp"
#include "cantor/rational.hpp"

namespace cantor {

/// A permutation of Z_m stored in one-line image notation, with its cycle
/// structure precomputed so that powers and discrete logarithms are O(1).
///
/// make() accepts only single m-cycles. unchecked() accepts any bijection
/// and exists for the plain map T, which does not need full cycles;
/// discrete_log and everything built on it reject such permutations.
class CyclicPermutation {
 public:
  /// Throws LengthMismatch, NotBijection or NotFullCycle.
  static CyclicPermutation make(std::uint64_t modulus, std::vector<Digit> image);
  /// Throws LengthMismatch or NotBijection.
  static CyclicPermutation unchecked(std::uint64_t modulus, std::vector<Digit> image);
  /// Builds the permutation whose single cycle is (c_0 c_1 ... c_{m-1}),
  /// i.e. c_i -> c_{i+1}. The cycle must list every element of Z_m once.
  static CyclicPermutation from_cycle(std::uint64_t modulus, std::span<const Digit> cycle);

  /// b -> b + 1 mod m.
  static CyclicPermutation shift(std::uint64_t modulus);
  static CyclicPermutation identity(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return image_.size(); }
  std::span<const Digit> image() const noexcept { return image_; }

  bool is_full_cycle() const noexcept { return cycle_count_ == 1; }
  bool is_identity() const noexcept { return cycle_count_ == image_.size(); }

  /// pi(b). Throws DigitOutOfRange.
  Digit operator()(Digit b) const;

  /// pi^n(b), for any n >= 0. Throws DigitOutOfRange.
  Digit power(std::uint64_t n, Digit b) const;
  Digit power(const Integer& n, Digit b) const;

  /// The unique k in [0, m) with pi^n(r) = s <=> n = k (mod m).
  /// Throws NotFullCycle or DigitOutOfRange.
  std::uint64_t discrete_log(Digit r, Digit s) const;

  friend bool operator==(const CyclicPermutation& a, const CyclicPermutation& b) {
    return a.image_ == b.image_;
  }

 private:
  explicit CyclicPermutation(std::vector<Digit> image);
  void check_digit(Digit b) const;
  Digit step(Digit b, std::uint64_t steps) const;

  std::vector<Digit> image_;
  // Elements listed cycle by cycle, each cycle in pi-order.
  std::vector<Digit> cycles_;
  std::vector<std::uint64_t> cycle_start_;   // per element: offset of its cycle in cycles_
  std::vector<std::uint64_t> cycle_length_;  // per element
  std::vector<std::uint64_t> position_;      // per element: offset within its cycle
  std::size_t cycle_count_ = 0;
};

inline CyclicPermutation make_cyclic(std::uint64_t modulus, std::vector<Digit> image) {
  return CyclicPermutation::make(modulus, std::move(image));
}

inline Digit power_apply(const CyclicPermutation& perm, std::uint64_t n, Digit b) {
  return perm.power(n, b);
}

inline std::uint64_t discrete_log(const CyclicPermutation& perm, Digit r, Digit s) {
  return perm.discrete_log(r, s);
}

/// The set {n : n = residue (mod modulus)}, 0 <= residue < modulus.
struct ResidueCondition {
  Integer residue;
  Integer modulus;

  bool contains(const Integer& n) const;

  friend bool operator==(const ResidueCondition&, const ResidueCondition&) = default;
};

/// Normalises residue into [0, modulus). Throws OutOfRange for modulus < 1.
ResidueCondition make_residue(const Integer& residue, const Integer& modulus);

/// Solves a system of congruences with pairwise coprime moduli. The empty
/// system gives 0 (mod 1). Throws ModuliNotCoprime.
ResidueCondition combine_crt(std::span<const ResidueCondition> conditions);

/// Inverse of a modulo m; throws ModuliNotCoprime when gcd(a, m) != 1.
Integer inverse_mod(const Integer& a, const Integer& m);

/// One permutation per digit level of a base; perms[j] acts on Z_{moduli[j]}.
class PermutationVector {
 public:
  /// Throws LengthMismatch (count differs from base depth) or ModulusMismatch.
  PermutationVector(BaseSequence base, std::vector<CyclicPermutation> perms);

  static PermutationVector shifts(const BaseSequence& base);
  static PermutationVector identities(const BaseSequence& base);

  const BaseSequence& base() const noexcept { return base_; }
  std::size_t levels() const noexcept { return perms_.size(); }
  const CyclicPermutation& operator[](std::size_t j) const { return perms_.at(j); }
  std::span<const CyclicPermutation> perms() const noexcept { return perms_; }

  bool all_full_cycles() const noexcept;
  /// Throws NotFullCycle naming the first offending level.
  void require_full_cycles() const;

 private:
  BaseSequence base_;
  std::vector<CyclicPermutation> perms_;
};

/// Residue class of all n with pi_i^n(from[i]) = to[i] for every i < j,
/// where j = from.size(); the modulus is B_j. Throws LengthMismatch,
/// DepthExceeded, DigitOutOfRange or NotFullCycle.
ResidueCondition prefix_residue(const PermutationVector& pv, std::span<const Digit> from,
                                std::span<const Digit> to);

}  // namespace cantor
