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
#include <memory>
#include <span>
#include <vector>

#include "cantor/rational.hpp"

namespace cantor {

using Digit = std::uint64_t;

/// Pairwise coprime moduli m_1, m_2, ... (stored 0-based) with their
/// cumulative products B_0 = 1, B_j = B_{j-1} * m_j.
///
/// Instances are cheap handles onto immutable shared data; copies compare
/// equal and can be passed between threads freely.
class BaseSequence {
 public:
  /// Validates the moduli. Throws EmptyBase, ModulusTooSmall or NotCoprime.
  static BaseSequence make(std::vector<std::uint64_t> moduli);

  std::size_t depth() const noexcept { return data_->moduli.size(); }

  /// Radix of digit `level` (0-based), i.e. m_{level+1} in 1-based numbering.
  std::uint64_t modulus(std::size_t level) const { return data_->moduli.at(level); }
  std::span<const std::uint64_t> moduli() const noexcept { return data_->moduli; }

  /// B_j for 0 <= j <= depth().
  const Integer& product(std::size_t j) const { return data_->products.at(j); }
  std::span<const Integer> products() const noexcept { return data_->products; }

  friend bool operator==(const BaseSequence& a, const BaseSequence& b) {
    return a.data_ == b.data_ || a.data_->moduli == b.data_->moduli;
  }

 private:
  struct Data {
    std::vector<std::uint64_t> moduli;
    std::vector<Integer> products;
  };
  explicit BaseSequence(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

inline BaseSequence make_base(std::vector<std::uint64_t> moduli) {
  return BaseSequence::make(std::move(moduli));
}

/// Finite Cantor-series digit vector b_0..b_{K-1} with value
/// sum b_j / B_{j+1}. Digit j lies in [0, base.modulus(j)).
class DigitExpansion {
 public:
  /// Throws DepthExceeded when digits outnumber the base, DigitOutOfRange
  /// when a digit is not below its radix.
  DigitExpansion(BaseSequence base, std::vector<Digit> digits);

  const BaseSequence& base() const noexcept { return base_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  Digit operator[](std::size_t j) const { return digits_.at(j); }
  std::size_t depth() const noexcept { return digits_.size(); }

  /// Numerator over B_depth of the value.
  Integer grid_index() const;
  Rational value() const;

  friend bool operator==(const DigitExpansion& a, const DigitExpansion& b) {
    return a.digits_ == b.digits_ && a.base_ == b.base_;
  }

 private:
  BaseSequence base_;
  std::vector<Digit> digits_;
};

/// Half-open grid cell I_index^(level) = [index/B_level, (index+1)/B_level).
struct GridInterval {
  std::size_t level = 0;
  Integer index;
  Rational lower;
  Rational upper;

  Rational length() const { return upper - lower; }
  bool contains(const Rational& x) const { return lower <= x && x < upper; }
};

/// Greedy digit extraction of alpha in [0,1) to `depth` digits. The result
/// satisfies value <= alpha < value + 1/B_depth. Throws OutOfRange or
/// DepthExceeded.
DigitExpansion encode(const Rational& alpha, const BaseSequence& base, std::size_t depth);

Rational decode(const DigitExpansion& digits);

/// Grid cell of `level` containing alpha. Level 0 is the whole of [0,1).
/// Throws OutOfRange or LevelExceeded.
GridInterval interval_of(const Rational& alpha, std::size_t level, const BaseSequence& base);

GridInterval grid_interval(std::size_t level, const Integer& index, const BaseSequence& base);

/// The digit prefix (b_0..b_{level-1}) associated with I_index^(level).
/// Throws IndexOutOfRange or LevelExceeded.
std::vector<Digit> prefix_of_interval(std::size_t level, const Integer& index,
                                      const BaseSequence& base);

/// Index of the level-`level` cell selected by a digit prefix (mixed-radix Horner).
Integer interval_index(std::span<const Digit> prefix, const BaseSequence& base);

}  // namespace cantor
