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

#include "cantor/base_system.hpp"

#include <numeric>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

BaseSequence BaseSequence::make(std::vector<std::uint64_t> moduli) {
  if (moduli.empty()) throw Error(Errc::EmptyBase, "at least one modulus is required");
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (moduli[i] < 2) {
      throw Error(Errc::ModulusTooSmall,
                  "modulus " + std::to_string(moduli[i]) + " at level " + std::to_string(i));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(moduli[i], moduli[j]) != 1) {
        throw Error(Errc::NotCoprime, "moduli " + std::to_string(moduli[j]) + " and " +
                                          std::to_string(moduli[i]) + " share a factor");
      }
    }
  }
  Data data;
  data.products.reserve(moduli.size() + 1);
  data.products.emplace_back(1);
  for (auto m : moduli) data.products.push_back(data.products.back() * m);
  data.moduli = std::move(moduli);
  return BaseSequence(std::make_shared<const Data>(std::move(data)));
}

DigitExpansion::DigitExpansion(BaseSequence base, std::vector<Digit> digits)
    : base_(std::move(base)), digits_(std::move(digits)) {
  if (digits_.size() > base_.depth()) {
    throw Error(Errc::DepthExceeded, std::to_string(digits_.size()) + " digits over a base of depth " +
                                         std::to_string(base_.depth()));
  }
  for (std::size_t j = 0; j < digits_.size(); ++j) {
    if (digits_[j] >= base_.modulus(j)) {
      throw Error(Errc::DigitOutOfRange, "digit " + std::to_string(digits_[j]) + " at level " +
                                             std::to_string(j) + " (radix " +
                                             std::to_string(base_.modulus(j)) + ")");
    }
  }
}

Integer DigitExpansion::grid_index() const { return interval_index(digits_, base_); }

Rational DigitExpansion::value() const { return decode(*this); }

Integer interval_index(std::span<const Digit> prefix, const BaseSequence& base) {
  Integer index = 0;
  for (std::size_t j = 0; j < prefix.size(); ++j) {
    index *= base.modulus(j);
    index += prefix[j];
  }
  return index;
}

DigitExpansion encode(const Rational& alpha, const BaseSequence& base, std::size_t depth) {
  if (alpha < 0 || alpha >= 1) {
    throw Error(Errc::OutOfRange, to_string(alpha) + " is not in [0,1)");
  }
  if (depth > base.depth()) {
    throw Error(Errc::DepthExceeded, "depth " + std::to_string(depth) + " over a base of depth " +
                                         std::to_string(base.depth()));
  }
  std::vector<Digit> digits;
  digits.reserve(depth);
  Rational x = alpha;
  for (std::size_t j = 0; j < depth; ++j) {
    const Rational scaled = x * base.modulus(j);
    const Integer b = floor(scaled);
    digits.push_back(static_cast<Digit>(b));
    x = scaled - b;
  }
  return DigitExpansion(base, std::move(digits));
}

Rational decode(const DigitExpansion& digits) {
  return Rational(digits.grid_index(), digits.base().product(digits.depth()));
}

GridInterval grid_interval(std::size_t level, const Integer& index, const BaseSequence& base) {
  if (level > base.depth()) {
    throw Error(Errc::LevelExceeded, "level " + std::to_string(level) + " over a base of depth " +
                                         std::to_string(base.depth()));
  }
  const Integer& b = base.product(level);
  if (index < 0 || index >= b) {
    throw Error(Errc::IndexOutOfRange, "index " + to_string(index) + " at level " +
                                           std::to_string(level) + " (B = " + to_string(b) + ")");
  }
  return GridInterval{level, index, Rational(index, b), Rational(index + 1, b)};
}

GridInterval interval_of(const Rational& alpha, std::size_t level, const BaseSequence& base) {
  if (alpha < 0 || alpha >= 1) {
    throw Error(Errc::OutOfRange, to_string(alpha) + " is not in [0,1)");
  }
  if (level > base.depth()) {
    throw Error(Errc::LevelExceeded, "level " + std::to_string(level) + " over a base of depth " +
                                         std::to_string(base.depth()));
  }
  return grid_interval(level, floor(alpha * base.product(level)), base);
}

std::vector<Digit> prefix_of_interval(std::size_t level, const Integer& index,
                                      const BaseSequence& base) {
  grid_interval(level, index, base);  // validates
  std::vector<Digit> prefix(level);
  Integer rest = index;
  for (std::size_t j = level; j-- > 0;) {
    const std::uint64_t m = base.modulus(j);
    prefix[j] = static_cast<Digit>(rest % m);
    rest /= m;
  }
  return prefix;
}

}  // namespace cantor
