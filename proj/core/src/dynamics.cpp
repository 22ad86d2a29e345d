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

#include "cantor/dynamics.hpp"

#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

void check_compatible(const PermutationVector& pv, const DigitExpansion& x) {
  if (!(x.base() == pv.base())) {
    throw Error(Errc::DepthMismatch, "expansion and permutation vector use different bases");
  }
  if (x.depth() > pv.levels()) {
    throw Error(Errc::DepthMismatch, "expansion of depth " + std::to_string(x.depth()) + " over " +
                                         std::to_string(pv.levels()) + " permutation levels");
  }
}

}  // namespace

DigitExpansion apply_map(const PermutationVector& pv, const DigitExpansion& x) {
  check_compatible(pv, x);
  std::vector<Digit> out(x.depth());
  for (std::size_t j = 0; j < x.depth(); ++j) out[j] = pv[j](x[j]);
  return DigitExpansion(x.base(), std::move(out));
}

OrbitSpec::OrbitSpec(DigitExpansion seed, PermutationVector pv)
    : seed_(std::move(seed)), pv_(std::move(pv)) {
  check_compatible(pv_, seed_);
}

std::vector<Digit> orbit_digits(const OrbitSpec& spec, std::uint64_t n) {
  const auto seed = spec.seed().digits();
  std::vector<Digit> out(seed.size());
  for (std::size_t j = 0; j < seed.size(); ++j) out[j] = spec.pv()[j].power(n, seed[j]);
  return out;
}

OrbitPoint orbit_point(const OrbitSpec& spec, std::uint64_t n) {
  DigitExpansion digits(spec.base(), orbit_digits(spec, n));
  Rational value = digits.value();
  return OrbitPoint{Integer(n), std::move(digits), std::move(value)};
}

OrbitPoint orbit_point(const OrbitSpec& spec, const Integer& n) {
  if (n < 0) throw Error(Errc::OutOfRange, "negative orbit index " + to_string(n));
  const auto seed = spec.seed().digits();
  std::vector<Digit> out(seed.size());
  for (std::size_t j = 0; j < seed.size(); ++j) out[j] = spec.pv()[j].power(n, seed[j]);
  DigitExpansion digits(spec.base(), std::move(out));
  Rational value = digits.value();
  return OrbitPoint{n, std::move(digits), std::move(value)};
}

std::vector<OrbitPoint> orbit_prefix(const OrbitSpec& spec, std::uint64_t count) {
  std::vector<OrbitPoint> points;
  points.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) points.push_back(orbit_point(spec, n));
  return points;
}

Rational continuity_bound(const PermutationVector& pv, std::size_t level) {
  if (level > pv.levels()) {
    throw Error(Errc::LevelExceeded, "level " + std::to_string(level) + " over " +
                                         std::to_string(pv.levels()) + " levels");
  }
  return Rational(Integer(1), pv.base().product(level));
}

bool certify_continuity(const PermutationVector& pv, const DigitExpansion& x,
                        const DigitExpansion& y, std::size_t level) {
  const Rational bound = continuity_bound(pv, level);
  if (level > x.depth() || level > y.depth()) {
    throw Error(Errc::LevelExceeded, "level " + std::to_string(level) + " deeper than the expansions");
  }
  for (std::size_t j = 0; j < level; ++j) {
    if (x[j] != y[j]) return true;  // different cells
  }
  const DigitExpansion tx = apply_map(pv, x);
  const DigitExpansion ty = apply_map(pv, y);
  for (std::size_t j = 0; j < level; ++j) {
    if (tx[j] != ty[j]) return false;
  }
  const Rational gap = tx.value() - ty.value();
  return (gap < 0 ? Rational(-gap) : gap) < bound;
}

}  // namespace cantor
