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

#include "cantor/permutations.hpp"

#include <numeric>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

void check_image(std::uint64_t modulus, const std::vector<Digit>& image) {
  if (modulus < 1) throw Error(Errc::ModulusTooSmall, "permutation modulus must be positive");
  if (image.size() != modulus) {
    throw Error(Errc::LengthMismatch, "image of length " + std::to_string(image.size()) +
                                          " for modulus " + std::to_string(modulus));
  }
  std::vector<bool> seen(modulus, false);
  for (Digit b : image) {
    if (b >= modulus || seen[b]) {
      throw Error(Errc::NotBijection, "value " + std::to_string(b) + " is out of range or repeated");
    }
    seen[b] = true;
  }
}

}  // namespace

CyclicPermutation::CyclicPermutation(std::vector<Digit> image) : image_(std::move(image)) {
  const std::size_t m = image_.size();
  cycles_.reserve(m);
  cycle_start_.assign(m, 0);
  cycle_length_.assign(m, 0);
  position_.assign(m, 0);
  std::vector<bool> visited(m, false);
  for (Digit first = 0; first < m; ++first) {
    if (visited[first]) continue;
    const std::uint64_t start = cycles_.size();
    Digit b = first;
    do {
      visited[b] = true;
      position_[b] = cycles_.size() - start;
      cycle_start_[b] = start;
      cycles_.push_back(b);
      b = image_[b];
    } while (b != first);
    const std::uint64_t length = cycles_.size() - start;
    for (std::uint64_t i = start; i < cycles_.size(); ++i) cycle_length_[cycles_[i]] = length;
    ++cycle_count_;
  }
}

CyclicPermutation CyclicPermutation::make(std::uint64_t modulus, std::vector<Digit> image) {
  check_image(modulus, image);
  CyclicPermutation perm(std::move(image));
  if (!perm.is_full_cycle()) {
    throw Error(Errc::NotFullCycle, "permutation of Z_" + std::to_string(modulus) + " splits into " +
                                        std::to_string(perm.cycle_count_) + " cycles");
  }
  return perm;
}

CyclicPermutation CyclicPermutation::unchecked(std::uint64_t modulus, std::vector<Digit> image) {
  check_image(modulus, image);
  return CyclicPermutation(std::move(image));
}

CyclicPermutation CyclicPermutation::from_cycle(std::uint64_t modulus,
                                                std::span<const Digit> cycle) {
  if (cycle.size() != modulus) {
    throw Error(Errc::LengthMismatch, "cycle of length " + std::to_string(cycle.size()) +
                                          " for modulus " + std::to_string(modulus));
  }
  check_image(modulus, std::vector<Digit>(cycle.begin(), cycle.end()));
  std::vector<Digit> image(modulus);
  for (std::size_t i = 0; i < cycle.size(); ++i) image[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return CyclicPermutation(std::move(image));
}

CyclicPermutation CyclicPermutation::shift(std::uint64_t modulus) {
  std::vector<Digit> image(modulus);
  for (Digit b = 0; b < modulus; ++b) image[b] = (b + 1) % modulus;
  return make(modulus, std::move(image));
}

CyclicPermutation CyclicPermutation::identity(std::uint64_t modulus) {
  std::vector<Digit> image(modulus);
  std::iota(image.begin(), image.end(), Digit{0});
  return unchecked(modulus, std::move(image));
}

void CyclicPermutation::check_digit(Digit b) const {
  if (b >= image_.size()) {
    throw Error(Errc::DigitOutOfRange,
                "digit " + std::to_string(b) + " not in Z_" + std::to_string(image_.size()));
  }
}

Digit CyclicPermutation::step(Digit b, std::uint64_t steps) const {
  const std::uint64_t length = cycle_length_[b];
  return cycles_[cycle_start_[b] + (position_[b] + steps % length) % length];
}

Digit CyclicPermutation::operator()(Digit b) const {
  check_digit(b);
  return image_[b];
}

Digit CyclicPermutation::power(std::uint64_t n, Digit b) const {
  check_digit(b);
  return step(b, n);
}

Digit CyclicPermutation::power(const Integer& n, Digit b) const {
  check_digit(b);
  if (n < 0) throw Error(Errc::OutOfRange, "negative iteration count " + to_string(n));
  return step(b, static_cast<std::uint64_t>(n % cycle_length_[b]));
}

std::uint64_t CyclicPermutation::discrete_log(Digit r, Digit s) const {
  check_digit(r);
  check_digit(s);
  if (!is_full_cycle()) {
    throw Error(Errc::NotFullCycle, "discrete logarithm needs a single cycle of length " +
                                        std::to_string(image_.size()));
  }
  const std::uint64_t m = image_.size();
  return (position_[s] + m - position_[r]) % m;
}

bool ResidueCondition::contains(const Integer& n) const { return mod(n, modulus) == residue; }

ResidueCondition make_residue(const Integer& residue, const Integer& modulus) {
  if (modulus < 1) throw Error(Errc::OutOfRange, "modulus must be positive, got " + to_string(modulus));
  return ResidueCondition{mod(residue, modulus), modulus};
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  // Extended Euclid on (a mod m, m).
  Integer old_r = mod(a, m), r = m;
  Integer old_s = 1, s = 0;
  while (r != 0) {
    const Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw Error(Errc::ModuliNotCoprime, to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return mod(old_s, m);
}

ResidueCondition combine_crt(std::span<const ResidueCondition> conditions) {
  ResidueCondition acc{0, 1};
  for (const auto& c : conditions) {
    if (c.modulus < 1) throw Error(Errc::OutOfRange, "modulus must be positive");
    if (gcd(acc.modulus, c.modulus) != 1) {
      throw Error(Errc::ModuliNotCoprime, "modulus " + to_string(c.modulus) +
                                              " shares a factor with " + to_string(acc.modulus));
    }
    // x = acc.residue + acc.modulus * t with t = (c.residue - acc.residue) / acc.modulus mod c.modulus
    const Integer t = mod((c.residue - acc.residue) * inverse_mod(acc.modulus, c.modulus), c.modulus);
    acc.residue += acc.modulus * t;
    acc.modulus *= c.modulus;
  }
  return acc;
}

PermutationVector::PermutationVector(BaseSequence base, std::vector<CyclicPermutation> perms)
    : base_(std::move(base)), perms_(std::move(perms)) {
  if (perms_.size() != base_.depth()) {
    throw Error(Errc::LengthMismatch, std::to_string(perms_.size()) + " permutations for " +
                                          std::to_string(base_.depth()) + " levels");
  }
  for (std::size_t j = 0; j < perms_.size(); ++j) {
    if (perms_[j].modulus() != base_.modulus(j)) {
      throw Error(Errc::ModulusMismatch, "permutation at level " + std::to_string(j) + " acts on Z_" +
                                             std::to_string(perms_[j].modulus()) + ", base radix is " +
                                             std::to_string(base_.modulus(j)));
    }
  }
}

PermutationVector PermutationVector::shifts(const BaseSequence& base) {
  std::vector<CyclicPermutation> perms;
  perms.reserve(base.depth());
  for (auto m : base.moduli()) perms.push_back(CyclicPermutation::shift(m));
  return PermutationVector(base, std::move(perms));
}

PermutationVector PermutationVector::identities(const BaseSequence& base) {
  std::vector<CyclicPermutation> perms;
  perms.reserve(base.depth());
  for (auto m : base.moduli()) perms.push_back(CyclicPermutation::identity(m));
  return PermutationVector(base, std::move(perms));
}

bool PermutationVector::all_full_cycles() const noexcept {
  for (const auto& p : perms_) {
    if (!p.is_full_cycle()) return false;
  }
  return true;
}

void PermutationVector::require_full_cycles() const {
  for (std::size_t j = 0; j < perms_.size(); ++j) {
    if (!perms_[j].is_full_cycle()) {
      throw Error(Errc::NotFullCycle, "permutation at level " + std::to_string(j) +
                                          " is not a single cycle of length " +
                                          std::to_string(perms_[j].modulus()));
    }
  }
}

ResidueCondition prefix_residue(const PermutationVector& pv, std::span<const Digit> from,
                                std::span<const Digit> to) {
  if (from.size() != to.size()) {
    throw Error(Errc::LengthMismatch, "prefixes of lengths " + std::to_string(from.size()) + " and " +
                                          std::to_string(to.size()));
  }
  if (from.size() > pv.levels()) {
    throw Error(Errc::DepthExceeded, "prefix of length " + std::to_string(from.size()) +
                                         " over " + std::to_string(pv.levels()) + " levels");
  }
  std::vector<ResidueCondition> per_level;
  per_level.reserve(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    const auto& perm = pv[i];
    per_level.push_back(ResidueCondition{perm.discrete_log(from[i], to[i]), perm.modulus()});
  }
  return combine_crt(per_level);
}

}  // namespace cantor
