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

#include "cantor/analysis.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "cantor/dynamics.hpp"
#include "cantor/error.hpp"

namespace cantor {

namespace {

Rational image_value(const PermutationVector& pv, std::vector<Digit> digits) {
  return apply_map(pv, DigitExpansion(pv.base(), std::move(digits))).value();
}

struct Pairs {
  std::optional<std::pair<Digit, Digit>> increasing;
  std::optional<std::pair<Digit, Digit>> decreasing;
};

// Adjacent pairs suffice: a sequence with any ascent has an adjacent ascent,
// and likewise for descents.
Pairs monotone_pairs(const CyclicPermutation& perm) {
  Pairs pairs;
  for (Digit k = 0; k + 1 < perm.modulus(); ++k) {
    const Digit lo = perm(k);
    const Digit hi = perm(k + 1);
    if (!pairs.increasing && lo < hi) pairs.increasing.emplace(k, k + 1);
    if (!pairs.decreasing && lo > hi) pairs.decreasing.emplace(k, k + 1);
  }
  return pairs;
}

MonotonicityWitness witness_below(const PermutationVector& pv, std::size_t level,
                                  const Integer& interval_index, std::vector<Digit> prefix) {
  const std::size_t digit_level = prefix.size();
  if (digit_level >= pv.levels()) {
    throw Error(Errc::NoWitnessAtLevel, "no digit level below " + std::to_string(digit_level) +
                                            " within depth " + std::to_string(pv.levels()));
  }
  const Pairs pairs = monotone_pairs(pv[digit_level]);
  if (!pairs.increasing || !pairs.decreasing) {
    throw Error(Errc::NoWitnessAtLevel,
                "permutation at level " + std::to_string(digit_level) + " has no " +
                    (pairs.increasing ? "decreasing" : "increasing") + " pair");
  }

  MonotonicityWitness w;
  w.level = level;
  w.interval_index = interval_index;
  w.digit_level = digit_level;
  w.digits = {pairs.increasing->first, pairs.increasing->second, pairs.decreasing->first,
              pairs.decreasing->second};
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Digit> digits(pv.levels(), 0);
    std::copy(prefix.begin(), prefix.end(), digits.begin());
    digits[digit_level] = w.digits[i];
    const DigitExpansion x(pv.base(), digits);
    w.points[i] = x.value();
    w.images[i] = image_value(pv, std::move(digits));
  }
  if (!(w.images[0] < w.images[1]) || !(w.images[2] > w.images[3])) {
    throw Error(Errc::NoWitnessAtLevel, "image inequalities failed at level " +
                                            std::to_string(digit_level));
  }
  return w;
}

}  // namespace

MonotonicityWitness find_monotonicity_witness(const PermutationVector& pv, std::size_t level,
                                              const Integer& interval_index) {
  return find_monotonicity_witness_descending(pv, level, interval_index, 0);
}

MonotonicityWitness find_monotonicity_witness_descending(const PermutationVector& pv,
                                                         std::size_t level,
                                                         const Integer& interval_index,
                                                         std::size_t descent_budget) {
  if (level >= pv.levels()) {
    throw Error(Errc::LevelExceeded, "cell level " + std::to_string(level) +
                                         " leaves no digit below it in depth " +
                                         std::to_string(pv.levels()));
  }
  std::vector<Digit> prefix = prefix_of_interval(level, interval_index, pv.base());
  for (std::size_t descent = 0;; ++descent) {
    try {
      return witness_below(pv, level, interval_index, prefix);
    } catch (const Error& e) {
      if (e.code() != Errc::NoWitnessAtLevel || descent >= descent_budget) throw;
    }
    prefix.push_back(0);
  }
}

bool verify_witness(const PermutationVector& pv, const MonotonicityWitness& w) {
  const GridInterval cell = grid_interval(w.level, w.interval_index, pv.base());
  std::array<Rational, 4> images;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!cell.contains(w.points[i])) return false;
    images[i] = apply_map(pv, encode(w.points[i], pv.base(), pv.levels())).value();
    if (images[i] != w.images[i]) return false;
  }
  return w.points[0] < w.points[1] && images[0] < images[1] && w.points[2] < w.points[3] &&
         images[2] > images[3];
}

Rational closed_form_quotient(const CyclicPermutation& perm, Digit a, Digit ell) {
  if (a == ell) throw Error(Errc::DegenerateDigit, "perturbed digit equals the original digit");
  const Integer rise = Integer(perm(a)) - Integer(perm(ell));
  const Integer run = Integer(a) - Integer(ell);
  return ratio(rise, run);
}

QuotientSample difference_quotient(const PermutationVector& pv, const DigitExpansion& alpha,
                                   std::size_t level, Digit ell) {
  if (level >= pv.levels()) {
    throw Error(Errc::LevelExceeded, "digit level " + std::to_string(level) + " over " +
                                         std::to_string(pv.levels()) + " levels");
  }
  const std::size_t depth = std::max(alpha.depth(), level + 1);
  std::vector<Digit> digits(depth, 0);
  std::copy(alpha.digits().begin(), alpha.digits().end(), digits.begin());
  const Digit a = digits[level];
  if (ell >= pv[level].modulus()) {
    throw Error(Errc::DigitOutOfRange, "digit " + std::to_string(ell) + " not in Z_" +
                                           std::to_string(pv[level].modulus()));
  }

  QuotientSample sample;
  sample.level = level;
  sample.a = a;
  sample.ell = ell;
  sample.closed_form = closed_form_quotient(pv[level], a, ell);

  const DigitExpansion x(pv.base(), digits);
  digits[level] = ell;
  const DigitExpansion xs(pv.base(), std::move(digits));
  sample.direct = (apply_map(pv, x).value() - apply_map(pv, xs).value()) / (x.value() - xs.value());

  if (sample.direct != sample.closed_form) {
    throw Error(Errc::QuotientMismatch, "closed form " + to_string(sample.closed_form) +
                                            " vs direct " + to_string(sample.direct));
  }
  return sample;
}

DerivativeProbe derivative_probe(const PermutationVector& pv, const DigitExpansion& alpha,
                                 std::size_t max_level) {
  if (max_level > pv.levels()) {
    throw Error(Errc::LevelExceeded, "max level " + std::to_string(max_level) + " over " +
                                         std::to_string(pv.levels()) + " levels");
  }
  DerivativeProbe probe;
  probe.one_achievable_everywhere = true;
  probe.candidates_stable = true;
  for (std::size_t s = 0; s < max_level; ++s) {
    const CyclicPermutation& perm = pv[s];
    LevelProbe lp;
    lp.level = s;
    lp.a = s < alpha.depth() ? alpha[s] : 0;
    for (Digit ell = 0; ell < perm.modulus(); ++ell) {
      if (ell == lp.a) continue;
      const QuotientSample q = difference_quotient(pv, alpha, s, ell);
      lp.one_achievable = lp.one_achievable || q.closed_form == 1;
      lp.quotients.emplace_back(ell, q.closed_form);
    }
    lp.candidate = lp.a != 0 ? Integer(perm(lp.a)) - Integer(perm(lp.a - 1))
                             : Integer(perm(0)) - Integer(perm(1));
    probe.one_achievable_everywhere = probe.one_achievable_everywhere && lp.one_achievable;
    if (!probe.levels.empty() && probe.levels.front().candidate != lp.candidate) {
      probe.candidates_stable = false;
    }
    probe.levels.push_back(std::move(lp));
  }
  return probe;
}

}  // namespace cantor
