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

#include "cantor/buck_density.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

// Largest period scanned element by element.
constexpr std::uint64_t kMaxScanPeriod = std::uint64_t{1} << 26;

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const Integer l = lcm(Integer(a), Integer(b));
  if (l > kMaxScanPeriod) {
    throw Error(Errc::PeriodTooLarge, "common period " + to_string(l) + " is too large to scan");
  }
  return static_cast<std::uint64_t>(l);
}

}  // namespace

PeriodicSet::PeriodicSet(std::uint64_t modulus, std::vector<std::uint64_t> residues)
    : modulus_(modulus), residues_(std::move(residues)) {
  if (modulus_ == 0) throw Error(Errc::OutOfRange, "periodic set modulus must be positive");
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
  if (!residues_.empty() && residues_.back() >= modulus_) {
    throw Error(Errc::OutOfRange, "residue " + std::to_string(residues_.back()) +
                                      " not below modulus " + std::to_string(modulus_));
  }
}

PeriodicSet PeriodicSet::from(const ResidueCondition& rc) {
  if (rc.modulus > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(Errc::PeriodTooLarge, "modulus " + to_string(rc.modulus) + " exceeds 64 bits");
  }
  return PeriodicSet(static_cast<std::uint64_t>(rc.modulus), {static_cast<std::uint64_t>(rc.residue)});
}

bool PeriodicSet::contains(std::uint64_t n) const {
  return std::binary_search(residues_.begin(), residues_.end(), n % modulus_);
}

PeriodicSet PeriodicSet::expanded(std::uint64_t m) const {
  if (m == 0 || m % modulus_ != 0) {
    throw Error(Errc::OutOfRange, std::to_string(m) + " is not a multiple of " + std::to_string(modulus_));
  }
  if (m > kMaxScanPeriod) throw Error(Errc::PeriodTooLarge, "period " + std::to_string(m));
  std::vector<std::uint64_t> out;
  out.reserve(residues_.size() * (m / modulus_));
  for (std::uint64_t base = 0; base < m; base += modulus_) {
    for (auto r : residues_) out.push_back(base + r);
  }
  return PeriodicSet(m, std::move(out));
}

PeriodicSet PeriodicSet::normalized() const {
  // The least period divides the modulus; try divisors in increasing order.
  for (std::uint64_t d = 1; d <= modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    std::vector<std::uint64_t> candidate;
    for (auto r : residues_) {
      if (r < d) candidate.push_back(r);
    }
    PeriodicSet reduced(d, std::move(candidate));
    if (reduced.residues_.size() * (modulus_ / d) == residues_.size() &&
        std::all_of(residues_.begin(), residues_.end(),
                    [&](std::uint64_t r) { return reduced.contains(r); })) {
      return reduced;
    }
  }
  return *this;
}

PeriodicSet PeriodicSet::complement() const {
  if (modulus_ > kMaxScanPeriod) throw Error(Errc::PeriodTooLarge, "period " + std::to_string(modulus_));
  std::vector<std::uint64_t> out;
  out.reserve(modulus_ - residues_.size());
  for (std::uint64_t r = 0; r < modulus_; ++r) {
    if (!contains(r)) out.push_back(r);
  }
  return PeriodicSet(modulus_, std::move(out));
}

bool PeriodicSet::same_set(const PeriodicSet& other) const {
  const std::uint64_t m = checked_lcm(modulus_, other.modulus_);
  return expanded(m).residues_ == other.expanded(m).residues_;
}

Rational density(const PeriodicSet& ps) {
  return Rational(Integer(ps.residues().size()), Integer(ps.modulus()));
}

PeriodicSet intersect(const PeriodicSet& a, const PeriodicSet& b) {
  const std::uint64_t m = checked_lcm(a.modulus(), b.modulus());
  const PeriodicSet ea = a.expanded(m);
  std::vector<std::uint64_t> out;
  for (auto r : ea.residues()) {
    if (b.contains(r)) out.push_back(r);
  }
  return PeriodicSet(m, std::move(out));
}

PeriodicSet unite(const PeriodicSet& a, const PeriodicSet& b) {
  const std::uint64_t m = checked_lcm(a.modulus(), b.modulus());
  const PeriodicSet ea = a.expanded(m);
  const PeriodicSet eb = b.expanded(m);
  std::vector<std::uint64_t> out;
  std::set_union(ea.residues().begin(), ea.residues().end(), eb.residues().begin(),
                 eb.residues().end(), std::back_inserter(out));
  return PeriodicSet(m, std::move(out));
}

CoveringBound covering_bound(std::uint64_t target_period,
                             const std::function<bool(std::uint64_t)>& member,
                             std::vector<ResidueCondition> covering) {
  if (target_period == 0) throw Error(Errc::OutOfRange, "target period must be positive");
  std::uint64_t period = target_period;
  Rational bound = 0;
  std::vector<PeriodicSet> classes;
  classes.reserve(covering.size());
  for (const auto& rc : covering) {
    if (rc.modulus < 1 || rc.residue < 0 || rc.residue >= rc.modulus) {
      throw Error(Errc::OutOfRange, "invalid residue class " + to_string(rc.residue) + "+(" +
                                        to_string(rc.modulus) + ")");
    }
    classes.push_back(PeriodicSet::from(rc));
    period = checked_lcm(period, classes.back().modulus());
    bound += Rational(Integer(1), rc.modulus);
  }
  for (std::uint64_t n = 0; n < period; ++n) {
    if (!member(n % target_period)) continue;
    const bool covered = std::any_of(classes.begin(), classes.end(),
                                     [n](const PeriodicSet& c) { return c.contains(n); });
    if (!covered) {
      throw Error(Errc::NotACovering, "member " + std::to_string(n) + " escapes every class");
    }
  }
  return CoveringBound{std::move(covering), std::move(bound)};
}

CoveringBound covering_bound(const PeriodicSet& target, std::vector<ResidueCondition> covering) {
  return covering_bound(
      target.modulus(), [&target](std::uint64_t n) { return target.contains(n); },
      std::move(covering));
}

Krit1Verdict krit1_check(std::span<const std::pair<PeriodicSet, Rational>> parts) {
  std::uint64_t period = 1;
  Krit1Verdict verdict;
  verdict.bound_sum = 0;
  for (const auto& [set, bound] : parts) {
    period = checked_lcm(period, set.modulus());
    if (bound < density(set)) {
      throw Error(Errc::BoundBelowDensity, "bound " + to_string(bound) + " below the density " +
                                               to_string(density(set)) + " of " + to_string(set));
    }
    verdict.bound_sum += bound;
  }
  for (std::uint64_t n = 0; n < period; ++n) {
    std::size_t owners = 0;
    for (const auto& part : parts) owners += part.first.contains(n) ? 1 : 0;
    if (owners != 1) {
      throw Error(Errc::NotAPartition, std::to_string(n) + " lies in " + std::to_string(owners) +
                                           " parts");
    }
  }
  if (verdict.bound_sum > 1) {
    throw Error(Errc::BoundsExceedOne, "bounds sum to " + to_string(verdict.bound_sum));
  }
  verdict.measurable = true;
  for (const auto& part : parts) verdict.measures.push_back(part.second);
  return verdict;
}

Krit1Verdict krit1_check(std::span<const PeriodicSet> parts) {
  std::vector<std::pair<PeriodicSet, Rational>> bounded;
  bounded.reserve(parts.size());
  for (const auto& p : parts) bounded.emplace_back(p, density(p));
  return krit1_check(bounded);
}

PeriodicSet parse_periodic_set(std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw Error(Errc::ParseError, "expected 'r1,r2,...(M)', got '" + std::string(text) + "'");
  }
  for (char c : text.substr(close + 1)) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(Errc::ParseError, "trailing text in '" + std::string(text) + "'");
    }
  }
  const Integer m = parse_integer(text.substr(open + 1, close - open - 1));
  std::vector<std::uint64_t> residues;
  std::string_view list = text.substr(0, open);
  // tolerate "r+(M)" as written in the literature
  while (!list.empty() && (list.back() == '+' || std::isspace(static_cast<unsigned char>(list.back())))) {
    list.remove_suffix(1);
  }
  while (!list.empty()) {
    const auto comma = list.find(',');
    const Integer r = parse_integer(list.substr(0, comma));
    if (r < 0) throw Error(Errc::ParseError, "negative residue in '" + std::string(text) + "'");
    residues.push_back(to_u64(r));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  if (m < 1) throw Error(Errc::ParseError, "modulus must be positive in '" + std::string(text) + "'");
  return PeriodicSet(to_u64(m), std::move(residues));
}

std::string to_string(const PeriodicSet& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.residues().size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(ps.residues()[i]);
  }
  return out + "(" + std::to_string(ps.modulus()) + ")";
}

}  // namespace cantor
