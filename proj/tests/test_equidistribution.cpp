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

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cantor/buck_density.hpp"
#include "cantor/equidistribution.hpp"
#include "cantor/error.hpp"
#include "oracles.hpp"

using namespace cantor;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected cantor::Error");
  return Errc::ParseError;
}

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

OrbitSpec shift_spec(std::vector<std::uint64_t> moduli, Rational alpha) {
  const auto b = make_base(std::move(moduli));
  return OrbitSpec(encode(alpha, b, b.depth()), PermutationVector::shifts(b));
}

// Brute-force cell counts from exact orbit values, by sequential iteration.
std::vector<std::uint64_t> scan_counts(const OrbitSpec& spec, std::size_t level, std::uint64_t n) {
  const auto& base = spec.base();
  std::vector<std::uint64_t> moduli(base.moduli().begin(), base.moduli().end());
  std::vector<std::vector<std::uint64_t>> images;
  for (const auto& p : spec.pv().perms()) images.emplace_back(p.image().begin(), p.image().end());
  oracle::Digits cur(spec.seed().digits().begin(), spec.seed().digits().end());
  const auto cells = static_cast<std::uint64_t>(base.product(level));
  std::vector<std::uint64_t> counts(cells, 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Rational v = oracle::value_of(cur, moduli);
    ++counts[static_cast<std::uint64_t>(floor(v * cells))];
    for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = images[j][cur[j]];
  }
  return counts;
}

}  // namespace

TEST_SUITE("equidistribution") {

TEST_CASE("membership_equivalence at level 1") {
  const auto spec = shift_spec({2, 3, 5}, 0);
  const auto report = membership_equivalence(spec, 1, 12);
  REQUIRE(report.intervals.size() == 2);
  CHECK(report.intervals[0].residue == ResidueCondition{0, 2});
  CHECK(report.intervals[1].residue == ResidueCondition{1, 2});
  CHECK(report.intervals[0].count == 6);
  CHECK(report.intervals[1].count == 6);
  CHECK(report.intervals[0].expected == 6);
}

TEST_CASE("membership_equivalence at level 0 is the trivial class") {
  const auto spec = shift_spec({2, 3, 5}, 0);
  const auto report = membership_equivalence(spec, 0, 17);
  REQUIRE(report.intervals.size() == 1);
  CHECK(report.intervals[0].residue == ResidueCondition{0, 1});
  CHECK(report.intervals[0].count == 17);
}

TEST_CASE("membership_equivalence at level 3 over two periods") {
  const auto spec = shift_spec({2, 3, 5}, 0);
  const auto report = membership_equivalence(spec, 3, 60);
  REQUIRE(report.intervals.size() == 30);
  std::set<Integer> residues;
  for (const auto& rec : report.intervals) {
    CHECK(rec.count == 2);
    residues.insert(rec.residue.residue);
  }
  CHECK(residues.size() == 30);
  CHECK(scan_counts(spec, 3, 60) == std::vector<std::uint64_t>(30, 2));
}

TEST_CASE("membership_equivalence with mixed cycles and a nonzero seed") {
  const auto b = make_base({3, 4, 5, 7});
  const std::vector<std::vector<Digit>> cycles{{0, 2, 1}, {0, 3, 1, 2}, {4, 2, 0, 1, 3}, {0, 6, 5, 4, 3, 2, 1}};
  std::vector<CyclicPermutation> perms;
  for (std::size_t j = 0; j < 4; ++j) perms.push_back(CyclicPermutation::from_cycle(b.modulus(j), cycles[j]));
  const OrbitSpec spec(DigitExpansion(b, {2, 1, 3, 6}), PermutationVector(b, perms));
  for (std::size_t k = 0; k <= 4; ++k) {
    const auto cells = static_cast<std::uint64_t>(b.product(k));
    const auto report = membership_equivalence(spec, k, 3 * cells + 1);
    std::vector<PeriodicSet> parts;
    for (const auto& rec : report.intervals) parts.push_back(PeriodicSet::from(rec.residue));
    CHECK(krit1_check(parts).measurable);
  }
}

TEST_CASE("membership_equivalence rejects non-cycles") {
  const auto b = make_base({2, 3});
  const OrbitSpec spec(DigitExpansion(b, {0, 0}), PermutationVector::identities(b));
  CHECK(code_of([&] { membership_equivalence(spec, 1, 4); }) == Errc::NotFullCycle);
}

TEST_CASE("interval_counts") {
  const auto spec = shift_spec({2, 3, 5}, 0);
  CHECK(interval_counts(spec, 2, 60) == std::vector<std::uint64_t>(6, 10));
  const auto one = interval_counts(spec, 2, 1);
  CHECK(std::count(one.begin(), one.end(), 1) == 1);
  CHECK(std::count(one.begin(), one.end(), 0) == 5);
  const auto c61 = interval_counts(spec, 2, 61);
  CHECK(*std::max_element(c61.begin(), c61.end()) - *std::min_element(c61.begin(), c61.end()) <= 1);
  CHECK(c61 == scan_counts(spec, 2, 61));
}

TEST_CASE("property: counts sum to N and are exact at full periods") {
  std::mt19937_64 rng(23);
  const auto b = make_base({3, 5, 7});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CyclicPermutation> perms;
    for (auto m : b.moduli()) {
      std::vector<Digit> order(m);
      std::iota(order.begin(), order.end(), Digit{0});
      std::shuffle(order.begin(), order.end(), rng);
      perms.push_back(CyclicPermutation::from_cycle(m, order));
    }
    const auto seed = prefix_of_interval(3, rng() % 105, b);
    const OrbitSpec spec(DigitExpansion(b, seed), PermutationVector(b, perms));
    for (std::size_t k = 0; k <= 3; ++k) {
      const auto cells = static_cast<std::uint64_t>(b.product(k));
      const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(1, 400)(rng);
      const auto counts = interval_counts(spec, k, n);
      CHECK(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) == n);
      const auto full = interval_counts(spec, k, 2 * cells);
      CHECK(full == std::vector<std::uint64_t>(cells, 2));
    }
  }
}

TEST_CASE("star_discrepancy") {
  CHECK(star_discrepancy(std::vector<Rational>{0}).d_star == 1);
  CHECK(star_discrepancy(std::vector<Rational>{0, q(1, 2)}).d_star == q(1, 2));
  for (long n : {1, 2, 7, 30}) {
    std::vector<Rational> grid;
    for (long k = 0; k < n; ++k) grid.push_back(q(k, n));
    CHECK(star_discrepancy(grid).d_star == q(1, n));
  }
  CHECK(code_of([] { star_discrepancy(std::vector<Rational>{1}); }) == Errc::PointOutOfRange);
  CHECK(code_of([] { star_discrepancy(std::vector<Rational>{}); }) == Errc::OutOfRange);
}

TEST_CASE("property: sorted-formula discrepancy equals the brute-force supremum") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 25;
    const long d = 1 + static_cast<long>(rng() % 50);
    std::vector<Rational> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(q(static_cast<long>(rng() % d), d));
    const auto r = star_discrepancy(pts);
    CHECK(r.d_star == oracle::brute_star_discrepancy(pts));
    CHECK(r.d_star > 0);
    CHECK(r.d_star <= 1);
  }
}

TEST_CASE("sources") {
  CHECK(van_der_corput(0) == 0);
  CHECK(van_der_corput(1) == q(1, 2));
  CHECK(van_der_corput(2) == q(1, 4));
  CHECK(van_der_corput(3) == q(3, 4));
  CHECK(van_der_corput(6) == q(3, 8));
  const auto b = make_base({2, 3, 5});
  const auto k = source_points(Source::Kronecker, 3, b, 3);
  CHECK(k[0] == 0);
  CHECK(k[1] > q(618033, 1000000));
  CHECK(k[1] < q(618034, 1000000));
  const auto g = source_points(Source::Grid, 31, b, 3);
  CHECK(g[29] == q(29, 30));
  CHECK(g[30] == 0);
  CHECK(parse_source("vdc") == Source::VanDerCorput);
  CHECK(code_of([] { parse_source("halton"); }) == Errc::UnknownSource);
}

TEST_CASE("ud_preservation_probe") {
  const auto b = make_base({2, 3, 5});
  const auto grid = ud_preservation_probe(PermutationVector::shifts(b), Source::Grid, 30, 2);
  CHECK(grid.image.d_star == grid.input.d_star);
  CHECK(grid.image.d_star == q(1, 30));
  CHECK(grid.image_counts == std::vector<std::uint64_t>(6, 5));

  const auto ids = ud_preservation_probe(PermutationVector::identities(b), Source::Kronecker, 100, 1);
  // identity T still truncates to the depth-3 grid
  std::vector<Rational> truncated;
  for (const auto& x : source_points(Source::Kronecker, 100, b, 3)) truncated.push_back(encode(x, b, 3).value());
  CHECK(ids.image.d_star == star_discrepancy(truncated).d_star);

  const auto b4 = make_base({2, 3, 5, 7});
  const auto vdc = ud_preservation_probe(PermutationVector::shifts(b4), Source::VanDerCorput, 4096, 2);
  CHECK(vdc.image.d_star <= q(5, 100));
  CHECK(code_of([&] { ud_preservation_probe(PermutationVector::shifts(b), Source::Grid, 5, 2); }) ==
        Errc::OutOfRange);
}

TEST_CASE("grid permutation invariant") {
  std::mt19937_64 rng(31);
  const auto b = make_base({2, 3, 5});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CyclicPermutation> perms;
    for (auto m : b.moduli()) {
      std::vector<Digit> img(m);
      std::iota(img.begin(), img.end(), Digit{0});
      std::shuffle(img.begin(), img.end(), rng);
      perms.push_back(CyclicPermutation::unchecked(m, img));
    }
    const PermutationVector pv(b, perms);
    CHECK(permutes_grid(pv, 3));
    const auto r = ud_preservation_probe(pv, Source::Grid, 30, 3);
    CHECK(r.image.d_star == r.input.d_star);
  }
}

}  // TEST_SUITE
