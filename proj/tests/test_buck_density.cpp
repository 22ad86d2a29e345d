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

#include <random>

#include "cantor/buck_density.hpp"
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

}  // namespace

TEST_SUITE("buck_density") {

TEST_CASE("density of residue classes and unions") {
  CHECK(density(PeriodicSet(2, {0})) == q(1, 2));
  CHECK(density(PeriodicSet(2, {0, 1})) == 1);
  const auto u = unite(PeriodicSet(4, {0}), PeriodicSet(2, {1}));
  CHECK(u == PeriodicSet(4, {0, 1, 3}));
  CHECK(density(u) == q(3, 4));
  CHECK(oracle::counting_density([&](std::uint64_t n) { return n % 4 == 0 || n % 2 == 1; }, 400) ==
        q(3, 4));
  CHECK(density(PeriodicSet::naturals()) == 1);
  CHECK(density(PeriodicSet::empty()) == 0);
}

TEST_CASE("intersect") {
  CHECK(intersect(PeriodicSet(2, {0}), PeriodicSet(3, {0})) == PeriodicSet(6, {0}));
  CHECK(intersect(PeriodicSet(2, {0}), PeriodicSet(2, {1})).is_empty());
  CHECK(intersect(PeriodicSet(2, {1}), PeriodicSet(3, {2})) == PeriodicSet(6, {5}));
}

TEST_CASE("property: set algebra matches pointwise membership and density is additive") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto random_set = [&] {
      const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(1, 12)(rng);
      std::vector<std::uint64_t> rs;
      for (std::uint64_t r = 0; r < m; ++r) {
        if (rng() % 2) rs.push_back(r);
      }
      return PeriodicSet(m, rs);
    };
    const auto a = random_set();
    const auto b = random_set();
    const auto i = intersect(a, b);
    const auto u = unite(a, b);
    const std::uint64_t period = static_cast<std::uint64_t>(lcm(Integer(a.modulus()), Integer(b.modulus())));
    for (std::uint64_t n = 0; n < 2 * period; ++n) {
      CHECK(i.contains(n) == (a.contains(n) && b.contains(n)));
      CHECK(u.contains(n) == (a.contains(n) || b.contains(n)));
    }
    CHECK(density(u) + density(i) == density(a) + density(b));
    CHECK(density(a) + density(a.complement()) == 1);
    CHECK(a.normalized().same_set(a));
    CHECK(a.normalized().modulus() <= a.modulus());
    CHECK(density(a) == oracle::counting_density([&](std::uint64_t n) { return a.contains(n); },
                                                 a.modulus() * 5));
  }
}

TEST_CASE("normalized finds the least period") {
  CHECK(PeriodicSet(12, {1, 4, 7, 10}).normalized() == PeriodicSet(3, {1}));
  CHECK(PeriodicSet(6, {0, 1, 2, 3, 4, 5}).normalized() == PeriodicSet::naturals());
  CHECK(PeriodicSet(6, {}).normalized() == PeriodicSet::empty());
  CHECK(PeriodicSet(6, {0, 3}).normalized() == PeriodicSet(3, {0}));
}

TEST_CASE("covering_bound") {
  const auto target = PeriodicSet(6, {0});
  CHECK(covering_bound(target, {{0, 6}}).bound == q(1, 6));
  CHECK(covering_bound(target, {{0, 2}}).bound == q(1, 2));
  CHECK(covering_bound(PeriodicSet(6, {0, 3}), {{0, 3}}).bound == q(1, 3));
  CHECK(code_of([&] { covering_bound(PeriodicSet(6, {0, 1}), {{0, 3}}); }) == Errc::NotACovering);
  // the bound dominates the exact density of any periodic target it covers
  const auto t = PeriodicSet(10, {1, 3, 5});
  const auto cb = covering_bound(t, {{1, 2}});
  CHECK(cb.bound >= density(t));
}

TEST_CASE("covering_bound with an oracle-defined target") {
  // n with n = 1 (mod 2) and n = 2 (mod 3): a subset of 5+(6)
  const auto cb = covering_bound(
      6, [](std::uint64_t n) { return n % 2 == 1 && n % 3 == 2; }, {{5, 6}});
  CHECK(cb.bound == q(1, 6));
}

TEST_CASE("zero-density witness chain over levels") {
  // sets of n fixing the first j digits of a shift orbit; each is one class
  // mod B_j, so the single-class covering bound is 1/B_j and tends to 0
  const std::vector<std::uint64_t> moduli{2, 3, 5, 7, 11};
  Integer b = 1;
  Rational previous = 2;
  for (auto m : moduli) {
    b *= m;
    const auto bound = covering_bound(static_cast<std::uint64_t>(b),
                                      [](std::uint64_t n) { return n == 0; }, {{0, b}})
                           .bound;
    CHECK(bound == Rational(Integer(1), b));
    CHECK(bound < previous);
    previous = bound;
  }
}

TEST_CASE("krit1_check") {
  std::vector<std::pair<PeriodicSet, Rational>> sixths;
  for (std::uint64_t j = 0; j < 6; ++j) sixths.emplace_back(PeriodicSet(6, {j}), q(1, 6));
  const auto v = krit1_check(sixths);
  CHECK(v.measurable);
  CHECK(v.bound_sum == 1);
  for (const auto& m : v.measures) CHECK(m == q(1, 6));

  const std::vector<PeriodicSet> halves{PeriodicSet(2, {0}), PeriodicSet(2, {1})};
  CHECK(krit1_check(halves).measurable);

  const std::vector<std::pair<PeriodicSet, Rational>> too_much{{PeriodicSet(2, {0}), q(1, 2)},
                                                               {PeriodicSet(2, {1}), q(3, 4)}};
  CHECK(code_of([&] { krit1_check(too_much); }) == Errc::BoundsExceedOne);

  const std::vector<PeriodicSet> overlap{PeriodicSet(2, {0}), PeriodicSet(3, {0, 1, 2})};
  CHECK(code_of([&] { krit1_check(overlap); }) == Errc::NotAPartition);
  const std::vector<PeriodicSet> gap{PeriodicSet(3, {0}), PeriodicSet(3, {1})};
  CHECK(code_of([&] { krit1_check(gap); }) == Errc::NotAPartition);

  const std::vector<std::pair<PeriodicSet, Rational>> low{{PeriodicSet(2, {0}), q(1, 3)},
                                                          {PeriodicSet(2, {1}), q(1, 2)}};
  CHECK(code_of([&] { krit1_check(low); }) == Errc::BoundBelowDensity);
}

TEST_CASE("literal syntax") {
  CHECK(parse_periodic_set("0,3(6)") == PeriodicSet(6, {0, 3}));
  CHECK(parse_periodic_set("1+(2)") == PeriodicSet(2, {1}));
  CHECK(parse_periodic_set("(5)").is_empty());
  CHECK(to_string(PeriodicSet(6, {3, 0})) == "0,3(6)");
  CHECK(code_of([] { parse_periodic_set("0,3"); }) == Errc::ParseError);
  CHECK(code_of([] { parse_periodic_set("7(6)"); }) == Errc::OutOfRange);
  CHECK(code_of([] { parse_periodic_set("1(0)"); }) == Errc::ParseError);
}

}  // TEST_SUITE
