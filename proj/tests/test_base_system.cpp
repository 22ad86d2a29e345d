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

#include "cantor/base_system.hpp"
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

TEST_SUITE("base_system") {

TEST_CASE("make_base computes cumulative products") {
  const auto b = make_base({2, 3, 5});
  CHECK(b.depth() == 3);
  CHECK(b.product(0) == 1);
  CHECK(b.product(1) == 2);
  CHECK(b.product(2) == 6);
  CHECK(b.product(3) == 30);

  const auto c = make_base({3, 4, 5, 7});
  CHECK(c.product(4) == 420);
  CHECK(c.product(2) == 12);
}

TEST_CASE("make_base rejects bad moduli") {
  CHECK(code_of([] { make_base({2, 4, 5}); }) == Errc::NotCoprime);
  CHECK(code_of([] { make_base({6, 35, 10}); }) == Errc::NotCoprime);
  CHECK(code_of([] { make_base({3, 1}); }) == Errc::ModulusTooSmall);
  CHECK(code_of([] { make_base({}); }) == Errc::EmptyBase);
}

TEST_CASE("products exceed 64 bits without loss") {
  const auto b = make_base({2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53});
  CHECK(b.product(16) == Integer("32589158477190044730"));
}

TEST_CASE("encode matches the exhaustive oracle on sample points") {
  const auto b = make_base({2, 3, 5});
  const std::vector<std::uint64_t> moduli{2, 3, 5};
  CHECK(encode(0, b, 3).digits().size() == 3);
  const auto zero = encode(0, b, 3);
  CHECK(std::vector<Digit>(zero.digits().begin(), zero.digits().end()) == std::vector<Digit>{0, 0, 0});

  for (const auto& [alpha, expected] :
       std::vector<std::pair<Rational, std::vector<Digit>>>{{q(1, 2), {1, 0, 0}},
                                                            {q(29, 30), {1, 2, 4}}}) {
    const auto e = encode(alpha, b, 3);
    const std::vector<Digit> got(e.digits().begin(), e.digits().end());
    CHECK(got == expected);
    CHECK(got == oracle::exhaustive_encode(alpha, moduli, 3));
  }
}

TEST_CASE("encode agrees with exhaustive search on every 1/97 multiple") {
  const auto b = make_base({3, 4, 5, 7});
  const std::vector<std::uint64_t> moduli{3, 4, 5, 7};
  for (long p = 0; p < 97; ++p) {
    const auto e = encode(q(p, 97), b, 3);
    CHECK(std::vector<Digit>(e.digits().begin(), e.digits().end()) ==
          oracle::exhaustive_encode(q(p, 97), moduli, 3));
  }
}

TEST_CASE("encode picks the terminating form, never the all-maximal alias") {
  const auto b = make_base({2, 3, 5});
  // 1/2 is also 0/2 + 2/6 + 4/30 + ... only in the infinite limit.
  const auto e = encode(q(1, 2), b, 3);
  CHECK(e[0] == 1);
  CHECK(e[1] == 0);
  CHECK(e[2] == 0);
}

TEST_CASE("encode errors") {
  const auto b = make_base({2, 3, 5});
  CHECK(code_of([&] { encode(1, b, 3); }) == Errc::OutOfRange);
  CHECK(code_of([&] { encode(q(3, 2), b, 3); }) == Errc::OutOfRange);
  CHECK(code_of([&] { encode(q(-1, 5), b, 3); }) == Errc::OutOfRange);
  CHECK(code_of([&] { encode(q(1, 5), b, 4); }) == Errc::DepthExceeded);
}

TEST_CASE("decode") {
  const auto b = make_base({2, 3, 5});
  CHECK(decode(DigitExpansion(b, {1, 2, 4})) == q(29, 30));
  CHECK(decode(DigitExpansion(b, {0, 0, 0})) == 0);
  CHECK(decode(DigitExpansion(b, {1, 0, 0})) == q(1, 2));
  CHECK(decode(DigitExpansion(b, {})) == 0);
  CHECK(code_of([&] { DigitExpansion(b, {2, 0, 0}); }) == Errc::DigitOutOfRange);
  CHECK(code_of([&] { DigitExpansion(b, {0, 0, 0, 0}); }) == Errc::DepthExceeded);
}

TEST_CASE("interval_of") {
  const auto b = make_base({2, 3, 5});
  const auto i = interval_of(q(29, 30), 2, b);
  CHECK(i.index == 5);
  CHECK(i.lower == q(5, 6));
  CHECK(i.upper == 1);
  CHECK(interval_of(0, 3, b).index == 0);
  CHECK(interval_of(0, 0, b).index == 0);
  const auto half = interval_of(q(1, 2), 1, b);
  CHECK(half.index == 1);
  CHECK(half.lower == q(1, 2));
  CHECK(half.upper == 1);
  CHECK(code_of([&] { interval_of(q(1, 3), 4, b); }) == Errc::LevelExceeded);
}

TEST_CASE("prefix_of_interval") {
  const auto b = make_base({2, 3, 5});
  CHECK(prefix_of_interval(2, 5, b) == std::vector<Digit>{1, 2});
  CHECK(prefix_of_interval(1, 0, b) == std::vector<Digit>{0});
  CHECK(prefix_of_interval(3, 29, b) == std::vector<Digit>{1, 2, 4});
  CHECK(code_of([&] { prefix_of_interval(2, 6, b); }) == Errc::IndexOutOfRange);
  CHECK(code_of([&] { prefix_of_interval(2, -1, b); }) == Errc::IndexOutOfRange);
}

TEST_CASE("round trip and partition over the whole grid") {
  const auto b = make_base({3, 4, 5, 7});
  const std::size_t k = 4;
  const Integer cells = b.product(k);
  Rational previous_upper = 0;
  for (Integer j = 0; j < cells; ++j) {
    const auto prefix = prefix_of_interval(k, j, b);
    const Rational x(j, cells);
    CHECK(decode(DigitExpansion(b, prefix)) == x);
    const auto cell = grid_interval(k, j, b);
    CHECK(cell.lower == previous_upper);  // contiguous and disjoint
    CHECK(cell.length() == Rational(Integer(1), cells));
    previous_upper = cell.upper;
    // associated prefix: x lies in the cell iff its encoding starts with the prefix
    const auto e = encode(x, b, k);
    CHECK(std::vector<Digit>(e.digits().begin(), e.digits().end()) == prefix);
  }
  CHECK(previous_upper == 1);
}

TEST_CASE("property: greedy encoding brackets random rationals and refines") {
  const auto b = make_base({2, 3, 5, 7, 11, 13});
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int trial = 0; trial < 500; ++trial) {
    const long d = den(rng);
    const long p = std::uniform_int_distribution<long>(0, d - 1)(rng);
    const Rational alpha{Integer(p), Integer(d)};
    for (std::size_t k = 0; k <= b.depth(); ++k) {
      const Rational v = decode(encode(alpha, b, k));
      CHECK(v <= alpha);
      CHECK(alpha < v + Rational(Integer(1), b.product(k)));
      if (k > 0) {
        const auto fine = interval_of(alpha, k, b);
        const auto coarse = interval_of(alpha, k - 1, b);
        CHECK(coarse.lower <= fine.lower);
        CHECK(fine.upper <= coarse.upper);
      }
    }
  }
}

}  // TEST_SUITE
