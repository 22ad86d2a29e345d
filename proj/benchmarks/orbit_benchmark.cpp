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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cantor/dynamics.hpp"
#include "cantor/equidistribution.hpp"
#include "cantor/permutations.hpp"

namespace {

const std::vector<std::uint64_t> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

cantor::OrbitSpec make_spec(std::int64_t depth) {
  const auto base = cantor::make_base({kPrimes.begin(), kPrimes.begin() + depth});
  const auto d = static_cast<std::size_t>(depth);
  return cantor::OrbitSpec(cantor::DigitExpansion(base, std::vector<cantor::Digit>(d, 1)),
                           cantor::PermutationVector::shifts(base));
}

void BM_OrbitPoint(benchmark::State& state) {
  const auto spec = make_spec(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> index(0, 1000000000000ULL);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cantor::orbit_point(spec, index(rng)));
  }
}
BENCHMARK(BM_OrbitPoint)->Arg(4)->Arg(8)->Arg(16);

void BM_OrbitDigits(benchmark::State& state) {
  const auto spec = make_spec(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> index(0, 1000000000000ULL);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cantor::orbit_digits(spec, index(rng)));
  }
}
BENCHMARK(BM_OrbitDigits)->Arg(4)->Arg(8)->Arg(16);

void BM_PrefixResidue(benchmark::State& state) {
  const auto spec = make_spec(state.range(0));
  const auto& from = spec.seed().digits();
  const std::vector<cantor::Digit> to(from.size(), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cantor::prefix_residue(spec.pv(), from, to));
  }
}
BENCHMARK(BM_PrefixResidue)->Arg(4)->Arg(16);

void BM_StarDiscrepancy(benchmark::State& state) {
  const auto base = cantor::make_base({2, 3, 5, 7});
  const auto points = cantor::source_points(cantor::Source::VanDerCorput,
                                            static_cast<std::uint64_t>(state.range(0)), base, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cantor::star_discrepancy(points));
  }
}
BENCHMARK(BM_StarDiscrepancy)->Arg(1024)->Arg(16384);

}  // namespace

BENCHMARK_MAIN();
