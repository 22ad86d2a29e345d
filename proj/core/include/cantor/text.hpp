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

// Text formats shared by the CLI and tests: comma lists of moduli and
// digits, and permutation files of lines "m: i0,i1,...,i{m-1}" (image
// notation) or "m: (c0,c1,...)" (cycle notation). Blank lines and lines
// starting with '#' are ignored.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/base_system.hpp"
#include "cantor/permutations.hpp"

namespace cantor {

/// "2,3,5" -> {2,3,5}. Throws ParseError.
std::vector<std::uint64_t> parse_u64_list(std::string_view text, char sep = ',');

std::string join(std::span<const Digit> digits, char sep = ',');

/// One permutation, "i0,i1,..." or "(c0,c1,...)" for modulus m. Non-full
/// cycles are accepted; callers that need cycles check is_full_cycle().
CyclicPermutation parse_permutation(std::uint64_t modulus, std::string_view text);

/// Parses a permutation file body. The number of lines must match the base
/// depth and each line's modulus the base radix at that level.
PermutationVector parse_permutation_file(std::string_view text, const BaseSequence& base);

/// Resolves the --perms argument: "shift", "identity", a path to a
/// permutation file, or inline images separated by ';' ("1,0;1,2,0").
PermutationVector resolve_permutations(std::string_view arg, const BaseSequence& base);

std::string format_permutation_file(const PermutationVector& pv);

}  // namespace cantor
