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

#include "cantor/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "cantor/error.hpp"
#include "cantor/rational.hpp"

namespace cantor {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::uint64_t> parse_u64_list(std::string_view text, char sep) {
  std::vector<std::uint64_t> out;
  text = trim(text);
  if (text.empty()) throw Error(Errc::ParseError, "empty list");
  while (true) {
    const auto pos = text.find(sep);
    const Integer v = parse_integer(text.substr(0, pos));
    if (v < 0) throw Error(Errc::ParseError, "negative entry " + to_string(v));
    out.push_back(to_u64(v));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return out;
}

std::string join(std::span<const Digit> digits, char sep) {
  std::string out;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(digits[i]);
  }
  return out;
}

CyclicPermutation parse_permutation(std::uint64_t modulus, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw Error(Errc::ParseError, "unterminated cycle '" + std::string(text) + "'");
    const auto cycle = parse_u64_list(text.substr(1, text.size() - 2));
    return CyclicPermutation::from_cycle(modulus, cycle);
  }
  return CyclicPermutation::unchecked(modulus, parse_u64_list(text));
}

PermutationVector parse_permutation_file(std::string_view text, const BaseSequence& base) {
  std::vector<CyclicPermutation> perms;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    const std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'm: images'");
    }
    const Integer m = parse_integer(line.substr(0, colon));
    if (m < 1) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad modulus");
    perms.push_back(parse_permutation(to_u64(m), line.substr(colon + 1)));
  }
  return PermutationVector(base, std::move(perms));
}

PermutationVector resolve_permutations(std::string_view arg, const BaseSequence& base) {
  arg = trim(arg);
  if (arg == "shift") return PermutationVector::shifts(base);
  if (arg == "identity") return PermutationVector::identities(base);
  std::ifstream file{std::string(arg)};
  if (file) {
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_permutation_file(buffer.str(), base);
  }
  if (arg.find_first_not_of("0123456789,;() \t") != std::string_view::npos) {
    throw Error(Errc::ParseError, "'" + std::string(arg) +
                                      "' is not shift, identity, a readable file or inline images");
  }
  std::vector<CyclicPermutation> perms;
  std::size_t level = 0;
  while (true) {
    const auto pos = arg.find(';');
    if (level >= base.depth()) {
      throw Error(Errc::LengthMismatch, "more inline permutations than base levels");
    }
    perms.push_back(parse_permutation(base.modulus(level), arg.substr(0, pos)));
    ++level;
    if (pos == std::string_view::npos) break;
    arg.remove_prefix(pos + 1);
  }
  return PermutationVector(base, std::move(perms));
}

std::string format_permutation_file(const PermutationVector& pv) {
  std::string out;
  for (const auto& p : pv.perms()) {
    out += std::to_string(p.modulus()) + ": " + join(p.image()) + "\n";
  }
  return out;
}

}  // namespace cantor
