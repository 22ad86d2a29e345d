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

#include "cantor/rational.hpp"

#include <cctype>
#include <limits>

#include "cantor/error.hpp"

namespace cantor {

Integer floor(const Rational& q) {
  const Integer n = num(q);
  const Integer d = den(q);  // always positive
  Integer quotient = n / d;  // truncates toward zero
  if (n < 0 && quotient * d != n) --quotient;
  return quotient;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

std::uint64_t to_u64(const Integer& v) {
  if (v < 0 || v > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(Errc::OutOfRange, to_string(v) + " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t end = text.size();
  while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string_view body = text.substr(i, end - i);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (body.empty()) throw Error(Errc::ParseError, "expected an integer, got '" + std::string(text) + "'");
  Integer v = 0;
  for (char c : body) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(Errc::ParseError, "expected an integer, got '" + std::string(text) + "'");
    }
    v = v * 10 + (c - '0');
  }
  return negative ? Integer(-v) : v;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer p = parse_integer(text.substr(0, slash));
  const Integer q = parse_integer(text.substr(slash + 1));
  if (q == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  return ratio(p, q);
}

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& q) { return num(q).str() + "/" + den(q).str(); }

}  // namespace cantor
