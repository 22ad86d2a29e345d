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

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cantor {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// p/q for q != 0 of either sign. Boost 1.74 rejects a negative denominator.
inline Rational ratio(const Integer& p, const Integer& q) {
  return q < 0 ? Rational(Integer(-p), Integer(-q)) : Rational(p, q);
}

/// floor(q) for any sign of q.
Integer floor(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Least non-negative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

/// Converts to uint64_t, throwing Errc::OutOfRange when it does not fit.
std::uint64_t to_u64(const Integer& v);

/// Parses "p/q", "p" or "-p/q". Throws Errc::ParseError.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Always "p/q", including q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& v);

}  // namespace cantor
