/*
 * Copyright (C) 2026 The dfc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dfc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(std::uint64_t base, unsigned exp) {
  BigInt r = 1;
  BigInt b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1;
  }
  return r;
}

// p^e for integral e; negative exponents are a caller bug.
inline Rational rat_pow(std::uint64_t base, int exp) {
  if (exp < 0) throw std::logic_error("rat_pow: negative exponent");
  return Rational(big_pow(base, static_cast<unsigned>(exp)));
}

/// Converts an exact rational to an integer, throwing if it is not integral.
inline BigInt require_integer(const Rational& r, const std::string& what) {
  if (boost::multiprecision::denominator(r) != 1)
    throw std::logic_error(what + ": non-integral value " + r.str());
  return boost::multiprecision::numerator(r);
}

}  // namespace dfc
