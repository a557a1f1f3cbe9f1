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

// Exact arithmetic in Z[zeta_p].
//
// A value is stored in the power basis 1, zeta, ..., zeta^(p-2); the relation
// 1 + zeta + ... + zeta^(p-1) = 0 eliminates zeta^(p-1), so equal ring
// elements always have equal coefficient vectors.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dfc/bigint.hpp"

namespace dfc::cyclo {

class CycInt {
 public:
  /// Zero of Z[zeta_p]. p must be an odd prime.
  explicit CycInt(unsigned p);

  static CycInt rational(unsigned p, const BigInt& r);
  /// zeta^j for any integer j.
  static CycInt zeta_power(unsigned p, std::int64_t j);
  /// sum_j full[j] zeta^j for a length-p vector.
  static CycInt from_full(unsigned p, std::vector<BigInt> full);

  unsigned prime() const { return p_; }
  std::span<const BigInt> coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;

  CycInt operator-() const;
  CycInt& operator+=(const CycInt& o);
  CycInt& operator-=(const CycInt& o);
  CycInt& operator*=(const CycInt& o);
  CycInt& operator*=(const BigInt& s);

  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(CycInt a, const CycInt& b) { return a *= b; }
  friend CycInt operator*(CycInt a, const BigInt& s) { return a *= s; }
  friend CycInt operator*(const BigInt& s, CycInt a) { return a *= s; }

  friend bool operator==(const CycInt& a, const CycInt& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  /// Total order for use as a map key (prime first, then coefficients).
  friend std::strong_ordering operator<=>(const CycInt& a, const CycInt& b);

  /// e.g. "3 - 2*z^2"; z stands for zeta_p.
  std::string to_string() const;

 private:
  void check_same(const CycInt& o) const;

  unsigned p_;
  std::vector<BigInt> c_;  // length p - 1
};

CycInt cyc_add(const CycInt& a, const CycInt& b);
CycInt cyc_neg(const CycInt& a);
CycInt cyc_mul(const CycInt& a, const CycInt& b);
CycInt cyc_scale(const CycInt& a, const BigInt& s);
CycInt cyc_pow(CycInt base, unsigned e);

/// sum_j counts[j] zeta^j. counts must have length p.
CycInt from_trace_counts(unsigned p, std::span<const std::uint64_t> counts);

/// The quadratic Gauss sum sum_{v in F_p^*} eta'(v) zeta^v; its square is p*.
CycInt gauss_sum(unsigned p);

/// p* = (-1)^((p-1)/2) p.
BigInt p_star(unsigned p);

/// Legendre symbol (y / p) with (0 / p) = 0.
int legendre(std::int64_t y, unsigned p);

/// The automorphism zeta -> zeta^y. Requires y not divisible by p.
CycInt galois(std::int64_t y, const CycInt& x);

/// Multiset of sum values with exact multiplicities.
using ValueDistribution = std::map<CycInt, BigInt>;

/// Pointwise sum; used to merge shard results.
void merge_into(ValueDistribution& into, const ValueDistribution& from);

BigInt total_count(const ValueDistribution& d);

}  // namespace dfc::cyclo
