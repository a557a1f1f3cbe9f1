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

#include "dfc/cyclo.hpp"

#include <sstream>
#include <stdexcept>

#include "dfc/gf.hpp"

namespace dfc::cyclo {

CycInt::CycInt(unsigned p) : p_(p) {
  if (p < 3 || !gf::is_prime(p)) throw std::invalid_argument("CycInt: p must be an odd prime");
  c_.assign(p - 1, BigInt(0));
}

CycInt CycInt::rational(unsigned p, const BigInt& r) {
  CycInt x(p);
  x.c_[0] = r;
  return x;
}

CycInt CycInt::from_full(unsigned p, std::vector<BigInt> full) {
  if (full.size() != p) throw std::invalid_argument("CycInt::from_full: need p coefficients");
  CycInt x(p);
  const BigInt top = full[p - 1];
  for (unsigned i = 0; i + 1 < p; ++i) x.c_[i] = full[i] - top;
  return x;
}

CycInt CycInt::zeta_power(unsigned p, std::int64_t j) {
  std::int64_t r = j % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  std::vector<BigInt> full(p, BigInt(0));
  full[static_cast<std::size_t>(r)] = 1;
  return from_full(p, std::move(full));
}

bool CycInt::is_zero() const {
  for (const auto& v : c_)
    if (v != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

void CycInt::check_same(const CycInt& o) const {
  if (o.p_ != p_) throw std::invalid_argument("CycInt: mismatched primes");
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& o) {
  check_same(o);
  std::vector<BigInt> full(p_, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      full[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  *this = from_full(p_, std::move(full));
  return *this;
}

CycInt& CycInt::operator*=(const BigInt& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

std::strong_ordering operator<=>(const CycInt& a, const CycInt& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] < b.c_[i]) return std::strong_ordering::less;
    if (a.c_[i] > b.c_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt mag = c_[i] < 0 ? BigInt(-c_[i]) : c_[i];
    if (first) {
      if (c_[i] < 0) os << '-';
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'z';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
CycInt cyc_neg(const CycInt& a) { return -a; }
CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
CycInt cyc_scale(const CycInt& a, const BigInt& s) { return a * s; }

CycInt cyc_pow(CycInt base, unsigned e) {
  CycInt r = CycInt::rational(base.prime(), 1);
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

CycInt from_trace_counts(unsigned p, std::span<const std::uint64_t> counts) {
  if (counts.size() != p) throw std::invalid_argument("from_trace_counts: need p counts");
  std::vector<BigInt> full(p);
  for (unsigned j = 0; j < p; ++j) full[j] = counts[j];
  return CycInt::from_full(p, std::move(full));
}

int legendre(std::int64_t y, unsigned p) {
  const std::int64_t pp = p;
  std::int64_t r = y % pp;
  if (r < 0) r += pp;
  if (r == 0) return 0;
  std::uint64_t acc = 1, b = static_cast<std::uint64_t>(r);
  for (std::uint64_t e = (pp - 1) / 2; e; e >>= 1) {
    if (e & 1) acc = acc * b % pp;
    b = b * b % pp;
  }
  return acc == 1 ? 1 : -1;
}

CycInt gauss_sum(unsigned p) {
  std::vector<BigInt> full(p, BigInt(0));
  for (unsigned v = 1; v < p; ++v) full[v] = legendre(v, p);
  return CycInt::from_full(p, std::move(full));
}

BigInt p_star(unsigned p) {
  return (p % 4 == 1) ? BigInt(p) : BigInt(-static_cast<std::int64_t>(p));
}

CycInt galois(std::int64_t y, const CycInt& x) {
  const unsigned p = x.prime();
  std::int64_t r = y % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  if (r == 0) throw std::invalid_argument("galois: y must be a unit mod p");
  std::vector<BigInt> full(p, BigInt(0));
  const auto c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) full[(i * static_cast<std::size_t>(r)) % p] += c[i];
  return CycInt::from_full(p, std::move(full));
}

void merge_into(ValueDistribution& into, const ValueDistribution& from) {
  for (const auto& [v, n] : from) into[v] += n;
}

BigInt total_count(const ValueDistribution& d) {
  BigInt t = 0;
  for (const auto& [v, n] : d) t += n;
  return t;
}

}  // namespace dfc::cyclo
