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

#include "dfc/gf.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dfc::gf {

struct FieldTables {
  unsigned p = 0;
  unsigned m = 0;
  std::uint32_t q = 0;
  std::vector<unsigned> modulus;
  // antilog[k] = base-p code of alpha^k, k in [0, q-1)
  std::vector<std::uint32_t> antilog;
  // code_to_index[code] = canonical index
  std::vector<std::uint32_t> code_to_index;
  // zech[k] = index of 1 + alpha^k
  std::vector<std::uint32_t> zech;
  std::vector<std::uint8_t> trace_log;
};

namespace {

using Poly = std::vector<unsigned>;

// r = a*b mod f over F_p; f monic of degree m, a and b of length m.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
  const std::size_t m = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] += std::uint64_t(a[i]) * b[j];
  }
  for (auto& c : prod) c %= p;
  for (std::size_t d = 2 * m - 1; d >= m && d > 0; --d) {
    const std::uint64_t lead = prod[d];
    if (!lead) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < m; ++i)
      prod[d - m + i] = (prod[d - m + i] + lead * (p - f[i])) % p;
  }
  Poly r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<unsigned>(prod[i]);
  return r;
}

Poly x_pow_mod(std::uint64_t e, const Poly& f, unsigned p) {
  const std::size_t m = f.size() - 1;
  Poly result(m, 0);
  result[0] = 1;
  Poly base(m, 0);
  if (m == 1) {
    base[0] = (p - f[0]) % p;
  } else {
    base[1] = 1;
  }
  while (e) {
    if (e & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

bool is_one(const Poly& r) {
  if (r[0] != 1) return false;
  return std::all_of(r.begin() + 1, r.end(), [](unsigned c) { return c == 0; });
}

bool is_primitive(const Poly& f, unsigned p, std::uint64_t n,
                  const std::vector<std::uint64_t>& factors) {
  if (f[0] == 0) return false;
  if (!is_one(x_pow_mod(n, f, p))) return false;
  for (auto r : factors)
    if (is_one(x_pow_mod(n / r, f, p))) return false;
  return true;
}

Poly smallest_primitive(unsigned p, unsigned m, std::uint64_t n) {
  const auto factors = prime_factors(n);
  Poly f(m + 1, 0);
  f[m] = 1;
  // Lexicographic in (c_0, c_1, ..., c_{m-1}): c_{m-1} varies fastest.
  std::uint64_t total = 1;
  for (unsigned i = 0; i < m; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (unsigned i = m; i-- > 0;) {
      f[i] = static_cast<unsigned>(c % p);
      c /= p;
    }
    if (is_primitive(f, p, n, factors)) return f;
  }
  throw std::logic_error("no primitive polynomial found");
}

std::uint32_t add_codes(std::uint32_t x, std::uint32_t y, unsigned p, unsigned m) {
  std::uint32_t r = 0, place = 1;
  for (unsigned i = 0; i < m; ++i) {
    r += ((x % p + y % p) % p) * place;
    x /= p;
    y /= p;
    place *= p;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned gcd(unsigned a, unsigned b) { return std::gcd(a, b); }

Field make_field(unsigned p, unsigned m, std::uint64_t max_order) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  if (m == 0) throw std::invalid_argument("extension degree m must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > max_order)
      throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                  " exceeds the enumeration bound " + std::to_string(max_order));
  }

  auto t = std::make_shared<FieldTables>();
  t->p = p;
  t->m = m;
  t->q = static_cast<std::uint32_t>(q);
  const std::uint32_t n = t->q - 1;
  t->modulus = smallest_primitive(p, m, n);

  // Powers of alpha as base-p codes; multiply by x and reduce.
  t->antilog.resize(n);
  t->code_to_index.assign(t->q, 0);
  Poly cur(m, 0);
  cur[0] = 1;
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t code = 0, place = 1;
    for (unsigned i = 0; i < m; ++i) {
      code += cur[i] * place;
      place *= p;
    }
    t->antilog[k] = code;
    if (code == 0 || t->code_to_index[code] != 0)
      throw std::logic_error("modulus is not primitive");
    t->code_to_index[code] = k + 1;
    // cur *= x
    const unsigned lead = cur[m - 1];
    for (unsigned i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < m; ++i) cur[i] = (cur[i] + lead * (p - t->modulus[i])) % p;
  }

  t->zech.resize(n);
  for (std::uint32_t k = 0; k < n; ++k)
    t->zech[k] = t->code_to_index[add_codes(1, t->antilog[k], p, m)];

  Field field(t);
  // Tr(alpha^j) for basis elements, then extend linearly over the codes.
  std::vector<unsigned> basis_trace(m);
  for (unsigned j = 0; j < m; ++j) {
    const Elem b = field.from_log(j);
    Elem s = field.zero();
    for (unsigned i = 0; i < m; ++i) s = field.add(s, field.frobenius(b, i));
    const auto v = field.as_prime(s);
    if (!v) throw std::logic_error("trace left the prime field");
    basis_trace[j] = *v;
  }
  t->trace_log.resize(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t code = t->antilog[k];
    unsigned tr = 0;
    for (unsigned j = 0; j < m; ++j) {
      tr += (code % p) * basis_trace[j];
      code /= p;
    }
    t->trace_log[k] = static_cast<std::uint8_t>(tr % p);
  }
  return Field(std::move(t));
}

unsigned Field::p() const { return t_->p; }
unsigned Field::m() const { return t_->m; }
std::uint32_t Field::q() const { return t_->q; }
std::span<const unsigned> Field::modulus() const { return t_->modulus; }
std::span<const std::uint8_t> Field::trace_by_log() const { return t_->trace_log; }

Elem Field::alpha() const { return from_log(1); }

Elem Field::from_log(std::uint64_t k) const {
  return {static_cast<std::uint32_t>(k % n()) + 1};
}

std::uint32_t Field::log(Elem x) const {
  if (x.is_zero()) throw std::domain_error("log of zero");
  return x.index - 1;
}

Elem Field::mul(Elem x, Elem y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  return from_log(std::uint64_t(x.index - 1) + (y.index - 1));
}

Elem Field::add(Elem x, Elem y) const {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const std::uint32_t lx = x.index - 1, ly = y.index - 1;
  const std::uint32_t d = ly >= lx ? ly - lx : ly + n() - lx;
  const std::uint32_t z = t_->zech[d];
  if (z == 0) return zero();
  return from_log(std::uint64_t(lx) + (z - 1));
}

Elem Field::neg(Elem x) const {
  if (x.is_zero()) return x;
  return from_log(std::uint64_t(x.index - 1) + n() / 2);
}

Elem Field::inv(Elem x) const {
  if (x.is_zero()) throw std::domain_error("inverse of zero");
  return from_log(n() - (x.index - 1));
}

Elem Field::pow(Elem x, std::int64_t e) const {
  if (e == 0) return one();
  if (x.is_zero()) {
    if (e < 0) throw std::domain_error("negative power of zero");
    return zero();
  }
  const std::int64_t nn = n();
  std::int64_t r = e % nn;
  if (r < 0) r += nn;
  const auto lx = static_cast<unsigned __int128>(x.index - 1);
  return from_log(static_cast<std::uint64_t>((lx * static_cast<std::uint64_t>(r)) % n()));
}

Elem Field::frobenius(Elem x, unsigned k) const {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k % m(); ++i) e = (e * p()) % n();
  return pow(x, static_cast<std::int64_t>(e));
}

unsigned Field::trace(Elem x) const {
  if (x.is_zero()) return 0;
  return t_->trace_log[x.index - 1];
}

int Field::eta(Elem x) const {
  if (x.is_zero()) return 0;
  return (x.index - 1) % 2 == 0 ? 1 : -1;
}

int Field::eta_prime(std::int64_t y) const {
  const std::int64_t pp = p();
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

Elem Field::embed(std::int64_t y) const {
  const std::int64_t pp = p();
  std::int64_t r = y % pp;
  if (r < 0) r += pp;
  return {t_->code_to_index[static_cast<std::uint32_t>(r)]};
}

std::optional<unsigned> Field::as_prime(Elem x) const {
  if (x.is_zero()) return 0u;
  const std::uint32_t code = t_->antilog[x.index - 1];
  if (code >= p()) return std::nullopt;
  return code;
}

std::vector<unsigned> Field::coords(Elem x) const {
  std::vector<unsigned> c(m(), 0);
  if (x.is_zero()) return c;
  std::uint32_t code = t_->antilog[x.index - 1];
  for (unsigned i = 0; i < m(); ++i) {
    c[i] = code % p();
    code /= p();
  }
  return c;
}

Elem Field::from_coords(std::span<const unsigned> c) const {
  if (c.size() != m()) throw std::invalid_argument("coordinate vector has wrong length");
  std::uint32_t code = 0, place = 1;
  for (unsigned i = 0; i < m(); ++i) {
    code += (c[i] % p()) * place;
    place *= p();
  }
  return {t_->code_to_index[code]};
}

std::uint64_t LinearizedSolution::count(unsigned p) const {
  if (!solvable()) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < kernel_basis.size(); ++i) c *= p;
  return c;
}

Elem linearized_apply(const Field& f, Elem a, unsigned l, Elem x) {
  const Elem lead = f.frobenius(a, l);
  return f.add(f.mul(lead, f.frobenius(x, 2 * l)), f.mul(a, x));
}

LinearizedSolution solve_linearized(const Field& f, Elem a, unsigned l, Elem rhs) {
  if (a.is_zero()) throw std::invalid_argument("solve_linearized: a must be nonzero");
  if (gcd(f.m(), l) != 1) throw std::invalid_argument("solve_linearized: gcd(m, l) must be 1");
  const unsigned m = f.m(), p = f.p();

  // Augmented matrix [M | rhs], column j = coords of f(alpha^j).
  std::vector<std::vector<unsigned>> M(m, std::vector<unsigned>(m + 1, 0));
  for (unsigned j = 0; j < m; ++j) {
    const auto col = f.coords(linearized_apply(f, a, l, f.from_log(j)));
    for (unsigned i = 0; i < m; ++i) M[i][j] = col[i];
  }
  const auto r = f.coords(rhs);
  for (unsigned i = 0; i < m; ++i) M[i][m] = r[i];

  auto inv_mod = [p](unsigned v) {
    unsigned acc = 1, b = v % p;
    for (unsigned e = p - 2; e; e >>= 1) {
      if (e & 1) acc = acc * b % p;
      b = b * b % p;
    }
    return acc;
  };

  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(m, false);
  unsigned row = 0;
  for (unsigned col = 0; col < m && row < m; ++col) {
    unsigned sel = row;
    while (sel < m && M[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(M[sel], M[row]);
    const unsigned s = inv_mod(M[row][col]);
    for (auto& v : M[row]) v = v * s % p;
    for (unsigned i = 0; i < m; ++i) {
      if (i == row || M[i][col] == 0) continue;
      const unsigned factor = M[i][col];
      for (unsigned j = 0; j <= m; ++j) M[i][j] = (M[i][j] + (p - factor) * M[row][j]) % p;
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }

  LinearizedSolution out;
  for (unsigned i = row; i < m; ++i)
    if (M[i][m] != 0) return out;

  std::vector<unsigned> x(m, 0);
  for (unsigned i = 0; i < row; ++i) x[pivot_col_of_row[i]] = M[i][m];
  out.particular = f.from_coords(x);

  for (unsigned free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<unsigned> k(m, 0);
    k[free] = 1;
    for (unsigned i = 0; i < row; ++i) k[pivot_col_of_row[i]] = (p - M[i][free]) % p;
    out.kernel_basis.push_back(f.from_coords(k));
  }
  return out;
}

std::vector<Elem> enumerate_solutions(const Field& f, const LinearizedSolution& s) {
  std::vector<Elem> out;
  if (!s.solvable()) return out;
  out.push_back(*s.particular);
  for (const Elem k : s.kernel_basis) {
    const std::size_t base = out.size();
    for (unsigned c = 1; c < f.p(); ++c)
      for (std::size_t i = 0; i < base; ++i) out.push_back(f.add(out[i], f.mul(f.embed(c), k)));
  }
  return out;
}

}  // namespace dfc::gf
