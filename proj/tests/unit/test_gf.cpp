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

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "dfc/gf.hpp"

using namespace dfc::gf;

namespace {

// Schoolbook arithmetic on coefficient vectors modulo the field's modulus.
struct PolyOracle {
  unsigned p, m;
  std::vector<unsigned> mod;

  PolyOracle(unsigned p_, unsigned m_, std::vector<unsigned> mod_) : p(p_), m(m_), mod(std::move(mod_)) {}
  explicit PolyOracle(const Field& f) : PolyOracle(f.p(), f.m(), {f.modulus().begin(), f.modulus().end()}) {}

  std::vector<unsigned> add(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    std::vector<unsigned> c(m);
    for (unsigned i = 0; i < m; ++i) c[i] = (a[i] + b[i]) % p;
    return c;
  }
  std::vector<unsigned> mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
    std::vector<unsigned> c(2 * m, 0);
    for (unsigned i = 0; i < m; ++i)
      for (unsigned j = 0; j < m; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (unsigned d = 2 * m - 1; d >= m; --d) {
      const unsigned t = c[d];
      if (!t) continue;
      c[d] = 0;
      for (unsigned i = 0; i < m; ++i) c[d - m + i] = (c[d - m + i] + (p - t) * mod[i]) % p;
    }
    c.resize(m);
    return c;
  }
};

}  // namespace

TEST_CASE("make_field rejects bad parameters") {
  CHECK_THROWS_AS(make_field(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(make_field(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_field(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_field(3, 20), std::invalid_argument);
}

TEST_CASE("degree-one field uses the smallest primitive root") {
  const Field f = make_field(3, 1);
  // x + 1 has root 2, the generator of F_3^*; x + 2 has root 1.
  CHECK(f.modulus()[0] == 1);
  CHECK(f.as_prime(f.alpha()) == 2u);
}

TEST_CASE("modulus is the lexicographically smallest primitive polynomial") {
  for (auto [p, m] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {3u, 4u}, {7u, 2u}}) {
    const Field f = make_field(p, m);
    const unsigned q = f.q();
    std::vector<unsigned> chosen(f.modulus().begin(), f.modulus().end());
    // Walk all monic polynomials in (c_0, c_1, ...) order; the first one with
    // a root of order q-1 must be the chosen modulus.
    std::vector<unsigned> c(m + 1, 0);
    c[m] = 1;
    bool found = false;
    for (std::uint64_t code = 0; code < std::uint64_t(q) && !found; ++code) {
      std::uint64_t t = code;
      for (unsigned i = m; i-- > 0; t /= p) c[i] = t % p;  // c_0 most significant
      if (c[0] == 0) continue;
      // Order of x modulo c by repeated multiplication.
      std::vector<unsigned> cur(m, 0), one(m, 0);
      one[0] = 1;
      if (m == 1) {
        cur[0] = (p - c[0]) % p;
      } else {
        cur[1] = 1;
      }
      const std::vector<unsigned> x = cur;
      unsigned order = 1;
      const PolyOracle o(p, m, c);
      while (cur != one && order <= q) {
        cur = o.mul(cur, x);
        ++order;
      }
      if (order == q - 1) {
        CHECK(c == chosen);
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("alpha is primitive") {
  for (auto [p, m] : {std::pair{3u, 3u}, {5u, 3u}, {3u, 4u}, {7u, 3u}}) {
    const Field f = make_field(p, m);
    const std::int64_t n = f.n();
    CHECK(f.pow(f.alpha(), n) == f.one());
    for (auto r : prime_factors(n)) CHECK(f.pow(f.alpha(), n / static_cast<std::int64_t>(r)) != f.one());
  }
  const Field f = make_field(5, 3);
  CHECK(f.pow(f.alpha(), 62) != f.one());
  CHECK(f.pow(f.alpha(), 4) != f.one());
}

TEST_CASE("field operations agree with polynomial arithmetic") {
  for (auto [p, m] : {std::pair{3u, 2u}, {3u, 3u}, {5u, 2u}, {5u, 3u}, {7u, 2u}}) {
    const Field f = make_field(p, m);
    const PolyOracle o(f);
    for (std::uint32_t i = 0; i < f.q(); ++i) {
      const Elem x{i};
      CHECK(f.from_coords(f.coords(x)) == x);
      CHECK(f.add(x, f.neg(x)) == f.zero());
      if (!x.is_zero()) {
        CHECK(f.mul(x, f.inv(x)) == f.one());
        CHECK(f.pow(x, f.n()) == f.one());
      }
      for (std::uint32_t j = 0; j < f.q(); j += 1 + (f.q() > 64 ? 3 : 0)) {
        const Elem y{j};
        REQUIRE(f.coords(f.add(x, y)) == o.add(f.coords(x), f.coords(y)));
        REQUIRE(f.coords(f.mul(x, y)) == o.mul(f.coords(x), f.coords(y)));
      }
    }
  }
}

TEST_CASE("canonical index matches powers of alpha") {
  const Field f = make_field(3, 3);
  Elem cur = f.one();
  for (std::uint32_t k = 0; k < f.n(); ++k) {
    CHECK(cur.index == k + 1);
    CHECK(f.log(cur) == k);
    cur = f.mul(cur, f.alpha());
  }
  CHECK(f.pow(f.alpha(), 26) == f.one());
  CHECK(f.pow(f.alpha(), 13) != f.one());
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.pow(f.alpha(), -1) == f.inv(f.alpha()));
}

TEST_CASE("trace is the sum of conjugates and is balanced") {
  for (auto [p, m] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 3u}, {7u, 2u}, {3u, 6u}}) {
    const Field f = make_field(p, m);
    std::vector<unsigned> fibers(p, 0);
    for (std::uint32_t i = 0; i < f.q(); ++i) {
      const Elem x{i};
      Elem s = f.zero();
      for (unsigned k = 0; k < m; ++k) s = f.add(s, f.frobenius(x, k));
      const auto t = f.as_prime(s);
      REQUIRE(t.has_value());
      CHECK(*t == f.trace(x));
      ++fibers[f.trace(x)];
    }
    for (auto c : fibers) CHECK(c == f.q() / p);
  }
  const Field f = make_field(3, 3);
  CHECK(f.trace(f.zero()) == 0);
  CHECK(f.trace(f.one()) == 0);
  CHECK(make_field(5, 3).trace(make_field(5, 3).one()) == 3);
}

TEST_CASE("trace is F_p-linear") {
  const Field f = make_field(5, 3);
  for (std::uint32_t i = 0; i < f.q(); i += 7)
    for (std::uint32_t j = 0; j < f.q(); j += 5)
      for (unsigned y = 0; y < 5; ++y) {
        const Elem lhs = f.add(f.mul(f.embed(y), Elem{i}), Elem{j});
        CHECK(f.trace(lhs) == (y * f.trace(Elem{i}) + f.trace(Elem{j})) % 5);
      }
}

TEST_CASE("quadratic characters") {
  const Field f = make_field(3, 3);
  CHECK(f.eta(f.zero()) == 0);
  int plus = 0, minus = 0;
  for (std::uint32_t i = 1; i < f.q(); ++i) {
    const Elem x{i};
    CHECK(f.eta(f.mul(x, x)) == 1);
    plus += f.eta(x) == 1;
    minus += f.eta(x) == -1;
  }
  CHECK(plus == 13);
  CHECK(minus == 13);

  // Every element of F_p is a square in F_{p^m} for even m.
  for (auto [p, m] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 4u}, {7u, 2u}}) {
    const Field g = make_field(p, m);
    for (unsigned y = 1; y < p; ++y) CHECK(g.eta(g.embed(y)) == 1);
  }
  // eta' against Euler's criterion.
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    const Field g = make_field(p, 1);
    CHECK(g.eta_prime(0) == 0);
    for (unsigned y = 1; y < p; ++y) {
      unsigned e = 1;
      for (unsigned k = 0; k < (p - 1) / 2; ++k) e = e * y % p;
      CHECK(g.eta_prime(y) == (e == 1 ? 1 : -1));
      CHECK(g.eta_prime(static_cast<std::int64_t>(y) - static_cast<std::int64_t>(p)) == g.eta_prime(y));
    }
  }
}

TEST_CASE("solve_linearized agrees with exhaustive search") {
  for (auto [p, m, l] : {std::tuple{3u, 3u, 1u}, {3u, 3u, 2u}, {3u, 4u, 1u}, {3u, 4u, 3u}, {5u, 2u, 1u}, {5u, 3u, 1u}}) {
    const Field f = make_field(p, m);
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      std::vector<std::vector<Elem>> pre(f.q());
      for (std::uint32_t x = 0; x < f.q(); ++x) pre[linearized_apply(f, Elem{a}, l, Elem{x}).index].push_back(Elem{x});
      for (std::uint32_t rhs = 0; rhs < f.q(); ++rhs) {
        const auto sol = solve_linearized(f, Elem{a}, l, Elem{rhs});
        auto got = enumerate_solutions(f, sol);
        std::sort(got.begin(), got.end());
        REQUIRE(got == pre[rhs]);
        REQUIRE(sol.count(p) == pre[rhs].size());
      }
    }
  }
}

TEST_CASE("linearized kernel: permutation for odd m, size 1 or p^2 for even m") {
  const Field odd = make_field(3, 3);
  for (std::uint32_t a = 1; a < odd.q(); ++a) {
    CHECK(solve_linearized(odd, Elem{a}, 1, odd.zero()).unique());
    CHECK(*solve_linearized(odd, Elem{a}, 1, odd.zero()).particular == odd.zero());
  }
  const Field f = make_field(3, 4);
  const std::int64_t e = (f.q() - 1) / (f.p() + 1);
  const Elem target = f.one();  // (-1)^(m/2) with m = 4
  std::set<std::uint64_t> sizes;
  for (std::uint32_t a = 1; a < f.q(); ++a) {
    const auto sol = solve_linearized(f, Elem{a}, 1, f.zero());
    const bool degenerate = f.pow(Elem{a}, e) == target;
    CHECK(sol.count(3) == (degenerate ? 9u : 1u));
    sizes.insert(sol.count(3));
  }
  CHECK(sizes == std::set<std::uint64_t>{1, 9});
}

TEST_CASE("solve_linearized rejects bad input") {
  const Field f = make_field(3, 4);
  CHECK_THROWS_AS(solve_linearized(f, f.zero(), 1, f.one()), std::invalid_argument);
  CHECK_THROWS_AS(solve_linearized(f, f.one(), 2, f.one()), std::invalid_argument);
}

TEST_CASE("number-theory helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_factors(26) == std::vector<std::uint64_t>{2, 13});
  CHECK(prime_factors(80) == std::vector<std::uint64_t>{2, 5});
  CHECK(gcd(4, 6) == 2);
}
