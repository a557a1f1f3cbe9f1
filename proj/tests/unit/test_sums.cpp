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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "dfc/sums.hpp"

using namespace dfc;
using namespace dfc::sums;
using cyclo::CycInt;
using gf::Elem;

namespace {

// Value multiset computed straight from field operations.
cyclo::ValueDistribution oracle_distribution(const SumSpec& s) {
  const auto& f = s.field;
  const std::int64_t e = std::int64_t(std::pow(f.p(), s.l)) + 1;
  std::vector<Elem> xe(f.q()), x2(f.q());
  for (std::uint32_t x = 0; x < f.q(); ++x) {
    xe[x] = f.pow(Elem{x}, e);
    x2[x] = f.mul(Elem{x}, Elem{x});
  }
  cyclo::ValueDistribution out;
  std::vector<std::uint64_t> n(f.p());
  for (std::uint32_t a = 0; a < f.q(); ++a)
    for (std::uint32_t b = 0; b < f.q(); ++b)
      for (std::uint32_t c = 0; c < f.q(); ++c) {
        std::fill(n.begin(), n.end(), 0);
        for (std::uint32_t x = 0; x < f.q(); ++x) {
          const Elem v = f.add(f.add(f.mul(Elem{a}, xe[x]), f.mul(Elem{b}, x2[x])), f.mul(Elem{c}, Elem{x}));
          ++n[f.trace(v)];
        }
        out[cyclo::from_trace_counts(f.p(), n)] += 1;
      }
  return out;
}

CycInt q_value(const SumSpec& s) { return CycInt::rational(s.field.p(), s.field.q()); }

}  // namespace

TEST_CASE("sum spec validation") {
  CHECK_THROWS_AS(make_sum_spec(gf::make_field(3, 4), 2), std::invalid_argument);
  CHECK_THROWS_AS(make_sum_spec(gf::make_field(3, 3), 0), std::invalid_argument);
  CHECK_NOTHROW(make_sum_spec(gf::make_field(3, 4), 3));
}

TEST_CASE("trace counts and trivial sums") {
  const auto s = make_sum_spec(gf::make_field(3, 3));
  const auto& f = s.field;
  CHECK(trace_counts_abc(s, f.zero(), f.zero(), f.zero()) == std::vector<std::uint64_t>{27, 0, 0});
  for (std::uint32_t c = 1; c < f.q(); ++c) {
    CHECK(trace_counts_abc(s, f.zero(), f.zero(), Elem{c}) == std::vector<std::uint64_t>{9, 9, 9});
    CHECK(sum_abc(s, f.zero(), f.zero(), Elem{c}).is_zero());
    CHECK(sum_ab_direct(s, f.zero(), Elem{c}).is_zero());
  }
  CHECK(sum_abc(s, f.zero(), f.zero(), f.zero()) == q_value(s));
  CHECK(sum_ab_direct(s, f.zero(), f.zero()) == q_value(s));
}

TEST_CASE("S(a,0) for odd m is G^m eta(a)") {
  for (auto [p, m] : {std::pair{3u, 3u}, {5u, 3u}, {3u, 5u}}) {
    const auto s = make_sum_spec(gf::make_field(p, m));
    const auto g = cyclo::cyc_pow(cyclo::gauss_sum(p), m);
    for (std::uint32_t a = 1; a < s.field.q(); ++a) {
      const CycInt want = cyclo::cyc_scale(g, s.field.eta(Elem{a}));
      REQUIRE(sum_ab_direct(s, Elem{a}, s.field.zero()) == want);
      REQUIRE(sum_abc(s, Elem{a}, s.field.zero(), s.field.zero()) == want);
    }
  }
}

TEST_CASE("S(a,b) closed form equals the direct sum") {
  for (auto [p, m, l] : {std::tuple{3u, 3u, 1u}, {3u, 3u, 2u}, {3u, 4u, 1u}, {3u, 4u, 3u}, {5u, 3u, 1u}, {7u, 3u, 1u}}) {
    const auto s = make_sum_spec(gf::make_field(p, m), l);
    for (std::uint32_t a = 1; a < s.field.q(); ++a)
      for (std::uint32_t b = 0; b < s.field.q(); ++b)
        REQUIRE(sum_ab_closed(s, Elem{a}, Elem{b}) == sum_ab_direct(s, Elem{a}, Elem{b}));
  }
  const auto s = make_sum_spec(gf::make_field(3, 3));
  CHECK_THROWS_AS(sum_ab_closed(s, s.field.zero(), s.field.one()), std::invalid_argument);
}

TEST_CASE("even m closed-form special cases") {
  const auto s = make_sum_spec(gf::make_field(3, 4));
  const auto& f = s.field;
  const CycInt nondeg = CycInt::rational(3, 9);  // (-1)^(m/2) p^(m/2) with m = 4
  unsigned degenerate = 0, zeros = 0;
  for (std::uint32_t a = 1; a < f.q(); ++a) {
    if (!is_degenerate_quadratic(f, Elem{a})) {
      CHECK(sum_ab_closed(s, Elem{a}, f.zero()) == nondeg);
      continue;
    }
    ++degenerate;
    for (std::uint32_t b = 0; b < f.q(); ++b) {
      const Elem rhs = f.neg(f.frobenius(Elem{b}, s.l));
      if (!gf::solve_linearized(f, Elem{a}, s.l, rhs).solvable()) {
        CHECK(sum_ab_closed(s, Elem{a}, Elem{b}).is_zero());
        ++zeros;
      }
    }
  }
  CHECK(degenerate == (f.q() - 1) / (f.p() + 1));
  CHECK(zeros > 0);
  CHECK_FALSE(is_degenerate_quadratic(gf::make_field(3, 3), gf::make_field(3, 3).one()));
}

TEST_CASE("expected tables total q^3 with one entry p^m") {
  for (auto [p, m] : {std::pair{3u, 3u}, {3u, 4u}, {5u, 3u}, {3u, 5u}, {5u, 4u}, {3u, 6u}, {7u, 3u}, {7u, 4u}, {3u, 7u}}) {
    const auto s = make_sum_spec(gf::make_field(p, m));
    const auto t = expected_table(s);
    CHECK(cyclo::total_count(t) == big_pow(s.field.q(), 3));
    CHECK(t.at(q_value(s)) == 1);
  }
  const auto s = make_sum_spec(gf::make_field(3, 3));
  const BigInt q = 27;
  CHECK(expected_table(s).at(CycInt(3)) == (q - 1) * (big_pow(3, 5) - big_pow(3, 4) + big_pow(3, 3) - 3 + 1));
  CHECK_THROWS_AS(expected_table(make_sum_spec(gf::make_field(3, 2))), std::invalid_argument);
}

TEST_CASE("enumeration kernel agrees with the field-operation oracle") {
  for (unsigned l : {1u, 2u}) {
    const auto s = make_sum_spec(gf::make_field(3, 3), l);
    CHECK(value_distribution_abc(s) == oracle_distribution(s));
  }
}

TEST_CASE("value distributions match the closed-form tables") {
  for (auto [p, m, l] : {std::tuple{3u, 3u, 1u}, {3u, 3u, 2u}, {3u, 4u, 1u}, {3u, 4u, 3u}, {5u, 3u, 1u}}) {
    const auto s = make_sum_spec(gf::make_field(p, m), l);
    const auto got = value_distribution_abc(s);
    CHECK(cyclo::total_count(got) == big_pow(s.field.q(), 3));
    CHECK(got == expected_table(s));
  }
}

TEST_CASE("sharding does not change the distribution") {
  const auto s = make_sum_spec(gf::make_field(3, 4));
  RunOptions one, many;
  many.shards = 5;
  CHECK(value_distribution_abc(s, one) == value_distribution_abc(s, many));
}

TEST_CASE("budget is enforced before enumeration") {
  const auto s = make_sum_spec(gf::make_field(3, 4));
  RunOptions tight;
  tight.budget.max_work = 1e6;
  CHECK_THROWS_AS(value_distribution_abc(s, tight), BudgetExceeded);
}

TEST_CASE("Galois covariance S(ya,yb,yc) = sigma_y S(a,b,c)") {
  const auto s = make_sum_spec(gf::make_field(3, 3));
  const auto& f = s.field;
  for (std::int64_t y = 1; y < 3; ++y) {
    const Elem ye = f.embed(y);
    for (std::uint32_t a = 0; a < f.q(); ++a)
      for (std::uint32_t b = 0; b < f.q(); ++b)
        for (std::uint32_t c = 0; c < f.q(); ++c) {
          const CycInt lhs = sum_abc(s, f.mul(ye, Elem{a}), f.mul(ye, Elem{b}), f.mul(ye, Elem{c}));
          REQUIRE(lhs == cyclo::galois(y, sum_abc(s, Elem{a}, Elem{b}, Elem{c})));
        }
  }
}
