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

#include "dfc/sums.hpp"

#include <stdexcept>
#include <unordered_map>

#include "dfc/enumerate.hpp"

namespace dfc::sums {

using cyclo::CycInt;
using gf::Elem;

SumSpec make_sum_spec(const gf::Field& field, unsigned l) {
  if (l == 0) throw std::invalid_argument("l must be >= 1");
  if (gf::gcd(field.m(), l) != 1) throw std::invalid_argument("gcd(m, l) must be 1");
  return SumSpec{field, l};
}

std::vector<std::uint64_t> trace_counts_abc(const SumSpec& spec, Elem a, Elem b, Elem c) {
  const auto& f = spec.field;
  const auto e = static_cast<std::int64_t>(detail::quadratic_exponent(f, spec.l));
  std::vector<std::uint64_t> counts(f.p(), 0);
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    const Elem x{i};
    Elem v = f.mul(a, f.pow(x, e == 0 ? std::int64_t(f.n()) : e));
    v = f.add(v, f.mul(b, f.mul(x, x)));
    v = f.add(v, f.mul(c, x));
    ++counts[f.trace(v)];
  }
  return counts;
}

CycInt sum_abc(const SumSpec& spec, Elem a, Elem b, Elem c) {
  return cyclo::from_trace_counts(spec.field.p(), trace_counts_abc(spec, a, b, c));
}

CycInt sum_ab_direct(const SumSpec& spec, Elem a, Elem b) {
  return sum_abc(spec, a, spec.field.zero(), b);
}

bool is_degenerate_quadratic(const gf::Field& f, Elem a) {
  if (f.m() % 2 != 0 || a.is_zero()) return false;
  const Elem lhs = f.pow(a, f.n() / (f.p() + 1));
  const Elem rhs = f.embed((f.m() / 2) % 2 == 0 ? 1 : -1);
  return lhs == rhs;
}

CycInt sum_ab_closed(const SumSpec& spec, Elem a, Elem b) {
  const auto& f = spec.field;
  if (a.is_zero()) throw std::invalid_argument("sum_ab_closed: a must be nonzero");
  const unsigned p = f.p(), m = f.m();
  const auto e = static_cast<std::int64_t>(detail::quadratic_exponent(f, spec.l));

  const Elem rhs = f.neg(f.frobenius(b, spec.l));
  const auto sol = gf::solve_linearized(f, a, spec.l, rhs);
  if (!sol.solvable()) return CycInt(p);

  const Elem x = *sol.particular;
  const Elem arg = f.neg(f.mul(a, f.pow(x, e == 0 ? std::int64_t(f.n()) : e)));
  const CycInt phase = CycInt::zeta_power(p, f.trace(arg));

  if (m % 2 == 1) {
    const CycInt g = cyclo::cyc_pow(cyclo::gauss_sum(p), m);
    return g * BigInt(f.eta(a)) * phase;
  }
  const BigInt sign = (m / 2) % 2 == 0 ? 1 : -1;
  if (!is_degenerate_quadratic(f, a)) return phase * (sign * big_pow(p, m / 2));
  return phase * (-sign * big_pow(p, m / 2 + 1));
}

cyclo::ValueDistribution value_distribution_abc(const SumSpec& spec, const RunOptions& opts) {
  const auto& f = spec.field;
  const double q = f.q();
  check_work(q * q * q * q, opts.budget, "value_distribution_abc");
  const unsigned p = f.p();

  // Encode the first p-1 counts in base q+1; the last is implied by the total.
  long double span = 1;
  for (unsigned i = 0; i + 1 < p; ++i) span *= (q + 1);
  if (span > 1.8e19L) throw BudgetExceeded("count vector does not fit a 64-bit key");

  using Partial = std::unordered_map<std::uint64_t, std::uint64_t>;
  const detail::TraceFormEnumerator en(f, spec.l, true);
  const std::uint64_t radix = f.q() + 1;
  Partial merged = shard_reduce<Partial>(
      f.q(), opts.shards,
      [&](std::uint32_t begin, std::uint32_t end) {
        Partial part;
        en.run(begin, end, [&](Elem, Elem, Elem, std::span<const std::uint32_t> counts, auto) {
          std::uint64_t key = 0;
          for (unsigned j = p - 1; j-- > 0;) key = key * radix + counts[j];
          ++part[key];
        });
        return part;
      },
      [](Partial& into, Partial&& from) {
        for (const auto& [k, v] : from) into[k] += v;
      });

  cyclo::ValueDistribution out;
  std::vector<std::uint64_t> counts(p);
  for (const auto& [key, mult] : merged) {
    std::uint64_t k = key, used = 0;
    for (unsigned j = 0; j + 1 < p; ++j) {
      counts[j] = k % radix;
      k /= radix;
      used += counts[j];
    }
    counts[p - 1] = f.q() - used;
    out[cyclo::from_trace_counts(p, counts)] += mult;
  }
  return out;
}

namespace {

struct TableBuilder {
  unsigned p;
  std::vector<TableRow> rows;

  Rational P(int e) const { return rat_pow(p, e); }

  // sign * zeta^j * G^g * p^e
  CycInt value(int sign, unsigned j, unsigned g, unsigned e) const {
    CycInt v = CycInt::zeta_power(p, j) * (BigInt(sign) * big_pow(p, e));
    if (g) v *= cyclo::gauss_sum(p);
    return v;
  }

  void add(std::string label, CycInt v, const Rational& mult) {
    rows.push_back({label, std::move(v), require_integer(mult, "table multiplicity " + label)});
  }
};

std::string jlabel(const std::string& base, unsigned j) { return base + " [j=" + std::to_string(j) + "]"; }

}  // namespace

std::vector<TableRow> expected_table_rows(const SumSpec& spec) {
  const unsigned p = spec.field.p();
  const int m = static_cast<int>(spec.field.m());
  if (m < 3) throw std::invalid_argument("expected_table requires m >= 3");
  TableBuilder t{p, {}};
  const Rational half(1, 2);
  const Rational M = t.P(m) - 1;
  const Rational D = Rational(p) * p - 1;
  const Rational w = M * (t.P(2 * m - 1) - t.P(2 * m - 2) + t.P(2 * m - 3) - t.P(m - 2) + 1);

  if (m % 2 == 1) {
    const int A = (m - 1) / 2, B = (m + 1) / 2, C = (m - 3) / 2;
    const Rational K = t.P(m) - t.P(m - 1) - t.P(m - 2) + 1;
    const Rational n_pm_g = half * t.P(m + 1) * K * M / D;
    t.add("+G p^((m-1)/2)", t.value(1, 0, 1, A), n_pm_g);
    t.add("-G p^((m-1)/2)", t.value(-1, 0, 1, A), n_pm_g);
    for (unsigned j = 1; j < p; ++j) {
      const int s = cyclo::legendre(-static_cast<std::int64_t>(j), p);
      t.add(jlabel("+z^j G p^((m-1)/2)", j), t.value(1, j, 1, A),
            half * t.P((m + 3) / 2) * (t.P(A) + s) * K * M / D);
      t.add(jlabel("-z^j G p^((m-1)/2)", j), t.value(-1, j, 1, A),
            half * t.P((m + 3) / 2) * (t.P(A) - s) * K * M / D);
    }
    t.add("+p^((m+1)/2)", t.value(1, 0, 0, B), half * t.P(m - 2) * (t.P(A) + 1) * (t.P(A) + p - 1) * M);
    t.add("-p^((m+1)/2)", t.value(-1, 0, 0, B), half * t.P(m - 2) * (t.P(A) - 1) * (t.P(A) - p + 1) * M);
    for (unsigned j = 1; j < p; ++j) {
      const Rational n = half * t.P(m - 2) * (t.P(m - 1) - 1) * M;
      t.add(jlabel("+z^j p^((m+1)/2)", j), t.value(1, j, 0, B), n);
      t.add(jlabel("-z^j p^((m+1)/2)", j), t.value(-1, j, 0, B), n);
    }
    const Rational n_g2 = half * t.P(m - 3) * (t.P(m - 1) - 1) * M / D;
    t.add("+G p^((m+1)/2)", t.value(1, 0, 1, B), n_g2);
    t.add("-G p^((m+1)/2)", t.value(-1, 0, 1, B), n_g2);
    for (unsigned j = 1; j < p; ++j) {
      const int s = cyclo::legendre(-static_cast<std::int64_t>(j), p);
      t.add(jlabel("+z^j G p^((m+1)/2)", j), t.value(1, j, 1, B),
            half * t.P(C) * (t.P(C) + s) * (t.P(m - 1) - 1) * M / D);
      t.add(jlabel("-z^j G p^((m+1)/2)", j), t.value(-1, j, 1, B),
            half * t.P(C) * (t.P(C) - s) * (t.P(m - 1) - 1) * M / D);
    }
  } else {
    const int h = m / 2;
    const Rational X = t.P(m) - t.P(m - 1) - t.P(m - 2);
    const Rational Xp = X + t.P(h) - t.P(h - 1) + 1;
    const Rational Xm = X - t.P(h) + t.P(h - 1) + 1;
    t.add("+p^(m/2)", t.value(1, 0, 0, h), (t.P(h) + p - 1) * Xp * t.P(h + 1) * M / (2 * D));
    t.add("-p^(m/2)", t.value(-1, 0, 0, h), t.P(h + 1) * (t.P(h) - p + 1) * Xm * M / (2 * D));
    for (unsigned j = 1; j < p; ++j) {
      t.add(jlabel("+z^j p^(m/2)", j), t.value(1, j, 0, h), t.P(h + 1) * (t.P(h) - 1) * Xp * M / (2 * D));
      t.add(jlabel("-z^j p^(m/2)", j), t.value(-1, j, 0, h), t.P(h + 1) * (t.P(h) + 1) * Xm * M / (2 * D));
    }
    const Rational n_g = half * t.P(2 * m - 3) * M;
    t.add("+G p^(m/2)", t.value(1, 0, 1, h), n_g);
    t.add("-G p^(m/2)", t.value(-1, 0, 1, h), n_g);
    for (unsigned j = 1; j < p; ++j) {
      const int s = cyclo::legendre(-static_cast<std::int64_t>(j), p);
      t.add(jlabel("+z^j G p^(m/2)", j), t.value(1, j, 1, h), half * t.P(3 * h - 2) * (t.P(h - 1) + s) * M);
      t.add(jlabel("-z^j G p^(m/2)", j), t.value(-1, j, 1, h), half * t.P(3 * h - 2) * (t.P(h - 1) - s) * M);
    }
    t.add("+p^(m/2+1)", t.value(1, 0, 0, h + 1),
          half * t.P(h - 2) * (t.P(h - 1) + 1) * (t.P(h) - 1) * (t.P(h - 1) + p - 1) * M / D);
    t.add("-p^(m/2+1)", t.value(-1, 0, 0, h + 1),
          half * t.P(h - 2) * (t.P(h - 1) - 1) * (t.P(h) + 1) * (t.P(h - 1) - p + 1) * M / D);
    for (unsigned j = 1; j < p; ++j) {
      t.add(jlabel("+z^j p^(m/2+1)", j), t.value(1, j, 0, h + 1),
            half * t.P(h - 2) * (t.P(h) - 1) * (t.P(m - 2) - 1) * M / D);
      t.add(jlabel("-z^j p^(m/2+1)", j), t.value(-1, j, 0, h + 1),
            half * t.P(h - 2) * (t.P(h) + 1) * (t.P(m - 2) - 1) * M / D);
    }
  }
  t.add("0", CycInt(p), w);
  t.add("p^m", t.value(1, 0, 0, static_cast<unsigned>(m)), Rational(1));
  return t.rows;
}

cyclo::ValueDistribution expected_table(const SumSpec& spec) {
  cyclo::ValueDistribution out;
  for (auto& row : expected_table_rows(spec)) {
    if (row.multiplicity == 0) continue;
    out[row.value] += row.multiplicity;
  }
  return out;
}

}  // namespace dfc::sums
