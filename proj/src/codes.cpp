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

#include "dfc/codes.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "dfc/enumerate.hpp"
#include "dfc/sums.hpp"

namespace dfc::codes {

using gf::Elem;

std::string to_string(Family f) { return f == Family::C1ext ? "c1" : "c2"; }

Family parse_family(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (t == "c1" || t == "c1ext") return Family::C1ext;
  if (t == "c2" || t == "c2ext") return Family::C2ext;
  throw std::invalid_argument("unknown code family '" + s + "' (expected c1 or c2)");
}

CodeSpec make_code_spec(Family family, const gf::Field& field, unsigned l) {
  if (field.m() < 3) throw std::invalid_argument("code families require m >= 3");
  if (l == 0 || gf::gcd(field.m(), l) != 1) throw std::invalid_argument("gcd(m, l) must be 1");
  return CodeSpec{family, field, l};
}

double parameter_space_size(const CodeSpec& spec) {
  const double q = spec.field.q();
  return spec.family == Family::C1ext ? q * q * q : q * q;
}

Codeword codeword(const CodeSpec& spec, Elem a, Elem b, Elem c, unsigned h) {
  if (spec.family == Family::C2ext && !b.is_zero())
    throw std::invalid_argument("C2ext codewords have no quadratic term");
  const auto& f = spec.field;
  const auto e = static_cast<std::int64_t>(detail::quadratic_exponent(f, spec.l));
  Codeword w(f.q());
  for (std::uint32_t i = 0; i < f.q(); ++i) {
    const Elem x{i};
    Elem v = f.mul(a, f.pow(x, e == 0 ? std::int64_t(f.n()) : e));
    v = f.add(v, f.mul(b, f.mul(x, x)));
    v = f.add(v, f.mul(c, x));
    w[i] = static_cast<std::uint8_t>((f.trace(v) + h) % f.p());
  }
  return w;
}

std::uint64_t hamming_weight(const Codeword& w) {
  return static_cast<std::uint64_t>(std::count_if(w.begin(), w.end(), [](auto s) { return s != 0; }));
}

std::uint64_t weight_of(const CodeSpec& spec, Elem a, Elem b, Elem c, unsigned h) {
  if (spec.family == Family::C2ext && !b.is_zero())
    throw std::invalid_argument("C2ext codewords have no quadratic term");
  const auto counts = sums::trace_counts_abc(sums::SumSpec{spec.field, spec.l}, a, b, c);
  const unsigned p = spec.field.p();
  return spec.field.q() - counts[(p - h % p) % p];
}

WeightDistribution weight_distribution_bruteforce(const CodeSpec& spec, const RunOptions& opts) {
  const auto& f = spec.field;
  check_work(parameter_space_size(spec) * f.q(), opts.budget, "weight_distribution_bruteforce");
  const std::uint32_t q = f.q();
  const unsigned p = f.p();
  using Hist = std::vector<std::uint64_t>;
  const detail::TraceFormEnumerator en(f, spec.l, spec.family == Family::C1ext);
  Hist hist = shard_reduce<Hist>(
      q, opts.shards,
      [&](std::uint32_t begin, std::uint32_t end) {
        Hist part(q + 1, 0);
        en.run(begin, end, [&](Elem, Elem, Elem, std::span<const std::uint32_t> counts, auto) {
          // h = 0 hits fiber 0; h != 0 hits fiber p - h.
          for (unsigned j = 0; j < p; ++j) ++part[q - counts[j]];
        });
        return part;
      },
      [](Hist& into, Hist&& from) {
        for (std::size_t i = 0; i < into.size(); ++i) into[i] += from[i];
      });
  WeightDistribution out;
  for (std::uint32_t w = 0; w <= q; ++w)
    if (hist[w]) out[w] = hist[w];
  return out;
}

namespace {

struct RowBuilder {
  unsigned p;
  std::vector<WeightRow> rows;

  Rational P(int e) const { return rat_pow(p, e); }

  void add(std::string formula, const Rational& weight, const Rational& mult) {
    const BigInt w = require_integer(weight, "weight " + formula);
    if (w < 0) throw std::logic_error("negative weight for " + formula);
    rows.push_back({formula, static_cast<std::uint64_t>(w), require_integer(mult, "multiplicity of " + formula)});
  }
};

}  // namespace

std::vector<WeightRow> closed_form_rows(const CodeSpec& spec) {
  const unsigned p = spec.field.p();
  const int m = static_cast<int>(spec.field.m());
  if (m < 3) throw std::invalid_argument("closed-form tables require m >= 3");
  RowBuilder r{p, {}};
  const Rational half(1, 2);
  const Rational M = r.P(m) - 1;
  const Rational base = r.P(m - 1) * (p - 1);
  const Rational pp(p);

  r.add("0", 0, 1);
  if (spec.family == Family::C1ext && m % 2 == 1) {
    const int A = (m - 1) / 2, B = (m + 1) / 2, C = (m - 3) / 2;
    r.add("p^(m-1)(p-1)", base,
          pp * (2 * r.P(2 * m - 1) - 2 * r.P(2 * m - 2) + r.P(2 * m - 3) - r.P(2 * m - 4) + r.P(m - 1) - r.P(m - 2) + 2) * M);
    r.add("p^A(p^B-p^A-p+1)", r.P(A) * (r.P(B) - r.P(A) - p + 1), half * r.P(3 * A) * M * (r.P(A) + 1));
    r.add("p^A(p^B-p^A+p-1)", r.P(A) * (r.P(B) - r.P(A) + p - 1), half * r.P(3 * A) * M * (r.P(A) - 1));
    r.add("p^A(p^B-p^A+1)", r.P(A) * (r.P(B) - r.P(A) + 1),
          r.P(m) * M * (r.P(m + 2) - r.P(m + 1) - r.P(m - 2) + r.P(B) - r.P(C) + r.P(2)) / (2 * (pp + 1)));
    r.add("p^A(p^B-p^A-1)", r.P(A) * (r.P(B) - r.P(A) - 1),
          r.P(m) * M * (r.P(m + 2) - r.P(m + 1) - r.P(m - 2) - r.P(B) + r.P(C) + r.P(2)) / (2 * (pp + 1)));
    r.add("p^B(p^A-p^C+1)", r.P(B) * (r.P(A) - r.P(C) + 1), half * r.P(m - 2) * M * (r.P(m - 1) - 1) / (pp + 1));
    r.add("p^B(p^A-p^C-1)", r.P(B) * (r.P(A) - r.P(C) - 1), half * r.P(m - 2) * M * (r.P(m - 1) - 1) / (pp + 1));
  } else if (spec.family == Family::C1ext) {
    const int h = m / 2;
    const Rational D = pp * pp - 1;
    const Rational X = r.P(m) - r.P(m - 1) - r.P(m - 2);
    r.add("p^(m-1)(p-1)", base,
          pp * (r.P(2 * m - 1) - r.P(2 * m - 2) + 2 * r.P(2 * m - 3) - r.P(m - 2) + 1) * M);
    r.add("p^(h-1)(p^(h+1)-p^h-p+1)", r.P(h - 1) * (r.P(h + 1) - r.P(h) - p + 1),
          r.P(m + 2) * M * (X + r.P(h) - r.P(h - 1) + 1) / (2 * D));
    r.add("p^h(p^h-p^(h-1)-p+1)", r.P(h) * (r.P(h) - r.P(h - 1) - p + 1),
          half * r.P(m - 2) * M * (r.P(h) - 1) * (r.P(h - 1) + 1) / D);
    r.add("p^(h-1)(p^(h+1)-p^h+p-1)", r.P(h - 1) * (r.P(h + 1) - r.P(h) + p - 1),
          r.P(m + 2) * M * (X - r.P(h) + r.P(h - 1) + 1) / (2 * D));
    r.add("p^h(p^h-p^(h-1)+p-1)", r.P(h) * (r.P(h) - r.P(h - 1) + p - 1),
          half * r.P(m - 2) * M * (r.P(h) + 1) * (r.P(h - 1) - 1) / D);
    r.add("p^(h-1)(p^(h+1)-p^h+1)", r.P(h - 1) * (r.P(h + 1) - r.P(h) + 1),
          r.P(m + 2) * M * (X + r.P(h) - r.P(h - 1) + 1) / (2 * (pp + 1)));
    r.add("p^h(p^h-p^(h-1)+1)", r.P(h) * (r.P(h) - r.P(h - 1) + 1),
          r.P(m - 2) * M * (r.P(m + 2) - r.P(m) + r.P(m - 1) + r.P(h) - r.P(h - 1) - 1) / (2 * (pp + 1)));
    r.add("p^(h-1)(p^(h+1)-p^h-1)", r.P(h - 1) * (r.P(h + 1) - r.P(h) - 1),
          r.P(m + 2) * M * (X - r.P(h) + r.P(h - 1) + 1) / (2 * (pp + 1)));
    r.add("p^h(p^h-p^(h-1)-1)", r.P(h) * (r.P(h) - r.P(h - 1) - 1),
          r.P(m - 2) * M * (r.P(m + 2) - r.P(m) + r.P(m - 1) - r.P(h) + r.P(h - 1) - 1) / (2 * (pp + 1)));
  } else if (m % 2 == 1) {
    const int A = (m - 1) / 2;
    r.add("p^(m-1)(p-1)", base, pp * (r.P(m - 1) + 1) * M);
    r.add("p^(m-1)(p-1)+p^((m-1)/2)", base + r.P(A), half * r.P(m) * (pp - 1) * M);
    r.add("p^(m-1)(p-1)-p^((m-1)/2)", base - r.P(A), half * r.P(m) * (pp - 1) * M);
  } else {
    const int h = m / 2;
    const int s = h % 2 == 0 ? 1 : -1;
    r.add("p^(m-1)(p-1)", base, pp * (r.P(m - 1) - r.P(m - 2) + 1) * M);
    r.add("p^(m-1)(p-1)-s p^(h-1)(p-1)", base - s * r.P(h - 1) * (pp - 1), r.P(m + 1) * M / (pp + 1));
    r.add("p^(m-1)(p-1)+s p^(h-1)", base + s * r.P(h - 1), r.P(m + 1) * (pp - 1) * M / (pp + 1));
    r.add("p^(m-1)(p-1)+s p^h(p-1)", base + s * r.P(h) * (pp - 1), r.P(m - 2) * M / (pp + 1));
    r.add("p^(m-1)(p-1)-s p^h", base - s * r.P(h), r.P(m - 2) * (pp - 1) * M / (pp + 1));
  }
  r.add("p^m", r.P(m), pp - 1);
  return r.rows;
}

WeightDistribution weight_distribution_closed(const CodeSpec& spec) {
  WeightDistribution out;
  for (const auto& row : closed_form_rows(spec)) {
    if (row.multiplicity == 0) continue;
    out[row.weight] += row.multiplicity;
  }
  return out;
}

WeightDistribution weight_distribution_from_sums(const CodeSpec& spec) {
  if (spec.family != Family::C1ext) throw std::invalid_argument("the value table covers C1ext only");
  const unsigned p = spec.field.p();
  const BigInt q = spec.field.q();
  WeightDistribution out;
  for (const auto& [value, mult] : sums::expected_table(sums::make_sum_spec(spec.field, spec.l))) {
    // S = sum_j N_j zeta^j; in the power basis c_j = N_j - N_{p-1}.
    const auto c = value.coeffs();
    BigInt rest = q;
    for (const auto& cj : c) rest -= cj;
    if (rest % p != 0) throw std::logic_error("value table entry is not a fiber-count vector");
    const BigInt last = rest / p;
    for (unsigned h = 0; h < p; ++h) {
      const unsigned j = (p - h) % p;
      const BigInt n_j = j == p - 1 ? last : c[j] + last;
      out[static_cast<std::uint64_t>(q - n_j)] += mult;
    }
  }
  return out;
}

unsigned nominal_dimension(const CodeSpec& spec) {
  return (spec.family == Family::C1ext ? 3 : 2) * spec.field.m() + 1;
}

unsigned dimension_check(const CodeSpec& spec) {
  const auto& f = spec.field;
  const unsigned p = f.p();
  std::vector<Codeword> rows;
  const Elem z = f.zero();
  for (unsigned k = 0; k < f.m(); ++k) {
    const Elem basis = f.from_log(k);
    rows.push_back(codeword(spec, basis, z, z, 0));
    if (spec.family == Family::C1ext) rows.push_back(codeword(spec, z, basis, z, 0));
    rows.push_back(codeword(spec, z, z, basis, 0));
  }
  rows.push_back(codeword(spec, z, z, z, 1));

  auto inv_mod = [p](unsigned v) {
    unsigned acc = 1, b = v % p;
    for (unsigned e = p - 2; e; e >>= 1) {
      if (e & 1) acc = acc * b % p;
      b = b * b % p;
    }
    return acc;
  };
  unsigned rank = 0;
  const std::size_t cols = f.q();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    const unsigned s = inv_mod(rows[rank][col]);
    for (auto& v : rows[rank]) v = static_cast<std::uint8_t>(v * s % p);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const unsigned factor = rows[i][col];
      if (!factor) continue;
      for (std::size_t j = col; j < cols; ++j)
        rows[i][j] = static_cast<std::uint8_t>((rows[i][j] + (p - factor) * rows[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

std::uint64_t minimum_distance(const WeightDistribution& d) {
  for (const auto& [w, n] : d)
    if (w > 0 && n != 0) return w;
  return 0;
}

BigInt total_count(const WeightDistribution& d) {
  BigInt t = 0;
  for (const auto& [w, n] : d) t += n;
  return t;
}

std::string enumerator_string(const WeightDistribution& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, n] : d) {
    if (n == 0) continue;
    if (!first) os << '+';
    first = false;
    if (w == 0) {
      os << n;
      continue;
    }
    os << n << 'z';
    if (w != 1) os << '^' << w;
  }
  return os.str();
}

}  // namespace dfc::codes
