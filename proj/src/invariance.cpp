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

#include "dfc/invariance.hpp"

#include <algorithm>
#include <stdexcept>

#include "dfc/enumerate.hpp"

namespace dfc::invariance {

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t j, std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("cyclotomic_coset: n must be positive");
  if (j >= n) throw std::invalid_argument("cyclotomic_coset: j must be < n");
  std::vector<std::uint64_t> out{j};
  for (std::uint64_t x = (j * p) % n; x != j; x = (x * p) % n) out.push_back(x);
  return out;
}

bool DefiningSet::is_p_closed(std::uint64_t p) const {
  for (auto s : members) {
    if (extended && s == 0) continue;
    if (!contains((s * p) % n)) return false;
  }
  return true;
}

DefiningSet defining_set(const codes::CodeSpec& spec) {
  const auto& f = spec.field;
  DefiningSet d;
  d.n = f.n();
  d.extended = true;
  const std::uint64_t p = f.p();
  std::vector<std::uint64_t> leaders{1, detail::quadratic_exponent(f, spec.l)};
  if (spec.family == codes::Family::C1ext) leaders.push_back(2 % d.n);
  for (auto j : leaders)
    for (auto x : cyclotomic_coset(j, d.n, p)) d.members.insert(x);
  d.members.insert(0);
  return d;
}

bool p_adic_leq(std::uint64_t r, std::uint64_t s, unsigned p, unsigned m) {
  for (unsigned i = 0; i < m; ++i) {
    if (r % p > s % p) return false;
    r /= p;
    s /= p;
  }
  return true;
}

namespace {

std::vector<unsigned> digits(std::uint64_t s, unsigned p, unsigned m) {
  std::vector<unsigned> d(m);
  for (unsigned i = 0; i < m; ++i) {
    d[i] = static_cast<unsigned>(s % p);
    s /= p;
  }
  return d;
}

}  // namespace

InvarianceResult is_affine_invariant(const std::set<std::uint64_t>& tbar, unsigned p, unsigned m) {
  for (auto s : tbar) {
    const auto ds = digits(s, p, m);
    // Enumerate r <= s in increasing numeric order: the digit vectors
    // bounded by ds, counted like an odometer from the top digit.
    std::vector<std::uint64_t> candidates{0};
    std::uint64_t place = 1;
    for (unsigned i = 0; i < m; ++i, place *= p) {
      const std::size_t base = candidates.size();
      for (unsigned d = 1; d <= ds[i]; ++d)
        for (std::size_t k = 0; k < base; ++k) candidates.push_back(candidates[k] + d * place);
    }
    std::sort(candidates.begin(), candidates.end());
    for (auto r : candidates)
      if (!tbar.count(r)) return {false, Witness{s, r}};
  }
  return {};
}

InvarianceResult is_affine_invariant_stepwise(const std::set<std::uint64_t>& tbar, unsigned p, unsigned m) {
  for (auto s : tbar) {
    std::uint64_t place = 1;
    for (unsigned i = 0; i < m; ++i, place *= p) {
      if ((s / place) % p == 0) continue;
      const std::uint64_t r = s - place;
      if (!tbar.count(r)) return {false, Witness{s, r}};
    }
  }
  return {};
}

}  // namespace dfc::invariance
