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

#include "dfc/enumerate.hpp"

#include <algorithm>

namespace dfc::detail {

namespace {
constexpr std::size_t kLinCacheBytes = std::size_t(1) << 27;
}

std::uint64_t quadratic_exponent(const gf::Field& f, unsigned l) {
  std::uint64_t e = 1;
  for (unsigned i = 0; i < l; ++i) e = e * f.p() % f.n();
  return (e + 1) % f.n();
}

PowerTraceRows::PowerTraceRows(const gf::Field& f, std::uint64_t exponent) : f_(f) {
  const std::uint32_t n = f.n();
  plog_.resize(n);
  const std::uint64_t e = exponent % n;
  for (std::uint32_t k = 0; k < n; ++k)
    plog_[k] = static_cast<std::uint32_t>((std::uint64_t(k) * e) % n);
}

void PowerTraceRows::row(gf::Elem coeff, std::uint8_t* out) const {
  const std::uint32_t q = f_.q();
  if (coeff.is_zero()) {
    std::fill(out, out + q, std::uint8_t{0});
    return;
  }
  const std::uint32_t n = f_.n();
  const std::uint32_t la = f_.log(coeff);
  const std::uint8_t* tr = f_.trace_by_log().data();
  out[0] = 0;
  for (std::uint32_t k = 0; k < n; ++k) {
    std::uint32_t idx = la + plog_[k];
    if (idx >= n) idx -= n;
    out[k + 1] = tr[idx];
  }
}

TraceFormEnumerator::TraceFormEnumerator(const gf::Field& f, unsigned l, bool with_quadratic)
    : f_(f),
      with_quadratic_(with_quadratic),
      top_(f, quadratic_exponent(f, l)),
      quad_(f, 2),
      lin_(f, 1) {
  const std::size_t q = f.q();
  if (q * q <= kLinCacheBytes) {
    lin_cache_.resize(q * q);
    for (std::uint32_t c = 0; c < q; ++c) lin_.row(gf::Elem{c}, lin_cache_.data() + c * q);
  }
}

}  // namespace dfc::detail
