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

// Shared enumeration kernel for the trace forms
//   x -> Tr(a x^(p^l+1) + b x^2 + c x).
//
// For each parameter tuple the kernel produces the fiber counts
// N_j = |{x : Tr(...) = j}|, j in F_p, in one pass over F_q. Every derived
// quantity (sum values, codeword weights for all p offsets h, supports) is read
// off these counts or the per-x trace rows.

#include <cstdint>
#include <span>
#include <vector>

#include "dfc/gf.hpp"

namespace dfc::detail {

/// p^l + 1 reduced mod q - 1 (as an exponent on logs).
std::uint64_t quadratic_exponent(const gf::Field& f, unsigned l);

/// out[x] = Tr(coeff * x^exponent) for every canonical index x.
class PowerTraceRows {
 public:
  PowerTraceRows(const gf::Field& f, std::uint64_t exponent);
  void row(gf::Elem coeff, std::uint8_t* out) const;

 private:
  gf::Field f_;
  std::vector<std::uint32_t> plog_;  // log of x^exponent, x index >= 1
};

/// Counts of s[x] = (base[x] + lin[x]) mod p; scratch receives s.
inline void fiber_counts(const std::uint8_t* base, const std::uint8_t* lin, std::uint32_t q,
                         unsigned p, std::uint8_t* scratch, std::uint32_t* counts) {
  const std::uint8_t pp = static_cast<std::uint8_t>(p);
  for (std::uint32_t x = 0; x < q; ++x) {
    const std::uint8_t s = static_cast<std::uint8_t>(base[x] + lin[x]);
    scratch[x] = s >= pp ? static_cast<std::uint8_t>(s - pp) : s;
  }
  std::uint32_t rest = q;
  for (unsigned j = 0; j + 1 < p; ++j) {
    const std::uint8_t jj = static_cast<std::uint8_t>(j);
    std::uint32_t c = 0;
    for (std::uint32_t x = 0; x < q; ++x) c += (scratch[x] == jj);
    counts[j] = c;
    rest -= c;
  }
  counts[p - 1] = rest;
}

/// Iterates all (a, b, c) with a in [a_begin, a_end) and b, c over F_q (b fixed
/// at 0 when with_quadratic is false). Calls
///   visit(a, b, c, counts, values)
/// where counts has p entries and values[x] is the trace value at x.
class TraceFormEnumerator {
 public:
  TraceFormEnumerator(const gf::Field& f, unsigned l, bool with_quadratic);

  template <class Visit>
  void run(std::uint32_t a_begin, std::uint32_t a_end, Visit&& visit) const {
    const std::uint32_t q = f_.q();
    const unsigned p = f_.p();
    std::vector<std::uint8_t> ra(q), rb(q), rab(q), rc(q), scratch(q);
    std::vector<std::uint32_t> counts(p);
    const std::uint32_t b_end = with_quadratic_ ? q : 1;
    for (std::uint32_t a = a_begin; a < a_end; ++a) {
      top_.row(gf::Elem{a}, ra.data());
      for (std::uint32_t b = 0; b < b_end; ++b) {
        quad_.row(gf::Elem{b}, rb.data());
        for (std::uint32_t x = 0; x < q; ++x) {
          const unsigned s = ra[x] + rb[x];
          rab[x] = static_cast<std::uint8_t>(s >= p ? s - p : s);
        }
        for (std::uint32_t c = 0; c < q; ++c) {
          const std::uint8_t* lin;
          if (!lin_cache_.empty()) {
            lin = lin_cache_.data() + std::size_t(c) * q;
          } else {
            lin_.row(gf::Elem{c}, rc.data());
            lin = rc.data();
          }
          fiber_counts(rab.data(), lin, q, p, scratch.data(), counts.data());
          visit(gf::Elem{a}, gf::Elem{b}, gf::Elem{c},
                std::span<const std::uint32_t>(counts.data(), p),
                std::span<const std::uint8_t>(scratch.data(), q));
        }
      }
    }
  }

  const gf::Field& field() const { return f_; }
  bool with_quadratic() const { return with_quadratic_; }

 private:
  gf::Field f_;
  bool with_quadratic_;
  PowerTraceRows top_;
  PowerTraceRows quad_;
  PowerTraceRows lin_;
  std::vector<std::uint8_t> lin_cache_;  // q x q when small enough
};

}  // namespace dfc::detail
