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

// Cyclotomic cosets, defining sets and the Kasami-Lin-Peterson test for
// affine invariance of extended primitive cyclic codes.

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "dfc/codes.hpp"

namespace dfc::invariance {

/// Orbit of j under multiplication by p modulo n, in orbit order starting at j.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t j, std::uint64_t n, std::uint64_t p);

struct DefiningSet {
  std::uint64_t n = 0;               // length of the cyclic code, q - 1
  std::set<std::uint64_t> members;   // residues mod n
  bool extended = false;             // 0 adjoined for the extended code

  bool contains(std::uint64_t s) const { return members.count(s) != 0; }
  /// Closed under multiplication by p mod n.
  bool is_p_closed(std::uint64_t p) const;
};

/// Defining set of the extended dual of the family's cyclic code:
/// C_1 u C_2 u C_(p^l+1) u {0} (C1) or C_1 u C_(p^l+1) u {0} (C2).
DefiningSet defining_set(const codes::CodeSpec& spec);

/// Digitwise comparison of base-p expansions (m digits).
bool p_adic_leq(std::uint64_t r, std::uint64_t s, unsigned p, unsigned m);

struct Witness {
  std::uint64_t s;  // member of the set
  std::uint64_t r;  // r <= s (p-adic) but not a member
};

struct InvarianceResult {
  bool invariant = true;
  std::optional<Witness> witness;
};

/// True iff the set is downward closed under the p-adic order, checking every
/// r <= s. The witness is the smallest failing (s, r) in (s, r) order.
InvarianceResult is_affine_invariant(const std::set<std::uint64_t>& tbar, unsigned p, unsigned m);

/// Same predicate via single-digit decrements only.
InvarianceResult is_affine_invariant_stepwise(const std::set<std::uint64_t>& tbar, unsigned p, unsigned m);

}  // namespace dfc::invariance
