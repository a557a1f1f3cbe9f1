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

// Exponential sums S(a,b,c) = sum_x zeta^Tr(a x^(p^l+1) + b x^2 + c x) and
// S(a,b) = S(a,0,b), evaluated exactly in Z[zeta_p].

#include <cstdint>
#include <string>
#include <vector>

#include "dfc/cyclo.hpp"
#include "dfc/gf.hpp"
#include "dfc/options.hpp"

namespace dfc::sums {

struct SumSpec {
  gf::Field field;
  unsigned l = 1;
};

/// Validates l >= 1 and gcd(m, l) = 1.
SumSpec make_sum_spec(const gf::Field& field, unsigned l = 1);

/// N_j = |{x : Tr(a x^(p^l+1) + b x^2 + c x) = j}|, one direct pass over F_q.
std::vector<std::uint64_t> trace_counts_abc(const SumSpec& spec, gf::Elem a, gf::Elem b, gf::Elem c);

cyclo::CycInt sum_abc(const SumSpec& spec, gf::Elem a, gf::Elem b, gf::Elem c);
cyclo::CycInt sum_ab_direct(const SumSpec& spec, gf::Elem a, gf::Elem b);

/// S(a,b) from the linearized-polynomial closed form. Requires a != 0.
cyclo::CycInt sum_ab_closed(const SumSpec& spec, gf::Elem a, gf::Elem b);

/// Whether a^((q-1)/(p+1)) = (-1)^(m/2); always false for odd m.
bool is_degenerate_quadratic(const gf::Field& f, gf::Elem a);

/// The exact multiset {S(a,b,c) : a,b,c in F_q}, by enumeration.
cyclo::ValueDistribution value_distribution_abc(const SumSpec& spec, const RunOptions& opts = {});

struct TableRow {
  std::string label;
  cyclo::CycInt value;
  BigInt multiplicity;
};

/// Every row of the closed-form value-distribution table for the parity of m,
/// one entry per exact value (rows indexed by j are expanded). Requires m >= 3.
std::vector<TableRow> expected_table_rows(const SumSpec& spec);

/// expected_table_rows merged into a distribution.
cyclo::ValueDistribution expected_table(const SumSpec& spec);

}  // namespace dfc::sums
