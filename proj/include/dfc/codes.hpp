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

// The two extended trace-code families of length q = p^m over F_p:
//   C1ext = { (Tr(a x^(p^l+1) + b x^2 + c x) + h)_x : a,b,c in F_q, h in F_p }
//   C2ext = { (Tr(a x^(p^l+1) + c x) + h)_x        : a,c in F_q,   h in F_p }
// Coordinate i is the field element with canonical index i.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dfc/bigint.hpp"
#include "dfc/gf.hpp"
#include "dfc/options.hpp"

namespace dfc::codes {

enum class Family { C1ext, C2ext };

std::string to_string(Family f);
/// Accepts "c1"/"c1ext" and "c2"/"c2ext" (case-insensitive).
Family parse_family(const std::string& s);

struct CodeSpec {
  Family family = Family::C1ext;
  gf::Field field;
  unsigned l = 1;
};

/// Validates m >= 3 and gcd(m, l) = 1.
CodeSpec make_code_spec(Family family, const gf::Field& field, unsigned l = 1);

using Codeword = std::vector<std::uint8_t>;

/// weight -> number of codewords.
using WeightDistribution = std::map<std::uint64_t, BigInt>;

/// Codeword for (a, b, c, h). For C2ext b must be zero.
Codeword codeword(const CodeSpec& spec, gf::Elem a, gf::Elem b, gf::Elem c, unsigned h);

std::uint64_t hamming_weight(const Codeword& w);

/// q - N_{-h mod p}, read from the trace-fiber counts.
std::uint64_t weight_of(const CodeSpec& spec, gf::Elem a, gf::Elem b, gf::Elem c, unsigned h);

/// Exhaustive histogram over every parameter tuple.
WeightDistribution weight_distribution_bruteforce(const CodeSpec& spec, const RunOptions& opts = {});

struct WeightRow {
  std::string weight_formula;
  std::uint64_t weight;
  BigInt multiplicity;
};

/// The rows of the closed-form weight table for the family and parity of m.
std::vector<WeightRow> closed_form_rows(const CodeSpec& spec);

/// closed_form_rows merged by weight (rows with equal weight are added).
WeightDistribution weight_distribution_closed(const CodeSpec& spec);

/// C1ext only: the weight distribution read off the closed-form value table of
/// S(a,b,c). Each value fixes the fiber counts N_j, and the codeword for offset h
/// has weight q - N_{-h}. Independent of closed_form_rows.
WeightDistribution weight_distribution_from_sums(const CodeSpec& spec);

/// Rank over F_p of the parameter -> codeword map.
unsigned dimension_check(const CodeSpec& spec);

/// Nominal dimension 3m+1 (C1ext) or 2m+1 (C2ext).
unsigned nominal_dimension(const CodeSpec& spec);

/// Smallest nonzero weight with a nonzero count, or 0 when there is none.
std::uint64_t minimum_distance(const WeightDistribution& d);

BigInt total_count(const WeightDistribution& d);

/// Enumerator string, e.g. "1+78z^9+1404z^12".
std::string enumerator_string(const WeightDistribution& d);

/// Number of parameter tuples (a, b, c) the family ranges over.
double parameter_space_size(const CodeSpec& spec);

}  // namespace dfc::codes
