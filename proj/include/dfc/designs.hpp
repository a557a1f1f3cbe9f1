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

// Support designs of fixed-weight codewords: extraction, exhaustive pair
// coverage, and the closed-form lambda values.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfc/bigint.hpp"
#include "dfc/codes.hpp"
#include "dfc/options.hpp"

namespace dfc::designs {

/// A simple design on points {0..v-1}: distinct sorted k-subsets, kept in
/// lexicographic order.
struct Design {
  std::uint32_t v = 0;
  std::uint32_t k = 0;
  std::vector<std::vector<std::uint32_t>> blocks;
  // Number of codewords whose support is blocks[i]; empty for hand-built designs.
  std::vector<std::uint32_t> codewords_per_block;
};

/// Validates, sorts and deduplicates.
Design make_design(std::uint32_t v, std::uint32_t k, std::vector<std::vector<std::uint32_t>> blocks);

/// Supports of all codewords of the given weight. Counts the weight class
/// first (or uses `known`) and refuses to materialize more than
/// opts.budget.max_blocks blocks. Throws std::invalid_argument when no codeword
/// has this weight.
Design extract_design(const codes::CodeSpec& spec, std::uint64_t weight, const RunOptions& opts = {},
                      const codes::WeightDistribution* known = nullptr);

struct CoverageWitness {
  std::uint32_t first_u, first_v;
  std::uint64_t first_count;
  std::uint32_t second_u, second_v;
  std::uint64_t second_count;
};

struct PairCoverage {
  bool constant = false;
  std::uint64_t lambda = 0;
  std::optional<CoverageWitness> witness;
};

/// Counts, for every unordered point pair, the blocks containing it.
PairCoverage verify_2_design(const Design& d);

struct DesignParams {
  unsigned t = 2;
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  BigInt lambda;
  BigInt b;

  /// b C(k,2) = lambda C(v,2).
  bool satisfies_counting_identity() const;
};

/// lambda = b C(k,2) / C(v,2). Requires v >= k >= 2.
Rational lambda_from_identity(const BigInt& b, std::uint64_t k, std::uint64_t v);

struct LambdaFormula {
  std::uint64_t weight;
  Rational lambda;
  std::string source;
  std::string note;  // nonempty when the printed statement disagrees
};

/// The (i, lambda) pairs claimed in closed form for this family and m.
std::vector<LambdaFormula> closed_form_lambdas(const codes::CodeSpec& spec);

/// Largest w <= n with w - floor((w + p - 2) / (p - 1)) < d.
std::uint64_t support_bound(unsigned p, std::uint64_t d, std::uint64_t n);

/// Everything the design check reports for one weight class.
struct WeightClassReport {
  std::uint64_t weight = 0;
  BigInt codewords;                    // A_i
  std::uint64_t blocks = 0;            // b
  bool within_support_bound = false;   // weight <= support_bound
  bool all_blocks_p_minus_1 = false;   // every support carried by p-1 codewords
  PairCoverage coverage;
  Rational lambda_identity;            // b C(k,2) / C(v,2)
  bool identity_holds = false;
  bool trivial = false;                // k = v
  std::optional<LambdaFormula> formula;

  bool block_count_ok() const;
  bool formula_ok() const;
  bool ok() const;
};

WeightClassReport check_weight_class(const codes::CodeSpec& spec, const codes::WeightDistribution& dist,
                                     std::uint64_t weight, const RunOptions& opts = {},
                                     Design* design_out = nullptr);

}  // namespace dfc::designs
