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

// Canonical JSON documents for weight distributions and designs. Keys are
// sorted, there are no floating-point values, and big counts are decimal
// strings, so parse followed by write reproduces the input byte for byte.

#include <string>

#include <nlohmann/json.hpp>

#include "dfc/codes.hpp"
#include "dfc/designs.hpp"

namespace dfc::json_io {

/// Canonical text: two-space indent, sorted keys, each array of scalars on one
/// line, trailing newline.
std::string write_canonical(const nlohmann::json& doc);

/// Parses and rejects floating-point numbers.
nlohmann::json parse(const std::string& text);

nlohmann::json weight_distribution_doc(std::uint64_t length, unsigned dimension,
                                       const codes::WeightDistribution& dist);
codes::WeightDistribution read_weight_distribution(const nlohmann::json& doc);

nlohmann::json design_doc(const designs::Design& d, const BigInt& lambda);
designs::Design read_design(const nlohmann::json& doc);

}  // namespace dfc::json_io
