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

#include "dfc/json_io.hpp"

#include <stdexcept>

namespace dfc::json_io {

using nlohmann::json;

namespace {

bool is_scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

void reject_floats(const json& j) {
  if (j.is_number_float()) throw std::invalid_argument("floating-point value in JSON document");
  if (j.is_structured())
    for (const auto& e : j) reject_floats(e);
}

void write(const json& j, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {  // nlohmann::json keeps keys sorted
      if (!first) out += ",\n";
      first = false;
      out += inner + json(it.key()).dump() + ": ";
      write(it.value(), indent + 2, out);
    }
    out += "\n" + pad + "}";
  } else if (is_scalar_array(j)) {
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",";
      out += j[i].dump();
    }
    out += "]";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += inner;
      write(j[i], indent + 2, out);
    }
    out += "\n" + pad + "]";
  } else {
    if (j.is_number_float()) throw std::invalid_argument("floating-point value in JSON document");
    out += j.dump();
  }
}

BigInt parse_count(const json& j) {
  const std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad decimal count: " + s);
  return BigInt(s);
}

}  // namespace

std::string write_canonical(const json& doc) {
  std::string out;
  write(doc, 0, out);
  out += "\n";
  return out;
}

json parse(const std::string& text) {
  json j = json::parse(text);
  reject_floats(j);
  return j;
}

json weight_distribution_doc(std::uint64_t length, unsigned dimension, const codes::WeightDistribution& dist) {
  json d = json::object();
  for (const auto& [w, c] : dist) d[std::to_string(w)] = c.str();
  return json{{"length", length}, {"dimension", dimension}, {"distribution", d}};
}

codes::WeightDistribution read_weight_distribution(const json& doc) {
  codes::WeightDistribution out;
  for (auto it = doc.at("distribution").begin(); it != doc.at("distribution").end(); ++it)
    out[std::stoull(it.key())] = parse_count(it.value());
  return out;
}

json design_doc(const designs::Design& d, const BigInt& lambda) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(b);
  return json{{"t", 2},
              {"v", d.v},
              {"k", d.k},
              {"lambda", lambda.str()},
              {"b", std::to_string(d.blocks.size())},
              {"blocks", blocks}};
}

designs::Design read_design(const json& doc) {
  if (doc.at("t").get<int>() != 2) throw std::invalid_argument("only t = 2 designs are supported");
  const auto v = doc.at("v").get<std::uint32_t>();
  const auto k = doc.at("k").get<std::uint32_t>();
  auto blocks = doc.at("blocks").get<std::vector<std::vector<std::uint32_t>>>();
  if (BigInt(blocks.size()) != parse_count(doc.at("b"))) throw std::invalid_argument("block count mismatch");
  return designs::make_design(v, k, std::move(blocks));
}

}  // namespace dfc::json_io
