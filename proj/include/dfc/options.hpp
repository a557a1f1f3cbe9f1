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

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace dfc {

/// Thrown when a requested enumeration would exceed the configured work or
/// memory budget. Raised before any work starts.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  // (parameter tuples) x q field evaluations
  double max_work = 2e10;
  std::uint64_t max_blocks = 5'000'000;
};

struct RunOptions {
  unsigned shards = 1;
  Budget budget;
};

inline void check_work(double work, const Budget& b, const std::string& what) {
  if (work > b.max_work)
    throw BudgetExceeded(what + " needs " + std::to_string(work) + " work units, budget is " +
                         std::to_string(b.max_work));
}

/// DFC_SHARDS if set and positive, else the hardware concurrency.
inline unsigned default_shards() {
  if (const char* env = std::getenv("DFC_SHARDS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

/// Splits [0, n) into contiguous ranges, runs work(begin, end) for each on its
/// own thread and folds the partial results left to right, so the result does
/// not depend on the shard count as long as merge is associative and
/// commutative.
template <class Partial, class Work, class Merge>
Partial shard_reduce(std::uint32_t n, unsigned shards, Work work, Merge merge) {
  if (shards <= 1 || n <= 1) return work(0u, n);
  if (shards > n) shards = n;
  std::vector<Partial> parts(shards);
  std::vector<std::thread> threads;
  threads.reserve(shards);
  std::vector<std::exception_ptr> errors(shards);
  for (unsigned s = 0; s < shards; ++s) {
    const std::uint32_t begin = static_cast<std::uint32_t>(std::uint64_t(n) * s / shards);
    const std::uint32_t end = static_cast<std::uint32_t>(std::uint64_t(n) * (s + 1) / shards);
    threads.emplace_back([&, s, begin, end] {
      try {
        parts[s] = work(begin, end);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Partial out = std::move(parts[0]);
  for (unsigned s = 1; s < shards; ++s) merge(out, std::move(parts[s]));
  return out;
}

}  // namespace dfc
