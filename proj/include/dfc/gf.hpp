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

// Arithmetic in F_p and F_{p^m} for odd p.
//
// Elements are named by a canonical index: 0 is the zero element and i >= 1
// is alpha^(i-1), where alpha is a root of the lexicographically smallest
// primitive polynomial. Every module uses this single enumeration order; in
// particular codeword coordinate i is the field element with index i.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace dfc::gf {

struct Elem {
  std::uint32_t index = 0;

  constexpr bool is_zero() const { return index == 0; }
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

struct FieldTables;

/// A concrete realization of F_{p^m}. Immutable; copies share tables.
class Field {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = 43'046'721;  // 3^16

  unsigned p() const;
  unsigned m() const;
  std::uint32_t q() const;
  /// q - 1, the order of the multiplicative group.
  std::uint32_t n() const { return q() - 1; }

  /// Modulus coefficients c_0..c_m (low degree first, c_m = 1).
  std::span<const unsigned> modulus() const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem alpha() const;
  /// alpha^k for any k (reduced mod q-1).
  Elem from_log(std::uint64_t k) const;
  /// Discrete log base alpha; x must be nonzero.
  std::uint32_t log(Elem x) const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  /// x^e; negative e requires x != 0. 0^0 = 1.
  Elem pow(Elem x, std::int64_t e) const;
  /// x^(p^k).
  Elem frobenius(Elem x, unsigned k) const;

  /// Absolute trace onto F_p, as a residue in [0, p).
  unsigned trace(Elem x) const;
  /// Quadratic character of F_q with eta(0) = 0.
  int eta(Elem x) const;
  /// Quadratic character of F_p (Legendre symbol) with eta'(0) = 0.
  int eta_prime(std::int64_t y) const;

  /// The prime-field element y mod p.
  Elem embed(std::int64_t y) const;
  /// Inverse of embed; x must lie in F_p.
  std::optional<unsigned> as_prime(Elem x) const;

  /// Coordinates over the polynomial basis 1, alpha, ..., alpha^(m-1).
  std::vector<unsigned> coords(Elem x) const;
  Elem from_coords(std::span<const unsigned> c) const;

  /// Trace of alpha^k, indexed by k in [0, q-1). Hot-loop helper.
  std::span<const std::uint8_t> trace_by_log() const;

 private:
  friend Field make_field(unsigned p, unsigned m, std::uint64_t max_order);
  explicit Field(std::shared_ptr<const FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const FieldTables> t_;
};

/// Builds F_{p^m} from the lexicographically smallest primitive polynomial
/// (coefficients compared c_0 first). Throws std::invalid_argument for even or
/// composite p, m = 0, or p^m above max_order.
Field make_field(unsigned p, unsigned m, std::uint64_t max_order = Field::kDefaultMaxOrder);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
unsigned gcd(unsigned a, unsigned b);

/// Solution set of a^(p^l) x^(p^(2l)) + a x = rhs, an F_p-affine subspace.
struct LinearizedSolution {
  std::optional<Elem> particular;
  std::vector<Elem> kernel_basis;

  bool solvable() const { return particular.has_value(); }
  bool unique() const { return solvable() && kernel_basis.empty(); }
  /// Number of solutions: 0 or p^dim(kernel).
  std::uint64_t count(unsigned p) const;
};

/// Applies f(x) = a^(p^l) x^(p^(2l)) + a x.
Elem linearized_apply(const Field& f, Elem a, unsigned l, Elem x);

/// Solves f(x) = rhs by Gaussian elimination on the m x m matrix of f over
/// F_p. Requires a != 0 and gcd(m, l) = 1.
LinearizedSolution solve_linearized(const Field& f, Elem a, unsigned l, Elem rhs);

/// Expands a solution descriptor into the explicit solution list.
std::vector<Elem> enumerate_solutions(const Field& f, const LinearizedSolution& s);

}  // namespace dfc::gf
