// Copyright 2026 The NPC Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <vector>

namespace npc {

/// Raw symbol of GF(2^m), m <= 16. Values are always < 2^m for the owning
/// field; bulk routines work on these directly.
using Symbol = std::uint16_t;

/// Polynomial helpers over GF(2), polynomials encoded as bit masks.
namespace gf2poly {

/// Degree of the polynomial, or -1 for the zero polynomial.
int degree(std::uint32_t poly);

/// Remainder of a / b. b must be nonzero.
std::uint32_t mod(std::uint32_t a, std::uint32_t b);

bool is_irreducible(std::uint32_t poly);

}  // namespace gf2poly

/// GF(2^m) with a fixed reduction polynomial.
///
/// Immutable after construction. Contexts are identity objects: elements
/// carry a pointer to the context they were created from, so a context must
/// outlive its elements and is neither copyable nor movable. Share one via
/// std::shared_ptr<const FieldContext>.
///
/// For m <= 8 multiplication and inversion go through log/antilog tables;
/// wider fields use shift-and-reduce.
class FieldContext {
 public:
  static constexpr unsigned kMaxBits = 16;
  static constexpr std::uint32_t kDefaultPolynomial = 0x11B;

  /// Throws std::invalid_argument unless 1 <= m <= 16 and `poly` is an
  /// irreducible polynomial of degree exactly m.
  FieldContext(unsigned m, std::uint32_t poly);

  /// GF(2^8) over 0x11B.
  FieldContext();

  FieldContext(const FieldContext&) = delete;
  FieldContext& operator=(const FieldContext&) = delete;

  /// Smallest irreducible polynomial of degree m (0x11B for m = 8).
  static std::uint32_t default_polynomial(unsigned m);

  unsigned bits() const { return bits_; }
  std::uint32_t polynomial() const { return poly_; }
  std::uint32_t order() const { return order_; }
  bool contains(std::uint32_t value) const { return value < order_; }

  /// Smallest primitive element (multiplicative order q - 1).
  Symbol generator() const { return generator_; }

  Symbol add(Symbol a, Symbol b) const { return static_cast<Symbol>(a ^ b); }
  Symbol mul(Symbol a, Symbol b) const;
  /// Throws std::domain_error for a == 0.
  Symbol inv(Symbol a) const;
  /// Throws std::domain_error for b == 0.
  Symbol div(Symbol a, Symbol b) const;
  /// 0^0 == 1.
  Symbol pow(Symbol a, std::uint64_t e) const;

 private:
  Symbol mul_shift_reduce(Symbol a, Symbol b) const;

  unsigned bits_;
  std::uint32_t poly_;
  std::uint32_t order_;
  Symbol generator_ = 1;
  bool tabled_ = false;
  std::vector<Symbol> exp_;  // 2 * (q - 1) entries
  std::vector<Symbol> log_;  // q entries, log_[0] unused
};

/// A value of GF(2^m) bound to its context.
class FieldElement {
 public:
  /// Throws std::invalid_argument if value >= 2^m.
  FieldElement(const FieldContext& field, std::uint32_t value);

  static FieldElement zero(const FieldContext& field) { return {field, 0}; }
  static FieldElement one(const FieldContext& field) { return {field, 1}; }

  Symbol value() const { return value_; }
  const FieldContext& context() const { return *field_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  const FieldContext* field_;
  Symbol value_;
};

/// Throws FieldMismatchError if a and b come from different contexts.
FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
/// Throws std::domain_error for zero.
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return add(a, b);
}
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return mul(a, b);
}

}  // namespace npc
