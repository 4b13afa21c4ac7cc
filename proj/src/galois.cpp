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

#include "npc/galois.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "npc/errors.hpp"

namespace npc {

namespace gf2poly {

int degree(std::uint32_t poly) {
  return poly == 0 ? -1 : 31 - std::countl_zero(poly);
}

std::uint32_t mod(std::uint32_t a, std::uint32_t b) {
  const int db = degree(b);
  if (db < 0) throw std::invalid_argument("polynomial division by zero");
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

bool is_irreducible(std::uint32_t poly) {
  const int d = degree(poly);
  if (d < 1) return false;
  // Any reducible polynomial has a factor of degree <= d / 2.
  for (std::uint32_t f = 2; degree(f) <= d / 2; ++f) {
    if (mod(poly, f) == 0) return false;
  }
  return true;
}

}  // namespace gf2poly

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldContext::FieldContext() : FieldContext(8, kDefaultPolynomial) {}

FieldContext::FieldContext(unsigned m, std::uint32_t poly)
    : bits_(m), poly_(poly), order_(0) {
  if (m < 1 || m > kMaxBits) {
    throw std::invalid_argument("field width must be in [1, 16], got " +
                                std::to_string(m));
  }
  if (gf2poly::degree(poly) != static_cast<int>(m)) {
    throw std::invalid_argument("reduction polynomial must have degree " +
                                std::to_string(m));
  }
  if (!gf2poly::is_irreducible(poly)) {
    throw std::invalid_argument("reduction polynomial is reducible over GF(2)");
  }
  order_ = std::uint32_t{1} << m;

  const std::uint32_t group = order_ - 1;
  const auto factors = prime_factors(group);
  for (std::uint32_t g = 1; g < order_; ++g) {
    bool primitive = true;
    for (auto p : factors) {
      if (pow(static_cast<Symbol>(g), group / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = static_cast<Symbol>(g);
      break;
    }
  }

  if (m <= 8) {
    exp_.resize(2 * group);
    log_.assign(order_, 0);
    Symbol x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
      exp_[i] = x;
      exp_[i + group] = x;
      log_[x] = static_cast<Symbol>(i);
      x = mul_shift_reduce(x, generator_);
    }
    tabled_ = true;
  }
}

std::uint32_t FieldContext::default_polynomial(unsigned m) {
  if (m < 1 || m > kMaxBits) {
    throw std::invalid_argument("field width must be in [1, 16]");
  }
  for (std::uint32_t p = std::uint32_t{1} << m; p < (std::uint32_t{2} << m);
       ++p) {
    if (gf2poly::is_irreducible(p)) return p;
  }
  throw std::logic_error("no irreducible polynomial found");
}

Symbol FieldContext::mul_shift_reduce(Symbol a, Symbol b) const {
  std::uint32_t x = a;
  std::uint32_t y = b;
  std::uint32_t acc = 0;
  while (y != 0) {
    if (y & 1) acc ^= x;
    y >>= 1;
    x <<= 1;
    if (x & order_) x ^= poly_;
  }
  return static_cast<Symbol>(acc);
}

Symbol FieldContext::mul(Symbol a, Symbol b) const {
  if (!tabled_) return mul_shift_reduce(a, b);
  if (a == 0 || b == 0) return 0;
  return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
}

Symbol FieldContext::inv(Symbol a) const {
  if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
  if (tabled_) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow(a, order_ - 2);
}

Symbol FieldContext::div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

Symbol FieldContext::pow(Symbol a, std::uint64_t e) const {
  Symbol result = 1;
  Symbol base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElement::FieldElement(const FieldContext& field, std::uint32_t value)
    : field_(&field), value_(static_cast<Symbol>(value)) {
  if (!field.contains(value)) {
    throw std::invalid_argument("value " + std::to_string(value) +
                                " outside GF(2^" + std::to_string(field.bits()) +
                                ")");
  }
}

namespace {

const FieldContext& common_context(const FieldElement& a,
                                   const FieldElement& b) {
  if (&a.context() != &b.context()) throw FieldMismatchError();
  return a.context();
}

}  // namespace

FieldElement add(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_context(a, b);
  return {f, f.add(a.value(), b.value())};
}

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  const auto& f = common_context(a, b);
  return {f, f.mul(a.value(), b.value())};
}

FieldElement inv(const FieldElement& a) {
  return {a.context(), a.context().inv(a.value())};
}

FieldElement pow(const FieldElement& a, std::uint64_t e) {
  return {a.context(), a.context().pow(a.value(), e)};
}

}  // namespace npc
