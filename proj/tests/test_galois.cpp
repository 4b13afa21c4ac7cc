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


#include <doctest.h>

#include <stdexcept>

#include "npc/errors.hpp"
#include "npc/galois.hpp"
#include "support/oracles.hpp"

using npc::FieldContext;
using npc::FieldElement;

TEST_CASE("default field is GF(2^8) over 0x11B") {
  FieldContext f;
  CHECK(f.bits() == 8);
  CHECK(f.polynomial() == 0x11B);
  CHECK(f.order() == 256);
  CHECK(FieldContext::default_polynomial(8) == 0x11B);
}

TEST_CASE("known products and inverses match the oracle") {
  FieldContext f;
  CHECK(f.mul(0x57, 0x83) == oracle::gf_mul(0x57, 0x83, 0x11B, 8));
  CHECK(f.mul(0x57, 0x83) == 0xC1);
  CHECK(f.inv(0x53) == oracle::gf_inv(0x53, 0x11B, 8));
  CHECK(f.inv(0x53) == 0xCA);
}

TEST_CASE("GF(2^8) multiplication table agrees with shift-and-add everywhere") {
  FieldContext f;
  for (std::uint32_t a = 0; a < 256; ++a) {
    for (std::uint32_t b = 0; b < 256; ++b) {
      REQUIRE(f.mul(static_cast<npc::Symbol>(a), static_cast<npc::Symbol>(b)) ==
              oracle::gf_mul(a, b, 0x11B, 8));
    }
  }
}

TEST_CASE("every width up to 16 forms a field") {
  for (unsigned m = 1; m <= 16; ++m) {
    CAPTURE(m);
    const auto poly = FieldContext::default_polynomial(m);
    FieldContext f(m, poly);
    // Sampled a, b; exhaustive inverses only where cheap.
    for (std::uint32_t a = 1; a < f.order(); a += (m > 10 ? 97 : 1)) {
      const auto s = static_cast<npc::Symbol>(a);
      REQUIRE(f.mul(s, f.inv(s)) == 1);
      const auto b = static_cast<npc::Symbol>((a * 31 + 7) % f.order());
      REQUIRE(f.mul(s, b) == oracle::gf_mul(a, b, poly, m));
    }
    if (m <= 10) {
      for (std::uint32_t a = 1; a < f.order(); a += 13) {
        REQUIRE(f.inv(static_cast<npc::Symbol>(a)) == oracle::gf_inv(a, poly, m));
      }
    }
    // The generator has full multiplicative order.
    const npc::Symbol g = f.generator();
    std::uint32_t order = 1;
    for (npc::Symbol x = g; x != 1; x = f.mul(x, g)) ++order;
    CHECK(order == f.order() - 1);
  }
}

TEST_CASE("field axioms on GF(2^4)") {
  FieldContext f(4, 0x13);
  for (npc::Symbol a = 0; a < 16; ++a) {
    for (npc::Symbol b = 0; b < 16; ++b) {
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(a, b) == f.add(b, a));
      for (npc::Symbol c = 0; c < 16; ++c) {
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      }
      if (b != 0) CHECK(f.mul(f.div(a, b), b) == a);
    }
  }
}

TEST_CASE("pow") {
  FieldContext f;
  CHECK(f.pow(0, 0) == 1);
  CHECK(f.pow(0, 5) == 0);
  CHECK(f.pow(f.generator(), 255) == 1);
  npc::Symbol acc = 1;
  for (unsigned e = 0; e < 20; ++e) {
    CHECK(f.pow(0x1D, e) == acc);
    acc = f.mul(acc, 0x1D);
  }
}

TEST_CASE("zero has no inverse") {
  FieldContext f;
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
  CHECK_THROWS_AS(f.div(3, 0), std::domain_error);
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(FieldContext(0, 0x3), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext(17, 0x2002B), std::invalid_argument);
  CHECK_THROWS_AS(FieldContext(8, 0x1B), std::invalid_argument);   // wrong degree
  CHECK_THROWS_AS(FieldContext(8, 0x101), std::invalid_argument);  // x^8 + 1 = (x + 1)^8
  CHECK_NOTHROW(FieldContext(8, 0x11D));
}

TEST_CASE("irreducibility test") {
  using npc::gf2poly::is_irreducible;
  CHECK(is_irreducible(0x7));    // x^2 + x + 1
  CHECK(!is_irreducible(0x5));   // (x + 1)^2
  CHECK(is_irreducible(0x11B));
  CHECK(!is_irreducible(0x100));
}

TEST_CASE("field elements") {
  FieldContext f;
  FieldContext other;
  const FieldElement a(f, 0x57);
  const FieldElement b(f, 0x83);
  CHECK((a * b).value() == 0xC1);
  CHECK((a + b).value() == (0x57 ^ 0x83));
  CHECK(inv(FieldElement(f, 0x53)).value() == 0xCA);
  CHECK(pow(a, 0) == FieldElement::one(f));
  CHECK(FieldElement::zero(f).is_zero());
  CHECK_THROWS_AS(FieldElement(f, 256), std::invalid_argument);
  CHECK_THROWS_AS(a * FieldElement(other, 1), npc::FieldMismatchError);
  CHECK_THROWS_AS(a + FieldElement(other, 1), npc::FieldMismatchError);
  CHECK_FALSE(FieldElement(f, 1) == FieldElement(other, 1));
}
