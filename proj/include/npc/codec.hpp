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

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "npc/field_matrix.hpp"
#include "npc/galois.hpp"

namespace npc {

/// Systematic [k, k - t] protection code over GF(2^m).
///
/// Working path j < k - t carries the plain symbol of source j; the last t
/// paths carry parity symbols sum_i P(i, j) * x_i. Positions are 0-based.
class NpcCode {
 public:
  std::size_t k() const { return k_; }
  std::size_t t() const { return t_; }
  /// Number of plain data symbols, k - t.
  std::size_t data_width() const { return k_ - t_; }

  const FieldContext& field() const { return *field_; }
  const std::shared_ptr<const FieldContext>& field_ptr() const { return field_; }

  /// (k - t) x t parity block.
  const FieldMatrix& parity() const { return parity_; }

  /// Full (k - t) x k generator [I | P].
  FieldMatrix generator() const;

  /// Raw encode: `data` has k - t symbols, `out` receives k.
  void encode_symbols(std::span<const Symbol> data, std::span<Symbol> out) const;

 private:
  NpcCode(std::size_t k, std::size_t t, std::shared_ptr<const FieldContext> f,
          FieldMatrix parity);

  friend NpcCode build_code(std::size_t, std::size_t,
                            std::shared_ptr<const FieldContext>);
  friend NpcCode code_from_parity(std::size_t, std::size_t,
                                  std::shared_ptr<const FieldContext>,
                                  FieldMatrix);

  std::size_t k_;
  std::size_t t_;
  std::shared_ptr<const FieldContext> field_;
  FieldMatrix parity_;
};

/// Builds the MDS code by systematizing a Vandermonde matrix evaluated at
/// 0, 1, g, g^2, ..., g^(k-2) for the field generator g.
///
/// Throws std::invalid_argument unless 1 <= t < k and the field has at least
/// k elements.
NpcCode build_code(std::size_t k, std::size_t t,
                   std::shared_ptr<const FieldContext> field);

/// Wraps an arbitrary (k - t) x t parity block. No MDS or field-size check is
/// made; use verify_mds.
NpcCode code_from_parity(std::size_t k, std::size_t t,
                         std::shared_ptr<const FieldContext> field,
                         FieldMatrix parity);

struct DataBlock {
  std::vector<Symbol> symbols;
};

struct Codeword {
  std::vector<Symbol> symbols;
  /// Sorted, unique erased positions.
  std::vector<std::size_t> erased;

  void erase(std::size_t position);
  bool is_erased(std::size_t position) const;
};

/// Throws std::invalid_argument if data has the wrong length or holds values
/// outside the field.
Codeword encode(const NpcCode& code, const DataBlock& data);

/// Erasure decoding.
///
/// Throws CapacityExceededError if more than t positions are erased and
/// InconsistentCodewordError if the surviving symbols disagree.
DataBlock recover(const NpcCode& code, const Codeword& received);

/// True iff every set of k - t generator columns is linearly independent.
bool verify_mds(const NpcCode& code);

/// Decoder for one fixed erasure pattern; reusable across blocks.
class RecoveryPlan {
 public:
  /// Throws CapacityExceededError for more than t erasures and
  /// std::invalid_argument for out-of-range positions.
  RecoveryPlan(const NpcCode& code, std::span<const std::size_t> erased);

  const std::vector<std::size_t>& erased() const { return erased_; }
  std::size_t k() const { return k_; }
  std::size_t data_width() const { return width_; }

  /// Decodes one received block of k symbols (erased entries are ignored)
  /// into `data`. Returns false if the survivors are inconsistent.
  bool decode(std::span<const Symbol> received, std::span<Symbol> data) const;

 private:
  std::shared_ptr<const FieldContext> field_;
  std::size_t k_;
  std::size_t width_;
  std::vector<std::size_t> erased_;
  std::vector<std::size_t> basis_;   // survivor positions used to solve
  std::vector<std::size_t> checks_;  // remaining survivors, re-verified
  FieldMatrix solve_;                // inverse of generator restricted to basis_
  FieldMatrix generator_;
};

}  // namespace npc
