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

#include "npc/codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "npc/errors.hpp"

namespace npc {

NpcCode::NpcCode(std::size_t k, std::size_t t,
                 std::shared_ptr<const FieldContext> f, FieldMatrix parity)
    : k_(k), t_(t), field_(std::move(f)), parity_(std::move(parity)) {}

FieldMatrix NpcCode::generator() const {
  const std::size_t d = data_width();
  FieldMatrix g(d, k_);
  for (std::size_t i = 0; i < d; ++i) {
    g(i, i) = 1;
    for (std::size_t j = 0; j < t_; ++j) g(i, d + j) = parity_(i, j);
  }
  return g;
}

void NpcCode::encode_symbols(std::span<const Symbol> data,
                             std::span<Symbol> out) const {
  const std::size_t d = data_width();
  std::copy(data.begin(), data.begin() + d, out.begin());
  for (std::size_t j = 0; j < t_; ++j) {
    Symbol acc = 0;
    for (std::size_t i = 0; i < d; ++i) acc ^= field_->mul(parity_(i, j), data[i]);
    out[d + j] = acc;
  }
}

namespace {

void check_shape(std::size_t k, std::size_t t,
                 const std::shared_ptr<const FieldContext>& field) {
  if (!field) throw std::invalid_argument("code requires a field");
  if (t == 0) throw std::invalid_argument("t must be at least 1");
  if (t >= k) {
    throw std::invalid_argument("t must be smaller than k (t=" +
                                std::to_string(t) + ", k=" + std::to_string(k) +
                                ")");
  }
}

}  // namespace

NpcCode build_code(std::size_t k, std::size_t t,
                   std::shared_ptr<const FieldContext> field) {
  check_shape(k, t, field);
  const FieldContext& f = *field;
  if (f.order() < k) {
    throw std::invalid_argument("field GF(2^" + std::to_string(f.bits()) +
                                ") too small for k=" + std::to_string(k));
  }

  const std::size_t d = k - t;
  std::vector<Symbol> points;
  points.reserve(k);
  points.push_back(0);
  Symbol x = 1;
  while (points.size() < k) {
    points.push_back(x);
    x = f.mul(x, f.generator());
  }

  FieldMatrix vandermonde(d, k);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) vandermonde(i, j) = f.pow(points[j], i);
  }

  std::vector<std::size_t> head(d);
  for (std::size_t i = 0; i < d; ++i) head[i] = i;
  auto head_inverse = invert(f, vandermonde.select_columns(head));
  if (!head_inverse) throw std::logic_error("Vandermonde block is singular");
  const FieldMatrix systematic = multiply(f, *head_inverse, vandermonde);

  FieldMatrix parity(d, t);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < t; ++j) parity(i, j) = systematic(i, d + j);
  }
  return NpcCode(k, t, std::move(field), std::move(parity));
}

NpcCode code_from_parity(std::size_t k, std::size_t t,
                         std::shared_ptr<const FieldContext> field,
                         FieldMatrix parity) {
  check_shape(k, t, field);
  if (parity.rows() != k - t || parity.cols() != t) {
    throw std::invalid_argument("parity block must be (k-t) x t");
  }
  for (std::size_t i = 0; i < parity.rows(); ++i) {
    for (auto v : parity.row(i)) {
      if (!field->contains(v)) {
        throw std::invalid_argument("parity entry outside the field");
      }
    }
  }
  return NpcCode(k, t, std::move(field), std::move(parity));
}

void Codeword::erase(std::size_t position) {
  auto it = std::lower_bound(erased.begin(), erased.end(), position);
  if (it == erased.end() || *it != position) erased.insert(it, position);
}

bool Codeword::is_erased(std::size_t position) const {
  return std::binary_search(erased.begin(), erased.end(), position);
}

Codeword encode(const NpcCode& code, const DataBlock& data) {
  if (data.symbols.size() != code.data_width()) {
    throw std::invalid_argument(
        "data block has " + std::to_string(data.symbols.size()) +
        " symbols, code expects " + std::to_string(code.data_width()));
  }
  for (auto v : data.symbols) {
    if (!code.field().contains(v)) {
      throw std::invalid_argument("data symbol outside the field");
    }
  }
  Codeword out;
  out.symbols.resize(code.k());
  code.encode_symbols(data.symbols, out.symbols);
  return out;
}

DataBlock recover(const NpcCode& code, const Codeword& received) {
  if (received.symbols.size() != code.k()) {
    throw std::invalid_argument("codeword has " +
                                std::to_string(received.symbols.size()) +
                                " symbols, code expects " +
                                std::to_string(code.k()));
  }
  const RecoveryPlan plan(code, received.erased);
  DataBlock out;
  out.symbols.resize(code.data_width());
  if (!plan.decode(received.symbols, out.symbols)) {
    throw InconsistentCodewordError(
        "surviving symbols do not belong to one codeword");
  }
  return out;
}

bool verify_mds(const NpcCode& code) {
  const FieldMatrix g = code.generator();
  const std::size_t d = code.data_width();
  const std::size_t k = code.k();
  std::vector<std::size_t> cols(d);
  for (std::size_t i = 0; i < d; ++i) cols[i] = i;
  // Walk all d-subsets of {0..k-1} in lexicographic order.
  while (true) {
    if (rank(code.field(), g.select_columns(cols)) != d) return false;
    std::size_t i = d;
    while (i > 0 && cols[i - 1] == k - d + i - 1) --i;
    if (i == 0) return true;
    ++cols[i - 1];
    for (std::size_t j = i; j < d; ++j) cols[j] = cols[j - 1] + 1;
  }
}

RecoveryPlan::RecoveryPlan(const NpcCode& code,
                           std::span<const std::size_t> erased)
    : field_(code.field_ptr()),
      k_(code.k()),
      width_(code.data_width()),
      erased_(erased.begin(), erased.end()),
      generator_(code.generator()) {
  std::sort(erased_.begin(), erased_.end());
  erased_.erase(std::unique(erased_.begin(), erased_.end()), erased_.end());
  if (!erased_.empty() && erased_.back() >= k_) {
    throw std::invalid_argument("erased position " +
                                std::to_string(erased_.back()) +
                                " out of range");
  }
  if (erased_.size() > code.t()) {
    throw CapacityExceededError(
        "capacity exceeded: " + std::to_string(erased_.size()) +
        " erasures, code recovers at most " + std::to_string(code.t()));
  }
  // Greedy basis: take survivors in order while they raise the rank. For an
  // MDS code this is simply the first k - t survivors.
  for (std::size_t p = 0; p < k_; ++p) {
    if (std::binary_search(erased_.begin(), erased_.end(), p)) continue;
    if (basis_.size() < width_) {
      basis_.push_back(p);
      if (rank(*field_, generator_.select_columns(basis_)) == basis_.size()) {
        continue;
      }
      basis_.pop_back();
    }
    checks_.push_back(p);
  }
  std::optional<FieldMatrix> inverse;
  if (basis_.size() == width_) {
    inverse = invert(*field_, generator_.select_columns(basis_));
  }
  if (!inverse) {
    throw CapacityExceededError(
        "capacity exceeded: surviving positions do not determine the data");
  }
  solve_ = std::move(*inverse);
}

bool RecoveryPlan::decode(std::span<const Symbol> received,
                          std::span<Symbol> data) const {
  const FieldContext& f = *field_;
  // data = received[basis] * solve
  for (std::size_t j = 0; j < width_; ++j) {
    Symbol acc = 0;
    for (std::size_t i = 0; i < width_; ++i) {
      acc ^= f.mul(received[basis_[i]], solve_(i, j));
    }
    data[j] = acc;
  }
  for (auto p : checks_) {
    Symbol acc = 0;
    for (std::size_t i = 0; i < width_; ++i) acc ^= f.mul(data[i], generator_(i, p));
    if (acc != received[p]) return false;
  }
  return true;
}

}  // namespace npc
