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

#include "npc/field_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace npc {

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::select_columns(
    std::span<const std::size_t> which) const {
  FieldMatrix out(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < which.size(); ++c) {
      out(r, c) = (*this)(r, which[c]);
    }
  }
  return out;
}

FieldMatrix multiply(const FieldContext& f, const FieldMatrix& a,
                     const FieldMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix shapes do not conform");
  }
  FieldMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Symbol aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) ^= f.mul(aik, b(k, j));
      }
    }
  }
  return out;
}

namespace {

void swap_rows(FieldMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// Reduces m to row echelon form in place; returns the pivot count. When
// `companion` is given it receives the same row operations.
std::size_t eliminate(const FieldContext& f, FieldMatrix& m,
                      FieldMatrix* companion) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t p = pivot_row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, p, pivot_row);
    if (companion) swap_rows(*companion, p, pivot_row);

    const Symbol scale = f.inv(m(pivot_row, col));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      m(pivot_row, c) = f.mul(m(pivot_row, c), scale);
    }
    if (companion) {
      for (std::size_t c = 0; c < companion->cols(); ++c) {
        (*companion)(pivot_row, c) = f.mul((*companion)(pivot_row, c), scale);
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row) continue;
      const Symbol factor = m(r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m(r, c) ^= f.mul(factor, m(pivot_row, c));
      }
      if (companion) {
        for (std::size_t c = 0; c < companion->cols(); ++c) {
          (*companion)(r, c) ^= f.mul(factor, (*companion)(pivot_row, c));
        }
      }
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

std::optional<FieldMatrix> invert(const FieldContext& f, FieldMatrix m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("only square matrices can be inverted");
  }
  FieldMatrix result = FieldMatrix::identity(m.rows());
  if (eliminate(f, m, &result) != m.rows()) return std::nullopt;
  return result;
}

std::size_t rank(const FieldContext& f, FieldMatrix m) {
  return eliminate(f, m, nullptr);
}

}  // namespace npc
