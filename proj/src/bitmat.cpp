/*
 * Copyright 2026 The shortblock authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "shortblock/bitmat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sblk {

void BitMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  uint64_t* pa = data_.data() + static_cast<size_t>(a) * words_;
  uint64_t* pb = data_.data() + static_cast<size_t>(b) * words_;
  for (int w = 0; w < words_; ++w) std::swap(pa[w], pb[w]);
}

std::vector<uint8_t> BitMatrix::row_bits(int r) const {
  std::vector<uint8_t> out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = get(r, c);
  return out;
}

void BitMatrix::set_row_bits(int r, std::span<const uint8_t> bits) {
  for (int c = 0; c < cols_; ++c) set(r, c, bits[c] & 1);
}

std::vector<uint8_t> mat_vec_mul(std::span<const uint8_t> u, const BitMatrix& m) {
  if (static_cast<int>(u.size()) != m.rows())
    throw std::invalid_argument("mat_vec_mul: length mismatch");
  const int words = m.words_per_row();
  std::vector<uint64_t> acc(words, 0);
  for (int r = 0; r < m.rows(); ++r) {
    if (!(u[r] & 1)) continue;
    auto row = m.row(r);
    for (int w = 0; w < words; ++w) acc[w] ^= row[w];
  }
  std::vector<uint8_t> out(m.cols());
  for (int c = 0; c < m.cols(); ++c) out[c] = (acc[c >> 6] >> (c & 63)) & 1u;
  return out;
}

std::vector<uint8_t> mat_mul_vecT(const BitMatrix& m, std::span<const uint8_t> x) {
  if (static_cast<int>(x.size()) != m.cols())
    throw std::invalid_argument("mat_mul_vecT: length mismatch");
  const int words = m.words_per_row();
  std::vector<uint64_t> xw(words, 0);
  for (int c = 0; c < m.cols(); ++c)
    if (x[c] & 1) xw[c >> 6] |= 1ull << (c & 63);
  std::vector<uint8_t> out(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    uint64_t parity = 0;
    for (int w = 0; w < words; ++w) parity ^= row[w] & xw[w];
    out[r] = static_cast<uint8_t>(std::popcount(parity) & 1);
  }
  return out;
}

std::vector<int> rref(BitMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.get(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    m.swap_rows(row, pivot);
    for (int r = 0; r < m.rows(); ++r)
      if (r != row && m.get(r, col)) m.xor_rows(r, row);
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(BitMatrix m) { return static_cast<int>(rref(m).size()); }

BitMatrix dual_basis(const BitMatrix& g) {
  BitMatrix r = g;
  std::vector<int> pivots = rref(r);
  const int k = static_cast<int>(pivots.size());
  const int n = g.cols();
  std::vector<uint8_t> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // One dual row per free column: 1 at the free column, and at pivot column
  // pivots[i] the entry r[i][free] (standard kernel construction).
  BitMatrix h(n - k, n);
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    h.set(static_cast<int>(j), fc, true);
    for (int i = 0; i < k; ++i)
      if (r.get(i, fc)) h.set(static_cast<int>(j), pivots[i], true);
  }
  return h;
}

}  // namespace sblk
