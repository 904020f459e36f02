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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sblk {

/// Dense matrix over GF(2), rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(static_cast<size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_; }

  bool get(int r, int c) const {
    return (data_[static_cast<size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(int r, int c, bool v) {
    uint64_t& w = data_[static_cast<size_t>(r) * words_ + (c >> 6)];
    uint64_t mask = 1ull << (c & 63);
    w = v ? (w | mask) : (w & ~mask);
  }
  void flip(int r, int c) {
    data_[static_cast<size_t>(r) * words_ + (c >> 6)] ^= 1ull << (c & 63);
  }

  std::span<uint64_t> row(int r) {
    return {data_.data() + static_cast<size_t>(r) * words_, static_cast<size_t>(words_)};
  }
  std::span<const uint64_t> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * words_, static_cast<size_t>(words_)};
  }

  void xor_rows(int dst, int src) {
    uint64_t* d = data_.data() + static_cast<size_t>(dst) * words_;
    const uint64_t* s = data_.data() + static_cast<size_t>(src) * words_;
    for (int w = 0; w < words_; ++w) d[w] ^= s[w];
  }

  void swap_rows(int a, int b);

  std::vector<uint8_t> row_bits(int r) const;
  void set_row_bits(int r, std::span<const uint8_t> bits);

  bool operator==(const BitMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int words_ = 0;
  std::vector<uint64_t> data_;
};

/// x = u * M (row-vector times matrix).  |u| must equal M.rows().
std::vector<uint8_t> mat_vec_mul(std::span<const uint8_t> u, const BitMatrix& m);

/// M * x^T as a bit vector of length M.rows().  |x| must equal M.cols().
std::vector<uint8_t> mat_mul_vecT(const BitMatrix& m, std::span<const uint8_t> x);

int rank(BitMatrix m);

/// Reduced row echelon form in place; returns the pivot column of each of
/// the first rank rows.
std::vector<int> rref(BitMatrix& m);

/// Basis of the null space of the row space of g: a full-rank
/// (cols - rank) x cols matrix h with g * h^T = 0.
BitMatrix dual_basis(const BitMatrix& g);

}  // namespace sblk
