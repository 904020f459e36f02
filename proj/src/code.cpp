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

#include "shortblock/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace sblk {

std::vector<uint8_t> encode(const LinearCode& code, std::span<const uint8_t> u) {
  if (static_cast<int>(u.size()) != code.k)
    throw std::invalid_argument("encode: info word length " + std::to_string(u.size()) +
                                ", expected " + std::to_string(code.k));
  return mat_vec_mul(u, code.G);
}

bool syndrome_ok(const LinearCode& code, std::span<const uint8_t> x) {
  auto s = mat_mul_vecT(code.H, x);
  return std::all_of(s.begin(), s.end(), [](uint8_t b) { return b == 0; });
}

LinearCode code_from_parity(const BitMatrix& h, std::string label) {
  BitMatrix hc = h;
  if (static_cast<int>(rref(hc).size()) != h.rows())
    throw std::invalid_argument("code_from_parity: H is rank-deficient");
  LinearCode code;
  code.n = h.cols();
  code.k = h.cols() - h.rows();
  code.H = h;
  code.G = dual_basis(h);  // null space of H = row space of G
  code.label = std::move(label);
  return code;
}

LinearCode code_from_generator(const BitMatrix& g, std::string label) {
  BitMatrix gc = g;
  if (static_cast<int>(rref(gc).size()) != g.rows())
    throw std::invalid_argument("code_from_generator: G is rank-deficient");
  LinearCode code;
  code.n = g.cols();
  code.k = g.rows();
  code.G = g;
  code.H = dual_basis(g);
  code.label = std::move(label);
  return code;
}

LinearCode random_code(int n, int k, Rng& rng, std::string label) {
  if (k <= 0 || k >= n) throw std::invalid_argument("random_code: need 0 < k < n");
  for (;;) {
    BitMatrix g(k, n);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) g.set(r, c, rng.next_bit());
    BitMatrix gc = g;
    if (static_cast<int>(rref(gc).size()) == k) return code_from_generator(g, label);
  }
}

std::vector<Symbol> NbCode::encode_symbols(std::span<const Symbol> u) const {
  if (static_cast<int>(u.size()) != k_sym)
    throw std::invalid_argument("NbCode::encode_symbols: length mismatch");
  std::vector<Symbol> x(n_sym, 0);
  for (int i = 0; i < k_sym; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < n_sym; ++j)
      x[j] = FieldSpec::add(x[j], field.mul(u[i], G[i][j]));
  }
  return x;
}

std::vector<uint8_t> NbCode::encode_bits(std::span<const uint8_t> u_bits) const {
  return symbols_to_bits(encode_symbols(bits_to_symbols(u_bits)));
}

bool NbCode::syndrome_ok(std::span<const Symbol> x) const {
  for (int r = 0; r < H.rows(); ++r) {
    Symbol acc = 0;
    for (const SparseMatrix::Entry& e : H.row(r))
      acc = FieldSpec::add(acc, field.mul(e.coeff, x[e.index]));
    if (acc != 0) return false;
  }
  return true;
}

std::vector<Symbol> NbCode::bits_to_symbols(std::span<const uint8_t> bits) const {
  const int m = field.m();
  if (bits.size() % m != 0)
    throw std::invalid_argument("bits_to_symbols: length not divisible by m");
  std::vector<Symbol> out(bits.size() / m, 0);
  for (size_t s = 0; s < out.size(); ++s) {
    Symbol v = 0;
    for (int j = 0; j < m; ++j) v = static_cast<Symbol>((v << 1) | (bits[s * m + j] & 1));
    out[s] = v;
  }
  return out;
}

std::vector<uint8_t> NbCode::symbols_to_bits(std::span<const Symbol> syms) const {
  const int m = field.m();
  std::vector<uint8_t> out(syms.size() * m);
  for (size_t s = 0; s < syms.size(); ++s)
    for (int j = 0; j < m; ++j)
      out[s * m + j] = (syms[s] >> (m - 1 - j)) & 1;  // MSB first
  return out;
}

LinearCode NbCode::binary_image() const {
  const int kb = k_bits();
  const int nb = n_bits();
  BitMatrix g(kb, nb);
  std::vector<uint8_t> unit(kb, 0);
  for (int i = 0; i < kb; ++i) {
    unit[i] = 1;
    g.set_row_bits(i, encode_bits(unit));
    unit[i] = 0;
  }
  LinearCode code = code_from_generator(g, label + "_bin");
  return code;
}

NbCode nb_code_from_parity(const FieldSpec& field, const SparseMatrix& h, std::string label) {
  const int rows = h.rows();
  const int n = h.cols();
  const int k = n - rows;
  if (k <= 0) throw std::invalid_argument("nb_code_from_parity: no dimension left");

  // Dense elimination over GF(q) to bring H to [A | I] up to column choice.
  std::vector<std::vector<Symbol>> d(rows, std::vector<Symbol>(n, 0));
  for (int r = 0; r < rows; ++r)
    for (const SparseMatrix::Entry& e : h.row(r)) d[r][e.index] = e.coeff;

  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r)
      if (d[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(d[row], d[pr]);
    Symbol inv = field.inv(d[row][col]);
    for (int c = 0; c < n; ++c) d[row][c] = field.mul(d[row][c], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == row || d[r][col] == 0) continue;
      Symbol f = d[r][col];
      for (int c = 0; c < n; ++c)
        d[r][c] = FieldSpec::add(d[r][c], field.mul(f, d[row][c]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (row != rows) throw std::invalid_argument("nb_code_from_parity: H is rank-deficient");

  std::vector<uint8_t> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // Kernel basis: one generator row per free column.  H * g^T = 0 with
  // g[free_j] = 1 and g[pivot_i] = d[i][free_j] (characteristic 2, so the
  // sign flip is a no-op).
  NbCode code{field, n, k, h, {}, std::move(label)};
  code.G.assign(k, std::vector<Symbol>(n, 0));
  for (int j = 0; j < k; ++j) {
    int fc = free_cols[j];
    code.G[j][fc] = 1;
    for (int i = 0; i < rows; ++i)
      if (d[i][fc] != 0) code.G[j][pivot_col[i]] = d[i][fc];
  }
  return code;
}

}  // namespace sblk
