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

#include <optional>
#include <string>
#include <vector>

#include "shortblock/alist.hpp"
#include "shortblock/bitmat.hpp"
#include "shortblock/galois.hpp"
#include "shortblock/rng.hpp"

namespace sblk {

/// Binary linear block code.  G is k x n, H is (n-k) x n, G * H^T = 0.
struct LinearCode {
  int n = 0;
  int k = 0;
  BitMatrix G;
  BitMatrix H;
  std::string label;

  // Positions where the info word appears verbatim, when the generator is
  // systematic; empty otherwise.
  std::vector<int> systematic_positions;
};

/// x = u * G.  Throws std::invalid_argument on |u| != k.
std::vector<uint8_t> encode(const LinearCode& code, std::span<const uint8_t> u);

/// H * x^T == 0.
bool syndrome_ok(const LinearCode& code, std::span<const uint8_t> x);

/// Build a code from its parity-check matrix: G is a null-space basis,
/// k = n - rank(H).  Throws if H is rank-deficient.
LinearCode code_from_parity(const BitMatrix& h, std::string label);

/// Build a code from a generator matrix; H is the dual basis.
/// Throws if G is rank-deficient.
LinearCode code_from_generator(const BitMatrix& g, std::string label);

/// Uniformly random full-rank generator (used by self-checks and tests).
LinearCode random_code(int n, int k, Rng& rng, std::string label = "random");

/// Non-binary linear code over GF(2^m) with a sparse parity-check matrix.
/// Symbols map to bits MSB-first in groups of m, the same mapping in both
/// directions.
struct NbCode {
  FieldSpec field;
  int n_sym = 0;
  int k_sym = 0;
  SparseMatrix H;     // (n_sym - k_sym) x n_sym over the field
  std::vector<std::vector<Symbol>> G;  // k_sym rows of n_sym symbols
  std::string label;

  int n_bits() const { return n_sym * field.m(); }
  int k_bits() const { return k_sym * field.m(); }

  std::vector<Symbol> encode_symbols(std::span<const Symbol> u) const;
  std::vector<uint8_t> encode_bits(std::span<const uint8_t> u_bits) const;
  bool syndrome_ok(std::span<const Symbol> x) const;

  std::vector<Symbol> bits_to_symbols(std::span<const uint8_t> bits) const;
  std::vector<uint8_t> symbols_to_bits(std::span<const Symbol> syms) const;

  /// Binary image: G rows are the bit images of unit info vectors, H is the
  /// dual basis of that generator.
  LinearCode binary_image() const;
};

/// Derive a systematic symbol-level generator from a sparse full-rank H over
/// GF(2^m).  Throws if rank(H) < rows(H).
NbCode nb_code_from_parity(const FieldSpec& field, const SparseMatrix& h, std::string label);

}  // namespace sblk
