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

using Symbol = uint16_t;

/// Arithmetic context for GF(2^m), m <= 8.
///
/// Multiplication and inversion go through log/antilog tables built from a
/// primitive polynomial.  Addition is XOR of the polynomial representations.
/// Instances are immutable after construction and safe to share across
/// threads.
class FieldSpec {
 public:
  /// prim_poly is the full degree-m polynomial as a bitmask, e.g. 0x11d for
  /// x^8+x^4+x^3+x^2+1.  Throws std::invalid_argument if the polynomial is
  /// not primitive over GF(2) or m is out of range.
  FieldSpec(int m, uint32_t prim_poly);

  /// Default primitive polynomials: m=8 -> 0x11d, m=7 -> 0x89, smaller
  /// degrees use the usual textbook choices.
  static FieldSpec standard(int m);

  int m() const { return m_; }
  int q() const { return q_; }
  uint32_t prim_poly() const { return prim_poly_; }

  Symbol mul(Symbol a, Symbol b) const {
    if (a == 0 || b == 0) return 0;
    return antilog_[log_[a] + log_[b]];  // antilog table is doubled
  }

  static Symbol add(Symbol a, Symbol b) { return a ^ b; }

  /// Throws std::domain_error on a == 0.
  Symbol inv(Symbol a) const;

  Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

  Symbol pow(Symbol a, int e) const;

  /// alpha^i for the primitive element alpha.
  Symbol alpha_pow(int i) const;

 private:
  int m_;
  int q_;
  uint32_t prim_poly_;
  std::vector<Symbol> log_;      // index by element, element != 0
  std::vector<Symbol> antilog_;  // 2*(q-1) entries to skip the mod
};

/// In-place Walsh-Hadamard transform on the additive group of GF(2)^m:
/// W[u] = sum_s (-1)^{<u,s>} v[s].  Self-inverse up to a factor of q.
/// Throws std::invalid_argument unless v.size() is a power of two.
void wht(std::span<double> v);

/// Convenience copy version.
std::vector<double> wht(const std::vector<double>& v);

}  // namespace sblk
