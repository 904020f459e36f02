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

#include "shortblock/galois.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace sblk {

FieldSpec::FieldSpec(int m, uint32_t prim_poly) : m_(m), prim_poly_(prim_poly) {
  if (m < 1 || m > 8) throw std::invalid_argument("FieldSpec: m must be in 1..8");
  if ((prim_poly >> m) != 1u)
    throw std::invalid_argument("FieldSpec: prim_poly must have degree exactly m");
  q_ = 1 << m;

  log_.assign(q_, 0);
  antilog_.assign(2 * (q_ - 1), 0);

  // Generate alpha^i by an LFSR step (multiply by x, reduce by prim_poly).
  // The state visits every nonzero value exactly once iff prim_poly is
  // primitive; revisiting 1 early means a smaller multiplicative order.
  const uint32_t low = prim_poly & static_cast<uint32_t>(q_ - 1);
  uint32_t state = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    if (state == 1 && i > 0)
      throw std::invalid_argument("FieldSpec: polynomial is not primitive");
    antilog_[i] = static_cast<Symbol>(state);
    log_[state] = static_cast<Symbol>(i);
    bool carry = (state >> (m - 1)) & 1u;
    state = (state << 1) & static_cast<uint32_t>(q_ - 1);
    if (carry) state ^= low;
  }
  if (state != 1) throw std::invalid_argument("FieldSpec: polynomial is not primitive");
  for (int i = 0; i < q_ - 1; ++i) antilog_[q_ - 1 + i] = antilog_[i];
}

FieldSpec FieldSpec::standard(int m) {
  static const uint32_t polys[9] = {0,    0x3,  0x7,  0xb, 0x13,
                                    0x25, 0x43, 0x89, 0x11d};
  if (m < 1 || m > 8) throw std::invalid_argument("FieldSpec::standard: m must be in 1..8");
  return FieldSpec(m, polys[m]);
}

Symbol FieldSpec::inv(Symbol a) const {
  if (a == 0) throw std::domain_error("FieldSpec::inv: zero has no inverse");
  if (a == 1) return 1;
  return antilog_[q_ - 1 - log_[a]];
}

Symbol FieldSpec::pow(Symbol a, int e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  long idx = static_cast<long>(log_[a]) * e % (q_ - 1);
  if (idx < 0) idx += q_ - 1;
  return antilog_[idx];
}

Symbol FieldSpec::alpha_pow(int i) const {
  int idx = i % (q_ - 1);
  if (idx < 0) idx += q_ - 1;
  return antilog_[idx];
}

void wht(std::span<double> v) {
  const size_t n = v.size();
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("wht: length must be a power of two, got " +
                                std::to_string(n));
  for (size_t h = 1; h < n; h <<= 1) {
    for (size_t i = 0; i < n; i += h << 1) {
      for (size_t j = i; j < i + h; ++j) {
        double x = v[j];
        double y = v[j + h];
        v[j] = x + y;
        v[j + h] = x - y;
      }
    }
  }
}

std::vector<double> wht(const std::vector<double>& v) {
  std::vector<double> out(v);
  wht(std::span<double>(out));
  return out;
}

}  // namespace sblk
