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

#include "shortblock/crc.hpp"

#include <stdexcept>

namespace sblk {

CrcSpec CrcSpec::make(int degree, uint32_t poly) {
  if (degree < 1 || degree > 31) throw std::invalid_argument("CrcSpec: degree out of range");
  if ((poly >> degree) != 1u)
    throw std::invalid_argument("CrcSpec: polynomial degree mismatch");
  if (!(poly & 1u)) throw std::invalid_argument("CrcSpec: zero constant term");
  return CrcSpec{degree, poly};
}

CrcSpec crc7() { return CrcSpec::make(7, 0x89); }

namespace {

// Remainder of bits(x) * x^shift modulo the generator, as a register whose
// bit (degree-1) is the coefficient of x^(degree-1).
uint32_t crc_remainder(std::span<const uint8_t> bits, const CrcSpec& crc, int shift) {
  uint32_t reg = 0;
  const uint32_t top = 1u << (crc.degree - 1);
  const uint32_t mask = (1u << crc.degree) - 1;
  auto step = [&](uint32_t bit) {
    uint32_t fb = ((reg & top) ? 1u : 0u) ^ bit;
    reg = (reg << 1) & mask;
    if (fb) reg ^= crc.poly & mask;
  };
  for (uint8_t b : bits) step(b & 1);
  for (int i = 0; i < shift; ++i) step(0);
  return reg;
}

}  // namespace

std::vector<uint8_t> crc_attach(std::span<const uint8_t> u, const CrcSpec& crc) {
  uint32_t rem = crc_remainder(u, crc, crc.degree);
  std::vector<uint8_t> out(u.begin(), u.end());
  for (int i = crc.degree - 1; i >= 0; --i) out.push_back((rem >> i) & 1);
  return out;
}

bool crc_check(std::span<const uint8_t> extended, const CrcSpec& crc) {
  return crc_remainder(extended, crc, 0) == 0;
}

}  // namespace sblk
