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

/// CRC over GF(2).  Convention: not reflected, zero init, zero xorout,
/// parity bits appended high-degree-first.  Message bits are consumed in
/// transmission order, first bit = highest power of x.
struct CrcSpec {
  int degree;
  uint32_t poly;  // full polynomial bitmask including the x^degree term

  /// Throws std::invalid_argument unless poly has degree exactly `degree`
  /// and a nonzero constant term.
  static CrcSpec make(int degree, uint32_t poly);
};

/// CRC-7 with generator x^7 + x^3 + 1.
CrcSpec crc7();

std::vector<uint8_t> crc_attach(std::span<const uint8_t> u, const CrcSpec& crc);
bool crc_check(std::span<const uint8_t> extended, const CrcSpec& crc);

}  // namespace sblk
