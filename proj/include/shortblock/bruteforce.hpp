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

#include "shortblock/code.hpp"

namespace sblk {

// Exhaustive oracles, capped at k <= 24 (about 16.7M codewords).

/// Minimum Hamming weight over all nonzero codewords.
int min_distance_bruteforce(const LinearCode& code);

/// Maximum-likelihood codeword under the bi-AWGN model for observation y
/// (the noise level does not change the argmax; ties break toward the
/// smallest info-word value, bit i weighted 2^i).
std::vector<uint8_t> ml_decode_bruteforce(const LinearCode& code, std::span<const double> y);

}  // namespace sblk
