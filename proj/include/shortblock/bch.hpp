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

/// The (128,64) extended BCH code: narrow-sense primitive BCH of length 127
/// and dimension 64 (generator = lcm of the minimal polynomials of
/// alpha^1..alpha^20 over GF(2^7), degree 63), extended by an overall parity
/// bit.  The generator is returned in systematic form with the info word in
/// positions 0..63.  Throws std::runtime_error if the internal degree check
/// fails.
LinearCode build_ebch_128_64();

}  // namespace sblk
