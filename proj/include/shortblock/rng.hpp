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

#include <cmath>
#include <cstdint>

namespace sblk {

/// Counter-keyed random stream.
///
/// Every (master_seed, stream, counter) triple deterministically derives an
/// independent stream, so parallel workers produce identical results no
/// matter how frames are scheduled.  The generator is splitmix64; Gaussians
/// come from Box-Muller on the raw 64-bit output.
class Rng {
 public:
  Rng() : state_(0x9e3779b97f4a7c15ull) {}
  explicit Rng(uint64_t seed) : state_(mix(seed)) {}

  static Rng keyed(uint64_t master_seed, uint64_t stream, uint64_t counter) {
    uint64_t s = mix(master_seed + 0x9e3779b97f4a7c15ull * (stream + 1));
    s = mix(s ^ (counter + 0xbf58476d1ce4e5b9ull));
    return Rng(s);
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform on (0, 1]: never returns 0, safe under log().
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  int next_bit() { return static_cast<int>(next_u64() >> 63); }

  /// Uniform in [0, bound).
  uint64_t next_below(uint64_t bound) { return next_u64() % bound; }

  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_unit();
    double u2 = next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdull;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ull;
    return z ^ (z >> 33);
  }

  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sblk
