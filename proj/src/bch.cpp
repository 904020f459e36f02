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

#include "shortblock/bch.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

namespace sblk {

namespace {

// Minimal polynomial of alpha^j: product of (x + alpha^{j*2^i}) over the
// cyclotomic coset of j.  The result must have GF(2) coefficients.
uint64_t minimal_poly(const FieldSpec& f, int j) {
  const int order = f.q() - 1;
  std::vector<int> coset;
  int e = j % order;
  do {
    coset.push_back(e);
    e = (2 * e) % order;
  } while (e != j % order);

  std::vector<Symbol> poly{1};  // leading coefficient, degree grows by 1 each factor
  for (int exp : coset) {
    Symbol root = f.alpha_pow(exp);
    std::vector<Symbol> next(poly.size() + 1, 0);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i] = FieldSpec::add(next[i], poly[i]);                 // x * poly
      next[i + 1] = FieldSpec::add(next[i + 1], f.mul(poly[i], root));
    }
    poly = std::move(next);
  }

  uint64_t bits = 0;
  const int deg = static_cast<int>(poly.size()) - 1;
  for (size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] > 1) throw std::runtime_error("minimal_poly: non-binary coefficient");
    if (poly[i]) bits |= 1ull << (deg - static_cast<int>(i));
  }
  return bits;  // bit d = coefficient of x^d
}

uint64_t poly_mul_gf2(uint64_t a, uint64_t b) {
  unsigned __int128 acc = 0;
  for (int i = 0; i < 64; ++i)
    if ((b >> i) & 1) acc ^= static_cast<unsigned __int128>(a) << i;
  if (acc >> 64) throw std::runtime_error("poly_mul_gf2: overflow");
  return static_cast<uint64_t>(acc);
}

}  // namespace

LinearCode build_ebch_128_64() {
  const FieldSpec f = FieldSpec::standard(7);
  const int n_cyclic = 127;
  const int k = 64;

  std::set<int> leaders;
  uint64_t g = 1;
  for (int j = 1; j <= 20; ++j) {
    int leader = j;
    int e = j;
    do {
      e = (2 * e) % n_cyclic;
      leader = std::min(leader, e);
    } while (e != j);
    if (leaders.insert(leader).second) g = poly_mul_gf2(g, minimal_poly(f, leader));
  }

  const int deg = 63 - std::countl_zero(g);
  if (deg != 63)
    throw std::runtime_error("build_ebch_128_64: generator degree " + std::to_string(deg) +
                             ", expected 63");

  // Cyclic generator rows x^i * g(x), then the overall parity column.
  BitMatrix gm(k, n_cyclic + 1);
  for (int i = 0; i < k; ++i) {
    int weight = 0;
    for (int d = 0; d <= 63; ++d)
      if ((g >> d) & 1) {
        gm.set(i, i + d, true);
        ++weight;
      }
    if (weight & 1) gm.set(i, n_cyclic, true);
  }

  // The staircase already has leading ones on columns 0..63, so reduction
  // yields a systematic generator without column swaps.
  std::vector<int> pivots = rref(gm);
  if (static_cast<int>(pivots.size()) != k)
    throw std::runtime_error("build_ebch_128_64: generator rank deficient");
  for (int i = 0; i < k; ++i)
    if (pivots[i] != i) throw std::runtime_error("build_ebch_128_64: unexpected pivot layout");

  LinearCode code = code_from_generator(gm, "ebch_128_64");
  code.systematic_positions.resize(k);
  for (int i = 0; i < k; ++i) code.systematic_positions[i] = i;
  return code;
}

}  // namespace sblk
