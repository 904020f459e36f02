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
#include <limits>
#include <utility>
#include <vector>

namespace sblk {

enum class DecodeStatus : uint8_t {
  kCodeword,  // output is a valid codeword of the scheme
  kErasure,   // decoder gave up; word holds its best guess for diagnostics
};

struct DecodeOutcome {
  std::vector<uint8_t> word;  // hard decision, length n
  DecodeStatus status = DecodeStatus::kCodeword;
  int iterations = 0;

  // log of the list ratio metric (best vs rest of the candidate list) when
  // the decoder produced one, NaN otherwise.
  double list_log_metric = std::numeric_limits<double>::quiet_NaN();

  // optional candidate list with per-candidate log-likelihoods (up to an
  // additive constant), best first
  std::vector<std::pair<std::vector<uint8_t>, double>> candidates;

  bool has_list_metric() const { return !std::isnan(list_log_metric); }
};

}  // namespace sblk
