// Copyright 2026 The socode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "socode/codes.hpp"

namespace socode {

// Closed-form weight (and Walsh value) distributions for each construction
// family. Naming: TripleProduct* are the binary trace-product codes (split by
// t-vector weight), SinglyEven is the subspace-restricted variant, Ftee* are
// the square-indicator codes (split by p^n mod 4), Fa* are the plateaued
// shift codes (split by the parity of n+s). The *Walsh entries predict Walsh
// value multisets instead of weights.
enum class TheoremId {
  TripleProductWt4,    // binary, (t1..t4) = (1,1,1,1)
  TripleProductWt3,    // binary, t1 = 1, wt(t2,t3,t4) = 2
  SinglyEvenSubspace,  // binary, beta restricted to V
  Ftee1Mod4,           // odd p, p^n = 1 mod 4
  Ftee3Mod4,           // odd p, p^n = 3 mod 4
  FaEven,              // odd p, n + s even
  FaOdd,               // odd p, n + s odd
  TripleProductWalsh,  // Walsh values of the trace product
  SinglyEvenWalsh,     // Walsh values on V
};

struct TheoremParams {
  std::uint32_t p = 2;
  std::uint32_t n = 0;
  std::uint32_t m = 0;       // half degree for the binary families
  std::uint32_t s = 0;       // plateau amplitude exponent
  int epsilon = 1;           // Walsh sign of the base function
  std::uint32_t a = 1;       // shift for the Fa families
  int t_weight = 4;          // 3 or 4 for the triple-product families
};

struct PredictedDistribution {
  TheoremId id{};
  TheoremParams params;
  std::uint64_t length = 0;
  std::uint64_t codeword_count = 0;  // what the multiplicities must sum to
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;  // sorted, merged,
                                                              // zero rows pruned
};

// Evaluates a table at concrete parameters. Both i-branches of the
// row-compressed tables are expanded and merged; rows whose multiplicity
// evaluates to zero are pruned. Errors: RejectOutOfDomain, naming the
// violated hypothesis.
PredictedDistribution predict(TheoremId id, const TheoremParams& params);

struct WalshPrediction {
  std::vector<std::pair<std::int64_t, std::uint64_t>> rows;  // (value, count)
};

// Predicted Walsh value multisets (binary families only).
WalshPrediction predict_walsh(TheoremId id, const TheoremParams& params);

struct DiffReport {
  bool match = false;
  std::string first_mismatch;  // empty when match
};

// Exact multiset comparison between a prediction and a computed
// distribution.
DiffReport diff(const PredictedDistribution& pred,
                const WeightDistribution& computed);

}  // namespace socode
