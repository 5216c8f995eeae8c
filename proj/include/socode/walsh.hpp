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
#include <vector>

#include "socode/cyclotomic.hpp"
#include "socode/pfunc.hpp"

namespace socode {

// Exact Walsh spectrum of a p-ary function: for each beta the count vector
// (c_0, ..., c_{p-1}) with c_a = #{x : f(x) - Tr(beta x) = a}, so that
// W_f(beta) = sum c_a zeta^a in Z[zeta_p]. Counts are nonnegative and sum to
// p^n for every beta; Parseval is checked at construction.
struct WalshSpectrum {
  FieldPtr ctx;
  std::vector<std::int64_t> counts;  // flat, beta * p + a

  std::uint32_t p() const { return ctx->p(); }
  std::uint64_t q() const { return ctx->q(); }

  CycInt value(Fq beta) const;
  // W as a plain integer; p = 2 only.
  std::int64_t value_int(Fq beta) const;
  std::int64_t norm_sq(Fq beta) const { return value(beta).norm_sq(); }
};

// Radix-p decimation transform on the count-vector table; O(n p^2) integer
// adds per element. For p = 2 the classical in-place fast transform on the
// +-1 sign table is used instead.
WalshSpectrum walsh_transform(const PAryFunction& f);

// Spectral classification. `plateaued` false means the squared magnitudes
// are mixed (an outcome, not an error); weakly_regular is meaningful only
// when plateaued. For odd p the branch of sqrt(p*) is fixed to the Gauss
// sum, so epsilon is derived from exact ring arithmetic; the dual table
// stores f* on the support and 0 elsewhere. For p = 2 the sign is folded
// into the dual and epsilon is +1.
struct PlateauedProfile {
  bool plateaued = false;
  std::uint32_t s = 0;
  bool weakly_regular = false;
  int epsilon = 0;
  bool balanced = false;
  std::uint64_t support_size = 0;
  std::vector<std::uint8_t> support;  // 0/1 per beta
  std::vector<std::uint8_t> dual;     // f*(beta), 0 off-support
};

PlateauedProfile classify(const WalshSpectrum& spec);

// Preimage counts of the dual on the Walsh support, together with the
// closed-form prediction they are expected to match; a mismatch is reported
// through `matches_lemma` rather than silently accepted.
// Errors: RejectNotWeaklyRegular (also for p = 2, where the closed forms do
// not apply).
struct DualCounts {
  std::vector<std::uint64_t> counts;      // indexed by z in GF(p)
  std::vector<std::uint64_t> predicted;
  bool matches_lemma;
};

DualCounts dual_value_counts(const WalshSpectrum& spec,
                             const PlateauedProfile& profile);

}  // namespace socode
