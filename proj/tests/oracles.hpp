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

// Test-only oracles, kept independent of the library's fast paths: a naive
// O(q^2) Walsh transform, a deterministic RNG, and small helpers shared by
// the suites.

#pragma once

#include <cstdint>
#include <vector>

#include "socode/cyclotomic.hpp"
#include "socode/pfunc.hpp"
#include "socode/walsh.hpp"

namespace socode::testing {

// Deterministic xorshift generator so test data never depends on the
// platform's std::mt19937 quirks or ordering.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ULL) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// W_f(beta) by direct double-loop summation; counts, not ring elements, so
// it shares nothing with the butterfly implementation.
inline CycInt naive_walsh_at(const PAryFunction& f, Fq beta) {
  const FieldCtx& ctx = *f.ctx;
  std::vector<std::int64_t> counts(ctx.p(), 0);
  for (std::uint64_t x = 0; x < ctx.q(); ++x) {
    const std::uint32_t tr = ctx.trace_to_prime(ctx.mul(beta, static_cast<Fq>(x)));
    ++counts[(f.values[x] + ctx.p() - tr) % ctx.p()];
  }
  return CycInt::from_coords(std::move(counts));
}

inline PAryFunction random_function(FieldPtr ctx, Rng& rng) {
  std::vector<std::uint8_t> vals(ctx->q());
  for (auto& v : vals) v = static_cast<std::uint8_t>(rng.below(ctx->p()));
  return function_from_table(std::move(ctx), std::move(vals), "random");
}

// Random function that is not of the form Tr(omega x) (resamples until the
// codes it feeds are nondegenerate).
inline PAryFunction random_nonaffine_function(FieldPtr ctx, Rng& rng) {
  for (;;) {
    PAryFunction f = random_function(ctx, rng);
    bool affine = false;
    for (std::uint64_t w = 0; w < ctx->q() && !affine; ++w) {
      bool eq = true;
      for (std::uint64_t x = 0; x < ctx->q() && eq; ++x)
        eq = f.values[x] ==
             ctx->trace_to_prime(ctx->mul(static_cast<Fq>(w), static_cast<Fq>(x)));
      affine = eq;
    }
    if (!affine) return f;
  }
}

inline std::uint64_t hamming_weight(const std::vector<std::uint8_t>& v) {
  std::uint64_t w = 0;
  for (auto x : v) w += x != 0;
  return w;
}

}  // namespace socode::testing
