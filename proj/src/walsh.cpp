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

#include "socode/walsh.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace socode {

namespace {

// Index of beta's row in the transform output: digit i is Tr(beta * e_i).
std::uint64_t pairing_index(const FieldCtx& ctx, Fq beta) {
  std::uint64_t idx = 0, ppow = 1;
  for (std::uint32_t i = 0; i < ctx.n(); ++i) {
    Fq ei = static_cast<Fq>(ppow);
    idx += ctx.trace_to_prime(ctx.mul(beta, ei)) * ppow;
    ppow *= ctx.p();
  }
  return idx;
}

void check_counts(const WalshSpectrum& s) {
  const std::uint32_t p = s.p();
  const std::uint64_t q = s.q();
  // Individual |W|^2 values live in the real subfield and need not be
  // rational, but their sum over all beta is exactly p^{2n}.
  CycInt parseval(p);
  for (std::uint64_t b = 0; b < q; ++b) {
    std::int64_t sum = 0;
    for (std::uint32_t a = 0; a < p; ++a) {
      const std::int64_t c = s.counts[b * p + a];
      if (c < 0) throw Reject("RejectInternal", "negative spectrum count");
      sum += c;
    }
    if (sum != static_cast<std::int64_t>(q))
      throw Reject("RejectInternal", "spectrum counts do not sum to p^n");
    const CycInt w = s.value(static_cast<Fq>(b));
    parseval += w * w.conj();
  }
  std::int64_t total = 0;
  if (!parseval.is_rational(&total) ||
      total != static_cast<std::int64_t>(q) * static_cast<std::int64_t>(q))
    throw Reject("RejectInternal", "Parseval identity failed");
}

}  // namespace

CycInt WalshSpectrum::value(Fq beta) const {
  const std::uint32_t pp = p();
  std::vector<std::int64_t> c(pp);
  for (std::uint32_t a = 0; a < pp; ++a) c[a] = counts[std::uint64_t(beta) * pp + a];
  return CycInt::from_coords(std::move(c));
}

std::int64_t WalshSpectrum::value_int(Fq beta) const {
  if (p() != 2) throw Reject("RejectOddP", "integer view needs p = 2");
  return counts[std::uint64_t(beta) * 2] - counts[std::uint64_t(beta) * 2 + 1];
}

WalshSpectrum walsh_transform(const PAryFunction& f) {
  const FieldCtx& ctx = *f.ctx;
  const std::uint32_t p = ctx.p();
  const std::uint64_t q = ctx.q();
  const std::uint32_t n = ctx.n();

  WalshSpectrum out;
  out.ctx = f.ctx;
  out.counts.assign(q * p, 0);

  if (p == 2) {
    // Classical fast transform on the sign table.
    std::vector<std::int64_t> w(q);
    for (std::uint64_t x = 0; x < q; ++x) w[x] = f.values[x] ? -1 : 1;
    for (std::uint64_t len = 1; len < q; len <<= 1)
      for (std::uint64_t base = 0; base < q; base += len << 1)
        for (std::uint64_t i = base; i < base + len; ++i) {
          const std::int64_t a = w[i], b = w[i + len];
          w[i] = a + b;
          w[i + len] = a - b;
        }
    for (std::uint64_t beta = 0; beta < q; ++beta) {
      const std::int64_t v = w[pairing_index(ctx, static_cast<Fq>(beta))];
      out.counts[beta * 2] = (static_cast<std::int64_t>(q) + v) / 2;
      out.counts[beta * 2 + 1] = (static_cast<std::int64_t>(q) - v) / 2;
    }
    check_counts(out);
    return out;
  }

  // Radix-p stages on count vectors; multiplying by zeta^k is a cyclic
  // rotation of the p coordinates.
  std::vector<std::int64_t> buf(q * p, 0);
  for (std::uint64_t x = 0; x < q; ++x) buf[x * p + f.values[x]] = 1;

  std::vector<std::int64_t> tmp(std::uint64_t(p) * p);
  std::vector<std::int64_t*> slots(p);
  std::uint64_t stride = 1;
  for (std::uint32_t stage = 0; stage < n; ++stage) {
    const std::uint64_t block = stride * p;
    for (std::uint64_t base = 0; base < q; base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t j = 0; j < p; ++j)
          slots[j] = &buf[(base + off + j * stride) * p];
        // out[d][c] = sum_j in[j][(c + d*j) mod p]
        for (std::uint32_t d = 0; d < p; ++d)
          for (std::uint32_t c = 0; c < p; ++c) {
            std::int64_t acc = 0;
            for (std::uint32_t j = 0; j < p; ++j) {
              std::uint32_t rot = c + d * j;
              rot %= p;
              acc += slots[j][rot];
            }
            tmp[d * p + c] = acc;
          }
        for (std::uint32_t d = 0; d < p; ++d)
          for (std::uint32_t c = 0; c < p; ++c) slots[d][c] = tmp[d * p + c];
      }
    }
    stride = block;
  }

  for (std::uint64_t beta = 0; beta < q; ++beta) {
    const std::uint64_t src = pairing_index(ctx, static_cast<Fq>(beta));
    for (std::uint32_t a = 0; a < p; ++a)
      out.counts[beta * p + a] = buf[src * p + a];
  }
  check_counts(out);
  return out;
}

PlateauedProfile classify(const WalshSpectrum& spec) {
  const FieldCtx& ctx = *spec.ctx;
  const std::uint32_t p = ctx.p();
  const std::uint64_t q = ctx.q();

  PlateauedProfile prof;
  prof.support.assign(q, 0);
  prof.dual.assign(q, 0);
  prof.balanced = spec.value(0).is_zero();

  std::int64_t amp = -1;
  bool mixed = false;
  for (std::uint64_t b = 0; b < q; ++b) {
    const CycInt w = spec.value(static_cast<Fq>(b));
    if (w.is_zero()) continue;
    prof.support[b] = 1;
    ++prof.support_size;
    std::int64_t ns = 0;
    if (!w.try_norm_sq(&ns)) mixed = true;  // irrational |W|^2: not plateaued
    else if (amp == -1) amp = ns;
    else if (ns != amp) mixed = true;
  }
  if (mixed || amp <= 0) return prof;  // NotPlateaued

  // amp must be p^{n+s} exactly.
  std::int64_t t = amp;
  std::uint32_t e = 0;
  while (t % p == 0) { t /= p; ++e; }
  if (t != 1 || e < ctx.n() || e > 2 * ctx.n()) return prof;
  prof.plateaued = true;
  prof.s = e - ctx.n();

  std::uint64_t expect = 1;
  for (std::uint32_t i = 0; i < ctx.n() - prof.s; ++i) expect *= p;
  if (prof.support_size != expect)
    throw Reject("RejectInternal", "support size disagrees with amplitude");

  if (p == 2) {
    // W = +-2^{(n+s)/2}; the sign goes into the dual, epsilon is +1.
    if ((ctx.n() + prof.s) % 2 != 0) return prof;
    prof.weakly_regular = true;
    prof.epsilon = 1;
    for (std::uint64_t b = 0; b < q; ++b)
      if (prof.support[b])
        prof.dual[b] = spec.value_int(static_cast<Fq>(b)) < 0 ? 1 : 0;
    return prof;
  }

  // Candidates eps * G^{n+s} * zeta^c with G the Gauss sum.
  const CycInt base = CycInt::gauss_sum(p).pow(ctx.n() + prof.s);
  std::vector<CycInt> cand_pos, cand_neg;
  for (std::uint32_t c = 0; c < p; ++c) {
    cand_pos.push_back(base * CycInt::zeta(p, c));
    cand_neg.push_back(-(base * CycInt::zeta(p, c)));
  }
  int eps = 0;
  for (std::uint64_t b = 0; b < q; ++b) {
    if (!prof.support[b]) continue;
    const CycInt w = spec.value(static_cast<Fq>(b));
    int found_eps = 0;
    std::uint32_t found_c = 0;
    for (std::uint32_t c = 0; c < p && !found_eps; ++c) {
      if (w == cand_pos[c]) { found_eps = 1; found_c = c; }
      else if (w == cand_neg[c]) { found_eps = -1; found_c = c; }
    }
    if (!found_eps || (eps != 0 && found_eps != eps)) {
      prof.weakly_regular = false;
      prof.epsilon = 0;
      std::fill(prof.dual.begin(), prof.dual.end(), 0);
      return prof;
    }
    eps = found_eps;
    prof.dual[b] = static_cast<std::uint8_t>(found_c);
  }
  prof.weakly_regular = true;
  prof.epsilon = eps;
  return prof;
}

DualCounts dual_value_counts(const WalshSpectrum& spec,
                             const PlateauedProfile& profile) {
  const FieldCtx& ctx = *spec.ctx;
  const std::uint32_t p = ctx.p();
  if (p == 2 || !profile.plateaued || !profile.weakly_regular)
    throw Reject("RejectNotWeaklyRegular",
                 "dual counts need an odd-p weakly regular profile");

  DualCounts dc;
  dc.counts.assign(p, 0);
  for (std::uint64_t b = 0; b < ctx.q(); ++b)
    if (profile.support[b]) ++dc.counts[profile.dual[b]];

  const std::uint32_t n = ctx.n(), s = profile.s;
  const int eta_m1 = quad_char_mod(p, -1);
  auto eta_pow = [&](std::uint32_t k) { return (k % 2 == 0) ? 1 : eta_m1; };
  auto ppow = [&](std::uint32_t k) {
    std::int64_t r = 1;
    for (std::uint32_t i = 0; i < k; ++i) r *= p;
    return r;
  };

  dc.predicted.assign(p, 0);
  if ((n - s) % 2 == 0) {
    const std::int64_t base = ppow(n - s - 1);
    const std::int64_t dev =
        profile.epsilon * eta_pow(n + (n - s) / 2) * ppow((n - s - 2) / 2);
    dc.predicted[0] = static_cast<std::uint64_t>(base + dev * (p - 1));
    for (std::uint32_t z = 1; z < p; ++z)
      dc.predicted[z] = static_cast<std::uint64_t>(base - dev);
  } else {
    const std::int64_t base = ppow(n - s - 1);
    const std::int64_t dev =
        profile.epsilon * eta_pow(n + (n - s - 1) / 2) * ppow((n - s - 1) / 2);
    dc.predicted[0] = static_cast<std::uint64_t>(base);
    for (std::uint32_t z = 1; z < p; ++z)
      dc.predicted[z] = static_cast<std::uint64_t>(
          quad_char_mod(p, z) == 1 ? base + dev : base - dev);
  }
  dc.matches_lemma = dc.counts == dc.predicted;
  return dc;
}

}  // namespace socode
