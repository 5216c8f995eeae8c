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

#include "socode/codes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "socode/parallel.hpp"

namespace socode {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t t = 1; t < p; ++t)
    if (t * a % p == 1) return t;
  throw Reject("RejectInternal", "no inverse mod p");
}

// Domain basis: standard basis for the full field, the stored basis for a
// subspace (validated for independence).
std::vector<Fq> domain_basis(const CodeSpec& spec) {
  const FieldCtx& ctx = *spec.f.ctx;
  if (!spec.subspace_basis.has_value()) {
    std::vector<Fq> b(ctx.n());
    std::uint64_t ppow = 1;
    for (std::uint32_t i = 0; i < ctx.n(); ++i) {
      b[i] = static_cast<Fq>(ppow);
      ppow *= ctx.p();
    }
    return b;
  }
  const auto& b = *spec.subspace_basis;
  if (b.empty() || ctx.fp_rank(b) != b.size())
    throw Reject("RejectDependentConstraints",
                 "subspace basis must be GF(p)-independent");
  return b;
}

bool in_domain(const CodeSpec& spec, Fq beta) {
  if (!spec.subspace_basis.has_value()) return beta < spec.f.ctx->q();
  const FieldCtx& ctx = *spec.f.ctx;
  auto b = *spec.subspace_basis;
  const std::uint32_t r0 = ctx.fp_rank(b);
  b.push_back(beta);
  return ctx.fp_rank(b) == r0;
}

// Generator rows of the code (restricted to its coordinate set): the f row,
// one trace row per domain basis element, the all-one row when augmented.
std::vector<std::vector<std::uint8_t>> generator_rows(const CodeSpec& spec) {
  const FieldCtx& ctx = *spec.f.ctx;
  const std::uint64_t q = ctx.q();
  const std::uint64_t x0 = spec.kind == CodeKind::Punctured ? 1 : 0;
  const std::uint64_t len = spec.length();

  std::vector<std::vector<std::uint8_t>> rows;
  rows.emplace_back(len);
  for (std::uint64_t x = x0; x < q; ++x) rows[0][x - x0] = spec.f.values[x];
  for (Fq delta : domain_basis(spec)) {
    std::vector<std::uint8_t> row(len);
    for (std::uint64_t x = x0; x < q; ++x)
      row[x - x0] = static_cast<std::uint8_t>(
          ctx.trace_to_prime(ctx.mul(delta, static_cast<Fq>(x))));
    rows.push_back(std::move(row));
  }
  if (spec.kind == CodeKind::Augmented)
    rows.emplace_back(len, std::uint8_t(1));
  return rows;
}

std::uint32_t rows_rank(std::vector<std::vector<std::uint8_t>> rows,
                        std::uint32_t p) {
  const std::size_t len = rows.empty() ? 0 : rows[0].size();
  std::uint32_t rank = 0;
  for (std::size_t col = 0; col < len && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const std::uint32_t inv = mod_inverse(rows[rank][col], p);
    for (std::size_t i = col; i < len; ++i)
      rows[rank][i] = static_cast<std::uint8_t>(rows[rank][i] * inv % p);
    for (std::size_t other = rank + 1; other < rows.size(); ++other) {
      const std::uint32_t f = rows[other][col];
      if (!f) continue;
      for (std::size_t i = col; i < len; ++i)
        rows[other][i] = static_cast<std::uint8_t>(
            (rows[other][i] + (p - f) * rows[rank][i]) % p);
    }
    ++rank;
  }
  return rank;
}

void reject_affine(const WalshSpectrum& w) {
  const std::uint32_t p = w.p();
  const std::int64_t q = static_cast<std::int64_t>(w.q());
  for (std::uint64_t b = 0; b < w.q(); ++b)
    if (w.counts[b * p] == q)
      throw Reject("RejectAffineFunction",
                   "f coincides with Tr(omega x); the code degenerates");
}

struct TupleSpace {
  std::uint32_t p;
  std::vector<Fq> betas;  // domain elements, canonical order
  bool augmented;
  std::uint64_t count;  // p * |betas| * (augmented ? p : 1)

  // tuple id layout: ((alpha * nb) + beta_slot) * (aug ? p : 1) + c
  std::uint64_t id(std::uint32_t alpha, std::uint64_t beta_slot,
                   std::uint32_t c) const {
    std::uint64_t t = alpha * betas.size() + beta_slot;
    return augmented ? t * p + c : t;
  }
};

TupleSpace tuple_space(const CodeSpec& spec) {
  TupleSpace ts;
  ts.p = spec.f.ctx->p();
  ts.betas = beta_domain(spec);
  ts.augmented = spec.kind == CodeKind::Augmented;
  ts.count = std::uint64_t(ts.p) * ts.betas.size() * (ts.augmented ? ts.p : 1);
  return ts;
}

}  // namespace

std::vector<Fq> beta_domain(const CodeSpec& spec) {
  const FieldCtx& ctx = *spec.f.ctx;
  if (!spec.subspace_basis.has_value()) {
    std::vector<Fq> all(ctx.q());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  const auto basis = domain_basis(spec);
  const std::uint32_t p = ctx.p();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) size *= p;
  std::vector<Fq> out;
  out.reserve(size);
  for (std::uint64_t t = 0; t < size; ++t) {
    Fq acc = 0;
    std::uint64_t rest = t;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::uint32_t digit = rest % p;
      rest /= p;
      if (digit) acc = ctx.add(acc, ctx.scalar_mul(digit, basis[j]));
    }
    out.push_back(acc);
  }
  return out;
}

std::uint64_t WeightDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [w, m] : rows) t += m;
  return t;
}

std::string WeightDistribution::enumerator() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : rows) {
    if (!first) os << " + ";
    if (w == 0) os << m;
    else {
      if (m != 1) os << m;
      os << "z^" << w;
    }
    first = false;
  }
  return os.str();
}

std::vector<std::uint8_t> codeword(const CodeSpec& spec, std::uint32_t alpha,
                                   Fq beta, std::uint32_t c) {
  const FieldCtx& ctx = *spec.f.ctx;
  const std::uint32_t p = ctx.p();
  if (alpha >= p || c >= p)
    throw Reject("RejectBadScalar", "alpha and c must lie in GF(p)");
  if (c != 0 && spec.kind != CodeKind::Augmented)
    throw Reject("RejectCForNonAugmented", "c only exists for augmented codes");
  if (!in_domain(spec, beta))
    throw Reject("RejectBetaOutsideDomain", "beta not in the code's domain");

  const std::uint64_t q = ctx.q();
  const std::uint64_t x0 = spec.kind == CodeKind::Punctured ? 1 : 0;
  std::vector<std::uint8_t> word(spec.length());
  for (std::uint64_t x = x0; x < q; ++x) {
    const std::uint32_t fx = alpha * spec.f.values[x] % p;
    const std::uint32_t tr = ctx.trace_to_prime(ctx.mul(beta, static_cast<Fq>(x)));
    word[x - x0] = static_cast<std::uint8_t>((fx + 2 * p - tr - c) % p);
  }
  return word;
}

std::uint64_t weight_analytic(const CodeSpec& spec, const WalshSpectrum& w,
                              std::uint32_t alpha, Fq beta, std::uint32_t c) {
  const FieldCtx& ctx = *spec.f.ctx;
  const std::uint32_t p = ctx.p();
  const std::uint64_t q = ctx.q();
  if (c != 0 && spec.kind != CodeKind::Augmented)
    throw Reject("RejectCForNonAugmented", "c only exists for augmented codes");

  if (alpha == 0 && beta == 0)
    return (spec.kind == CodeKind::Augmented && c != 0) ? q : 0;
  if (alpha == 0) return q - q / p;

  const std::uint32_t ainv = mod_inverse(alpha, p);
  const CycInt wv = w.value(ctx.scalar_mul(ainv, beta));
  const CycInt u = spec.kind == CodeKind::Augmented
                       ? wv * CycInt::zeta(p, ainv * c % p)
                       : wv;
  CycInt orbit(p);
  for (std::uint32_t z = 1; z < p; ++z) orbit += u.sigma(z * alpha % p);
  std::int64_t r = 0;
  if (!orbit.is_rational(&r) || r % static_cast<std::int64_t>(p) != 0)
    throw Reject("AssertNonRationalOrbitSum",
                 "Galois-orbit sum is not a rational multiple of p");
  std::int64_t wt = static_cast<std::int64_t>(q) -
                    static_cast<std::int64_t>(q / p) - r / p;
  if (spec.kind == CodeKind::Punctured && alpha * spec.f.values[0] % p != 0)
    wt -= 1;
  return static_cast<std::uint64_t>(wt);
}

WeightDistribution weight_distribution(const CodeSpec& spec,
                                       const WalshSpectrum& w, int threads) {
  const FieldCtx& ctx = *spec.f.ctx;
  const std::uint32_t p = ctx.p();
  reject_affine(w);

  const TupleSpace ts = tuple_space(spec);
  const std::uint32_t k = rows_rank(generator_rows(spec), p);
  {
    std::uint64_t expect = 1;
    for (std::uint32_t i = 0; i < k; ++i) expect *= p;
    if (expect != ts.count)
      throw Reject("RejectDegenerateCode",
                   "generator rank does not match the parameter count");
  }

  const std::uint64_t nb = ts.betas.size();
  const std::uint64_t cvals = ts.augmented ? p : 1;
  const std::uint64_t total = ts.count;

  std::vector<std::map<std::uint64_t, std::uint64_t>> hist(
      chunk_count(total, threads));
  run_chunked(total, threads, [&](std::size_t chunk, std::uint64_t lo,
                                  std::uint64_t hi) {
    auto& h = hist[chunk];
    for (std::uint64_t t = lo; t < hi; ++t) {
      const std::uint32_t c = static_cast<std::uint32_t>(t % cvals);
      const std::uint64_t t2 = t / cvals;
      const Fq beta = ts.betas[t2 % nb];
      const std::uint32_t alpha = static_cast<std::uint32_t>(t2 / nb);
      ++h[weight_analytic(spec, w, alpha, beta, c)];
    }
  });

  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& h : hist)
    for (const auto& [wt, m] : h) merged[wt] += m;

  WeightDistribution dist;
  dist.p = p;
  dist.length = spec.length();
  dist.k = k;
  dist.rows.assign(merged.begin(), merged.end());
  if (dist.rows.empty() || dist.rows[0].first != 0 || dist.rows[0].second != 1)
    throw Reject("RejectInternal", "zero weight must appear exactly once");
  dist.w_min = dist.rows[1].first;
  dist.w_max = dist.rows.back().first;
  dist.d = dist.w_min;
  for (const auto& [wt, m] : dist.rows)
    if (wt > dist.length)
      throw Reject("RejectInternal", "weight exceeds code length");
  return dist;
}

std::vector<std::vector<std::uint8_t>> enumerate_codewords(const CodeSpec& spec) {
  const TupleSpace ts = tuple_space(spec);
  if (ts.count > (std::uint64_t(1) << 34) / std::max<std::uint64_t>(spec.length(), 1))
    throw Reject("RejectTooLargeForEnumeration",
                 "p^k * p^n exceeds the 2^34 work bound");
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(ts.count);
  const std::uint32_t cvals = ts.augmented ? ts.p : 1;
  for (std::uint32_t alpha = 0; alpha < ts.p; ++alpha)
    for (std::uint64_t bs = 0; bs < ts.betas.size(); ++bs)
      for (std::uint32_t c = 0; c < cvals; ++c)
        out.push_back(codeword(spec, alpha, ts.betas[bs], c));
  return out;
}

bool self_orthogonal_direct(const CodeSpec& spec) {
  const std::uint32_t p = spec.f.ctx->p();
  const auto rows = generator_rows(spec);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) {
      std::uint64_t dot = 0;
      for (std::size_t x = 0; x < rows[i].size(); ++x) {
        dot += rows[i][x] * rows[j][x];
        if ((x & 0xFFF) == 0xFFF) dot %= p;  // keep the accumulator small
      }
      if (dot % p != 0) return false;
    }
  return true;
}

bool so_criterion_binary(const WalshSpectrum& w, const std::vector<Fq>& domain) {
  if (w.p() != 2) throw Reject("RejectOddP", "mod-8 criterion needs p = 2");
  const std::int64_t w0 = w.value_int(0);
  for (Fq beta : domain) {
    const std::int64_t wb = w.value_int(beta);
    if ((wb + w0) % 8 != 0 || (wb - w0) % 8 != 0) return false;
  }
  return true;
}

bool so_criterion_odd(const WalshSpectrum& w, const std::vector<Fq>& domain,
                      bool augmented) {
  if (w.p() <= 3)
    throw Reject("RejectSmallP",
                 "cyclotomic-sum criterion needs p > 3; use the ternary "
                 "divisibility test for p = 3");
  for (Fq beta : domain) {
    const CriterionSums s = criterion_sums(w.value(beta));
    if (s.s2 != 0) return false;
    if (augmented && s.s1 != 0) return false;
  }
  return true;
}

bool so_criterion_ternary(const WeightDistribution& dist) {
  if (dist.p != 3)
    throw Reject("RejectNonTernary", "divisibility test is for p = 3");
  for (const auto& [wt, m] : dist.rows)
    if (wt % 3 != 0) return false;
  return true;
}

bool minimality_exact(const CodeSpec& spec, int threads) {
  const FieldCtx& ctx = *spec.f.ctx;
  const std::uint32_t p = ctx.p();
  const TupleSpace ts = tuple_space(spec);
  if (ts.count > (std::uint64_t(1) << 34) / std::max<std::uint64_t>(spec.length(), 1))
    throw Reject("RejectTooLargeForEnumeration",
                 "p^k * p^n exceeds the 2^34 work bound");

  // Projective representatives: parameter tuples whose first nonzero entry
  // (alpha, then beta digits, then c) equals 1. Scaling a tuple scales the
  // codeword, so one representative per scalar class suffices.
  const std::uint32_t cvals = ts.augmented ? p : 1;
  std::vector<std::vector<std::uint8_t>> reps;
  for (std::uint32_t alpha = 0; alpha < p; ++alpha)
    for (std::uint64_t bs = 0; bs < ts.betas.size(); ++bs)
      for (std::uint32_t c = 0; c < cvals; ++c) {
        std::uint32_t first = alpha;
        if (first == 0) {
          std::uint64_t rest = bs;
          while (rest && rest % p == 0) rest /= p;
          first = static_cast<std::uint32_t>(rest % p);
        }
        if (first == 0) first = c;
        if (first != 1) continue;
        reps.push_back(codeword(spec, alpha, ts.betas[bs], c));
      }

  const std::uint64_t nr = reps.size();
  const std::uint64_t len = spec.length();
  std::vector<std::uint64_t> wt(nr, 0);
  for (std::uint64_t i = 0; i < nr; ++i)
    for (std::uint64_t x = 0; x < len; ++x)
      if (reps[i][x]) ++wt[i];

  std::vector<std::uint8_t> bad(chunk_count(nr, threads), 0);
  run_chunked(nr, threads, [&](std::size_t chunk, std::uint64_t lo,
                               std::uint64_t hi) {
    std::vector<std::uint64_t> sumw(p, 0);
    for (std::uint64_t i = lo; i < hi && !bad[chunk]; ++i) {
      for (std::uint64_t j = i + 1; j < nr; ++j) {
        // weights of a + z b for z = 1..p-1 (shared between both orders)
        std::fill(sumw.begin(), sumw.end(), 0);
        for (std::uint64_t x = 0; x < len; ++x) {
          const std::uint32_t ax = reps[i][x], bx = reps[j][x];
          for (std::uint32_t z = 1; z < p; ++z)
            if ((ax + z * bx) % p != 0) ++sumw[z];
        }
        std::uint64_t s = 0;
        for (std::uint32_t z = 1; z < p; ++z) s += sumw[z];
        const std::int64_t lhs = static_cast<std::int64_t>(s);
        if (lhs == static_cast<std::int64_t>((p - 1) * wt[i]) -
                       static_cast<std::int64_t>(wt[j]) ||
            lhs == static_cast<std::int64_t>((p - 1) * wt[j]) -
                       static_cast<std::int64_t>(wt[i])) {
          bad[chunk] = 1;
          break;
        }
      }
    }
  });
  for (auto b : bad)
    if (b) return false;
  return true;
}

bool minimality_binary_walsh(const WalshSpectrum& w,
                             const std::vector<Fq>& domain) {
  if (w.p() != 2) throw Reject("RejectOddP", "Walsh criterion needs p = 2");
  const std::int64_t q = static_cast<std::int64_t>(w.q());
  std::unordered_map<std::int64_t, std::uint64_t> freq;
  for (Fq beta : domain) ++freq[w.value_int(beta)];
  for (const auto& [v, m] : freq) {
    const auto sum_partner = freq.find(q - v);
    if (sum_partner != freq.end() &&
        (sum_partner->first != v || sum_partner->second >= 2))
      return false;
    if (freq.count(v - q)) return false;  // difference pair; v-q != v always
  }
  return true;
}

AbStatus ab_condition(const WeightDistribution& dist) {
  // w_min/w_max > (p-1)/p  <=>  p*w_min > (p-1)*w_max, exactly in integers.
  const std::uint64_t lhs = dist.p * dist.w_min;
  const std::uint64_t rhs = (dist.p - 1) * dist.w_max;
  if (lhs > rhs) return AbStatus::Satisfies;
  return lhs == rhs ? AbStatus::Boundary : AbStatus::Violates;
}

BoundsReport bounds_check(const WeightDistribution& dist) {
  if (dist.d == 0)
    throw Reject("RejectDegenerateDistribution", "minimum distance is zero");
  BoundsReport r;
  std::uint64_t qi = 1;
  for (std::uint32_t i = 0; i < dist.k; ++i) {
    r.griesmer_sum += (dist.d + qi - 1) / qi;
    if (qi > dist.d) qi = dist.d + 1;  // further terms are all 1
    else qi *= dist.p;
  }
  r.griesmer_met = dist.length == r.griesmer_sum;
  r.singleton_defect = static_cast<std::int64_t>(dist.length) - dist.k + 1 -
                       static_cast<std::int64_t>(dist.d);
  return r;
}

DivisibilityReport divisibility(const WeightDistribution& dist) {
  DivisibilityReport r;
  for (const auto& [wt, m] : dist.rows)
    if (wt) r.delta = std::gcd(r.delta, wt);
  if (dist.p == 2) {
    if (r.delta % 4 == 0) r.parity = BinaryParity::DoublyEven;
    else if (r.delta % 2 == 0) r.parity = BinaryParity::SinglyEven;
    else r.parity = BinaryParity::Odd;
  }
  return r;
}

AnalysisReport analyze(const CodeSpec& spec, int threads) {
  const FieldCtx& ctx = *spec.f.ctx;
  const std::uint32_t p = ctx.p();
  const WalshSpectrum w = walsh_transform(spec.f);
  reject_affine(w);

  AnalysisReport r;
  r.dist = weight_distribution(spec, w, threads);
  r.length = r.dist.length;
  r.dimension = r.dist.k;
  r.min_distance = r.dist.d;

  r.so_direct = self_orthogonal_direct(spec);
  const auto domain = beta_domain(spec);
  if (p == 2) {
    // The mod-8 criterion speaks about the code with the x = 0 coordinate
    // present; it transfers to the punctured code only when f(0) = 0.
    if (spec.kind != CodeKind::Augmented &&
        (spec.kind == CodeKind::Full || spec.f.values[0] == 0)) {
      r.so_criterion = so_criterion_binary(w, domain);
      r.criterion_name = "walsh-mod8";
    } else {
      r.criterion_name = "n/a";
    }
  } else if (p == 3) {
    r.so_criterion = so_criterion_ternary(r.dist);
    r.criterion_name = "ternary-divisibility";
  } else {
    if (spec.kind == CodeKind::Augmented ||
        spec.kind == CodeKind::Full || spec.f.values[0] == 0) {
      r.so_criterion =
          so_criterion_odd(w, domain, spec.kind == CodeKind::Augmented);
      r.criterion_name = "cyclotomic-sums";
    } else {
      r.criterion_name = "n/a";
    }
  }

  const TupleSpace ts = tuple_space(spec);
  if (ts.count * spec.length() <= (std::uint64_t(1) << 20)) {
    r.minimal = minimality_exact(spec, threads);
    r.minimal_method = "exact";
  } else if (p == 2 && spec.kind == CodeKind::Punctured) {
    r.minimal = minimality_binary_walsh(w, domain);
    r.minimal_method = "walsh";
  } else {
    r.minimal = ab_condition(r.dist) == AbStatus::Satisfies;
    r.minimal_method = "ab";
  }

  r.ab = ab_condition(r.dist);
  r.ab_violating = r.minimal && r.ab != AbStatus::Satisfies;
  r.div = divisibility(r.dist);
  r.bounds = bounds_check(r.dist);
  if (spec.f.meta.rfind("fa:", 0) == 0)
    r.assumptions.push_back("rf-membership-of-dual-unverified");
  return r;
}

std::string report_to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["params"] = {r.length, r.dimension, r.min_distance};
  j["length"] = r.length;
  nlohmann::json weights = nlohmann::json::array();
  for (const auto& [wt, m] : r.dist.rows) weights.push_back({wt, m});
  j["weights"] = weights;
  j["self_orthogonal"] = {
      {"direct", r.so_direct},
      {"criterion", r.so_criterion.has_value() ? nlohmann::json(*r.so_criterion)
                                               : nlohmann::json(nullptr)},
      {"criterion_name", r.criterion_name},
  };
  j["minimal"] = {{"verdict", r.minimal}, {"method", r.minimal_method}};
  switch (r.ab) {
    case AbStatus::Satisfies: j["ab"] = "satisfies"; break;
    case AbStatus::Boundary: j["ab"] = "boundary"; break;
    case AbStatus::Violates: j["ab"] = "violates"; break;
  }
  j["divisibility"] = r.div.delta;
  switch (r.div.parity) {
    case BinaryParity::DoublyEven: j["parity"] = "doubly-even"; break;
    case BinaryParity::SinglyEven: j["parity"] = "singly-even"; break;
    case BinaryParity::Odd: j["parity"] = "odd"; break;
    case BinaryParity::NA: j["parity"] = "n/a"; break;
  }
  j["griesmer"] = {{"sum", r.bounds.griesmer_sum}, {"met", r.bounds.griesmer_met}};
  j["singleton_defect"] = r.bounds.singleton_defect;
  j["assumptions"] = r.assumptions;
  return j.dump(2);
}

std::string weights_to_csv(const WeightDistribution& dist) {
  std::ostringstream os;
  os << "weight,multiplicity\n";
  for (const auto& [wt, m] : dist.rows) os << wt << "," << m << "\n";
  return os.str();
}

}  // namespace socode
