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

#include "socode/search.hpp"

#include <algorithm>

#include "socode/parallel.hpp"
#include "socode/walsh.hpp"

namespace socode {

namespace {

void check_budget(const SearchOptions& opt) {
  if (opt.budget == 0)
    throw Reject("RejectZeroBudget", "budget must be at least 1");
  if (opt.budget > SearchOptions::kMaxBudget)
    throw Reject("RejectBudgetTooLarge", "budget exceeds the 2^28 work cap");
}

}  // namespace

SearchResult<TripleCert> run(const TripleLambdaTask& task,
                             const SearchOptions& opt) {
  check_budget(opt);
  const FieldCtx& ctx = *task.ctx;
  if (ctx.p() != 2 || ctx.n() % 2 != 0)
    throw Reject("RejectOddDegree", "triple search needs GF(2^{2m})");
  if (task.target_wt != 3 && task.target_wt != 4)
    throw Reject("RejectBadTarget", "target weight must be 3 or 4");
  const std::uint32_t m = ctx.n() / 2;
  const std::uint64_t order = (std::uint64_t(1) << m) - 1;  // |GF(2^m)*|
  const std::uint64_t sub_step = (ctx.q() - 1) / order;     // 2^m + 1

  auto lam = [&](std::uint64_t e) {
    return ctx.gpow(static_cast<std::int64_t>(((e + opt.seed) % order) * sub_step));
  };
  auto examine = [&](std::uint64_t e1, std::uint64_t e2, std::uint64_t e3,
                     std::vector<TripleCert>& out) {
    const Fq l1 = lam(e1), l2 = lam(e2), l3 = lam(e3);
    if (ctx.fp_rank({l1, l2, l3}) != 3) return;
    const TVector t = compute_t_vector(ctx, l1, l2, l3);
    if (t.weight() != task.target_wt) return;
    if (!inverse_set_rank_ok(ctx, l1, l2, l3)) return;
    out.push_back(TripleCert{e1, e2, e3, l1, l2, l3, t, std::uint32_t(t.weight() + 3)});
  };

  // Candidate blocks by e1; block e1 holds C(order - 1 - e1, 2) tuples.
  std::vector<std::uint64_t> block_start(order + 1, 0);
  for (std::uint64_t e1 = 0; e1 < order; ++e1) {
    const std::uint64_t rest = order - 1 - e1;
    block_start[e1 + 1] = block_start[e1] + rest * (rest - 1) / 2;
  }
  const std::uint64_t total = std::min<std::uint64_t>(block_start[order], opt.budget);

  const std::uint64_t nchunks = chunk_count(order, opt.threads);
  std::vector<std::vector<TripleCert>> parts(nchunks);
  run_chunked(order, opt.threads, [&](std::size_t chunk, std::uint64_t lo,
                                      std::uint64_t hi) {
    auto& out = parts[chunk];
    for (std::uint64_t e1 = lo; e1 < hi; ++e1) {
      std::uint64_t idx = block_start[e1];
      if (idx >= total) return;
      for (std::uint64_t e2 = e1 + 1; e2 < order && idx < total; ++e2)
        for (std::uint64_t e3 = e2 + 1; e3 < order && idx < total; ++e3, ++idx)
          examine(e1, e2, e3, out);
    }
  });

  SearchResult<TripleCert> res;
  res.candidates_examined = total;
  res.exhausted_budget = total < block_start[order];
  for (auto& part : parts)
    for (auto& c : part) res.found.push_back(std::move(c));

  // Re-validation from scratch.
  for (const auto& c : res.found) {
    const TVector t = compute_t_vector(ctx, c.l1, c.l2, c.l3);
    if (t.weight() != task.target_wt || !inverse_set_rank_ok(ctx, c.l1, c.l2, c.l3))
      throw Reject("RejectInternal", "certificate failed re-validation");
  }
  return res;
}

SearchResult<WPairCert> run(const WPairTask& task, const SearchOptions& opt) {
  check_budget(opt);
  const FieldCtx& ctx = *task.ctx;
  if (ctx.p() != 2 || ctx.n() % 2 != 0)
    throw Reject("RejectOddDegree", "w-pair search needs GF(2^{2m})");
  if (ctx.inv(ctx.add(task.l1, task.l2)) ==
      ctx.add(ctx.inv(task.l1), ctx.inv(task.l2)))
    throw Reject("RejectInverseIdentityHolds",
                 "(l1+l2)^-1 = l1^-1 + l2^-1 is excluded");

  const std::uint64_t order = ctx.q() - 1;
  std::uint64_t used = 0;

  // Phase 1: admissible singles, ascending exponent from the seed.
  const std::uint64_t single_budget = std::min<std::uint64_t>(order, opt.budget);
  const std::uint64_t nchunks = chunk_count(single_budget, opt.threads);
  std::vector<std::vector<Fq>> single_parts(nchunks);
  run_chunked(single_budget, opt.threads, [&](std::size_t chunk,
                                              std::uint64_t lo,
                                              std::uint64_t hi) {
    for (std::uint64_t j = lo; j < hi; ++j) {
      const Fq w = ctx.gpow(static_cast<std::int64_t>((j + opt.seed) % order));
      if (w_condition_check(ctx, task.l1, task.l2, w))
        single_parts[chunk].push_back(w);
    }
  });
  used += single_budget;
  std::vector<Fq> singles;
  for (const auto& part : single_parts)
    singles.insert(singles.end(), part.begin(), part.end());

  // Phase 2: pairs in lexicographic order of single positions; the sum
  // w1 + w2 must pass the same predicate.
  SearchResult<WPairCert> res;
  bool out_of_budget = used >= opt.budget && singles.size() >= 2;
  for (std::size_t i = 0; i < singles.size() && used < opt.budget; ++i) {
    for (std::size_t j = i + 1; j < singles.size(); ++j) {
      if (used >= opt.budget) { out_of_budget = true; break; }
      ++used;
      const Fq w3 = ctx.add(singles[i], singles[j]);
      if (w3 == 0) continue;
      if (w_condition_check(ctx, task.l1, task.l2, w3))
        res.found.push_back(WPairCert{singles[i], singles[j]});
    }
  }
  res.candidates_examined = used;
  res.exhausted_budget = out_of_budget || single_budget < order;

  for (const auto& c : res.found) {
    if (!w_condition_check(ctx, task.l1, task.l2, c.w1) ||
        !w_condition_check(ctx, task.l1, task.l2, c.w2) ||
        !w_condition_check(ctx, task.l1, task.l2, ctx.add(c.w1, c.w2)))
      throw Reject("RejectInternal", "certificate failed re-validation");
  }
  return res;
}

SearchResult<PlateauedCert> run(const PlateauedQuadTask& task,
                                const SearchOptions& opt) {
  check_budget(opt);
  const FieldCtx& ctx = *task.ctx;
  if (ctx.p() == 2)
    throw Reject("RejectCharTwo", "plateaued-quadratic search needs odd p");
  const std::uint32_t nterms = ctx.n() / 2 + 1;  // exponents x^{p^i+1}, i <= n/2
  const std::uint64_t order = ctx.q() - 1;

  std::uint64_t space = 1;
  bool overflow = false;
  for (std::uint32_t i = 0; i < nterms; ++i) {
    if (space > SearchOptions::kMaxBudget) { overflow = true; break; }
    space *= order;
  }
  const std::uint64_t total =
      overflow ? opt.budget : std::min<std::uint64_t>(space, opt.budget);

  auto examine = [&](std::uint64_t idx, std::vector<PlateauedCert>& out) {
    std::vector<std::uint64_t> exps(nterms);
    std::uint64_t rest = idx;
    for (std::uint32_t i = nterms; i-- > 0;) {
      exps[i] = (rest % order + opt.seed) % order;
      rest /= order;
    }
    std::vector<std::pair<Fq, std::uint32_t>> coeffs;
    for (std::uint32_t i = 0; i < nterms; ++i)
      coeffs.emplace_back(ctx.gpow(static_cast<std::int64_t>(exps[i])), i);
    const PAryFunction f = quadratic_form(task.ctx, coeffs);
    const PlateauedProfile prof = classify(walsh_transform(f));
    if (!prof.plateaued || !prof.weakly_regular) return;
    if (prof.s != task.s_target) return;
    if (task.require_unbalanced && prof.balanced) return;
    PlateauedCert c;
    c.exps = std::move(exps);
    for (const auto& [cf, i] : coeffs) c.coeffs.push_back(cf);
    c.s = prof.s;
    c.epsilon = prof.epsilon;
    c.balanced = prof.balanced;
    out.push_back(std::move(c));
  };

  const std::uint64_t nchunks = chunk_count(total, opt.threads);
  std::vector<std::vector<PlateauedCert>> parts(nchunks);
  run_chunked(total, opt.threads, [&](std::size_t chunk, std::uint64_t lo,
                                      std::uint64_t hi) {
    for (std::uint64_t idx = lo; idx < hi; ++idx) examine(idx, parts[chunk]);
  });

  SearchResult<PlateauedCert> res;
  res.candidates_examined = total;
  res.exhausted_budget = overflow || total < space;
  for (auto& part : parts)
    for (auto& c : part) res.found.push_back(std::move(c));

  for (const auto& c : res.found) {
    std::vector<std::pair<Fq, std::uint32_t>> coeffs;
    for (std::uint32_t i = 0; i < nterms; ++i) coeffs.emplace_back(c.coeffs[i], i);
    const PlateauedProfile prof =
        classify(walsh_transform(quadratic_form(task.ctx, coeffs)));
    if (!prof.plateaued || !prof.weakly_regular || prof.s != task.s_target ||
        (task.require_unbalanced && prof.balanced))
      throw Reject("RejectInternal", "certificate failed re-validation");
  }
  return res;
}

}  // namespace socode
