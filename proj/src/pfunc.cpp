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

#include "socode/pfunc.hpp"

#include <string>

#include "socode/walsh.hpp"

namespace socode {

namespace {

// Checks n = 2m and that lambda is a nonzero element of GF(p^m).
std::uint32_t check_subfield_lambda(const FieldCtx& ctx, Fq lambda,
                                    const char* who) {
  if (ctx.n() % 2 != 0)
    throw Reject("RejectOddDegree", std::string(who) + " needs n = 2m");
  const std::uint32_t m = ctx.n() / 2;
  if (lambda == 0)
    throw Reject("RejectZeroLambda", std::string(who) + " needs lambda != 0");
  if (!ctx.in_subfield(m, lambda))
    throw Reject("RejectLambdaOutsideSubfield",
                 std::string(who) + " needs lambda in GF(p^m)");
  return m;
}

void check_independent_triple(const FieldCtx& ctx, Fq l1, Fq l2, Fq l3) {
  if (l1 == 0 || l2 == 0 || l3 == 0)
    throw Reject("RejectZeroLambda", "lambdas must be nonzero");
  if (ctx.fp_rank({l1, l2, l3}) != 3)
    throw Reject("RejectDependentLambdas",
                 "lambdas must be GF(p)-independent");
}

}  // namespace

PAryFunction function_from_table(FieldPtr ctx, std::vector<std::uint8_t> values,
                                 std::string meta) {
  if (values.size() != ctx->q())
    throw Reject("RejectBadTable", "value table must have length p^n");
  for (auto v : values)
    if (v >= ctx->p()) throw Reject("RejectBadTable", "value out of range");
  return PAryFunction{std::move(ctx), std::move(values), std::move(meta)};
}

PAryFunction monomial_bent(FieldPtr ctx, Fq lambda) {
  const std::uint32_t m = check_subfield_lambda(*ctx, lambda, "monomial_bent");
  const std::uint64_t q = ctx->q();
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) pm *= ctx->p();
  std::vector<std::uint8_t> vals(q, 0);
  for (std::uint64_t x = 1; x < q; ++x) {
    const Fq y = ctx->pow(static_cast<Fq>(x), pm + 1);
    vals[x] = static_cast<std::uint8_t>(
        ctx->subfield_trace_to_prime(m, ctx->mul(lambda, y)));
  }
  return PAryFunction{std::move(ctx), std::move(vals),
                      "gl:l=" + std::to_string(lambda)};
}

PAryFunction triple_product(FieldPtr ctx, Fq l1, Fq l2, Fq l3) {
  if (ctx->p() != 2)
    throw Reject("RejectNotBinary", "triple_product is a Boolean construction");
  const std::uint32_t m = check_subfield_lambda(*ctx, l1, "triple_product");
  check_subfield_lambda(*ctx, l2, "triple_product");
  check_subfield_lambda(*ctx, l3, "triple_product");
  if (m < 3)
    throw Reject("RejectOddDegree", "triple_product needs n = 2m >= 6");
  check_independent_triple(*ctx, l1, l2, l3);

  const std::uint64_t q = ctx->q();
  const std::uint64_t e = (std::uint64_t(1) << m) + 1;
  std::vector<std::uint8_t> vals(q, 0);
  for (std::uint64_t x = 1; x < q; ++x) {
    const Fq y = ctx->pow(static_cast<Fq>(x), e);
    const std::uint32_t a = ctx->subfield_trace_to_prime(m, ctx->mul(l1, y));
    if (!a) continue;
    const std::uint32_t b = ctx->subfield_trace_to_prime(m, ctx->mul(l2, y));
    if (!b) continue;
    vals[x] = static_cast<std::uint8_t>(
        ctx->subfield_trace_to_prime(m, ctx->mul(l3, y)));
  }
  return PAryFunction{std::move(ctx), std::move(vals),
                      "tripleprod:l1=" + std::to_string(l1) +
                          ",l2=" + std::to_string(l2) +
                          ",l3=" + std::to_string(l3)};
}

TVector compute_t_vector(const FieldCtx& ctx, Fq l1, Fq l2, Fq l3) {
  check_independent_triple(ctx, l1, l2, l3);
  const Fq s12 = ctx.add(l1, l2), s13 = ctx.add(l1, l3), s23 = ctx.add(l2, l3);
  const Fq s123 = ctx.add(s12, l3);
  const Fq i1 = ctx.inv(l1), i2 = ctx.inv(l2), i3 = ctx.inv(l3);
  TVector t{};
  t.t1 = ctx.inv(s123) != ctx.add(ctx.add(i1, i2), i3);
  t.t2 = ctx.inv(s12) != ctx.add(i1, i2);  // pair (1,2)
  t.t3 = ctx.inv(s13) != ctx.add(i1, i3);  // pair (1,3)
  t.t4 = ctx.inv(s23) != ctx.add(i2, i3);  // pair (2,3)
  // Independent triples always give t1 = 1 and weight >= 3; anything else
  // means the inputs are corrupt.
  if (!t.t1 || t.weight() < 3)
    throw Reject("RejectTVectorContract",
                 "independent triple produced t1 = 0 or wt < 3");
  return t;
}

bool inverse_set_rank_ok(const FieldCtx& ctx, Fq l1, Fq l2, Fq l3) {
  const TVector t = compute_t_vector(ctx, l1, l2, l3);
  const std::vector<Fq> inv = {
      ctx.inv(l1),
      ctx.inv(l2),
      ctx.inv(l3),
      ctx.inv(ctx.add(l1, l3)),
      ctx.inv(ctx.add(l1, l2)),
      ctx.inv(ctx.add(l2, l3)),
      ctx.inv(ctx.add(ctx.add(l1, l2), l3)),
  };
  return ctx.fp_rank(inv) == static_cast<std::uint32_t>(t.weight() + 3);
}

bool w_condition_check(const FieldCtx& ctx, Fq l1, Fq l2, Fq w) {
  const std::uint32_t m = ctx.n() / 2;
  const Fq l3 = ctx.add(l1, l2);
  const Fq i1 = ctx.inv(l1), i2 = ctx.inv(l2), i3 = ctx.inv(l3);
  const Fq mus[7] = {
      l1,
      l2,
      l3,
      ctx.inv(ctx.add(i1, i2)),
      ctx.inv(ctx.add(i1, i3)),
      ctx.inv(ctx.add(i2, i3)),
      ctx.inv(ctx.add(ctx.add(i1, i2), i3)),
  };
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) pm *= ctx.p();
  const Fq y = ctx.pow(w, pm + 1);
  for (Fq mu : mus)
    if (ctx.subfield_trace_to_prime(m, ctx.mul(mu, y)) != 0) return false;
  return true;
}

PAryFunction singly_even_function(FieldPtr ctx, Fq l1, Fq l2, Fq w1, Fq w2) {
  if (ctx->p() != 2)
    throw Reject("RejectNotBinary", "singly_even_function is Boolean");
  const std::uint32_t m = check_subfield_lambda(*ctx, l1, "singly_even_function");
  check_subfield_lambda(*ctx, l2, "singly_even_function");
  if (m < 3)
    throw Reject("RejectOddDegree", "singly_even_function needs n = 2m >= 6");
  if (ctx->fp_rank({l1, l2}) != 2)
    throw Reject("RejectDependentLambdas", "l1, l2 must be independent");
  if (ctx->inv(ctx->add(l1, l2)) == ctx->add(ctx->inv(l1), ctx->inv(l2)))
    throw Reject("RejectInverseIdentityHolds",
                 "(l1+l2)^-1 = l1^-1 + l2^-1 is excluded");
  if (w1 == 0 || w2 == 0 || w1 == w2)
    throw Reject("RejectWConditionFails", "w1, w2 must be distinct nonzero");
  if (!w_condition_check(*ctx, l1, l2, w1) ||
      !w_condition_check(*ctx, l1, l2, w2) ||
      !w_condition_check(*ctx, l1, l2, ctx->add(w1, w2)))
    throw Reject("RejectWConditionFails",
                 "trace conditions fail for w1, w2 or w1+w2");

  const std::uint64_t q = ctx->q();
  const std::uint64_t e = (std::uint64_t(1) << m) + 1;
  std::vector<std::uint8_t> vals(q, 0);
  for (std::uint64_t x = 1; x < q; ++x) {
    const Fq y = ctx->pow(static_cast<Fq>(x), e);
    const std::uint32_t a = ctx->subfield_trace_to_prime(m, ctx->mul(l1, y));
    if (a)
      vals[x] = static_cast<std::uint8_t>(
          ctx->subfield_trace_to_prime(m, ctx->mul(l2, y)));
  }
  vals[w1] ^= 1;
  vals[w2] ^= 1;
  return PAryFunction{std::move(ctx), std::move(vals),
                      "singlyeven:l1=" + std::to_string(l1) + ",l2=" +
                          std::to_string(l2) + ",w1=" + std::to_string(w1) +
                          ",w2=" + std::to_string(w2)};
}

PAryFunction f_t_function(FieldPtr ctx, std::uint32_t t) {
  if (ctx->p() == 2) throw Reject("RejectCharTwo", "f_t needs odd p");
  if (t == 0 || t >= ctx->p()) throw Reject("RejectZeroT", "t must be in GF(p)*");
  const std::uint64_t q = ctx->q();
  std::vector<std::uint8_t> vals(q);
  vals[0] = static_cast<std::uint8_t>(t);
  for (std::uint64_t x = 1; x < q; ++x)
    vals[x] = ctx->quad_char(static_cast<Fq>(x)) == 1
                  ? 1
                  : static_cast<std::uint8_t>(ctx->p() - 1);
  return PAryFunction{std::move(ctx), std::move(vals),
                      "ftee:t=" + std::to_string(t)};
}

PAryFunction f_a_from_plateaued(const PAryFunction& f, std::uint32_t a) {
  const FieldCtx& ctx = *f.ctx;
  if (ctx.p() == 2) throw Reject("RejectCharTwo", "f_a needs odd p");
  if (a == 0 || a >= ctx.p()) throw Reject("RejectZeroA", "a must be in GF(p)*");

  const PlateauedProfile prof = classify(walsh_transform(f));
  if (!prof.plateaued || !prof.weakly_regular)
    throw Reject("RejectNotWeaklyRegular",
                 "base is not a weakly regular plateaued function");
  if (prof.balanced)
    throw Reject("RejectBalancedBase", "base must be unbalanced (W(0) != 0)");

  std::vector<std::uint8_t> vals(f.values.size());
  for (std::size_t x = 0; x < vals.size(); ++x) {
    const std::uint32_t v = f.values[x];
    vals[x] = v == 0 ? 0 : static_cast<std::uint8_t>((v + a) % ctx.p());
  }
  return PAryFunction{f.ctx, std::move(vals),
                      "fa:a=" + std::to_string(a) + ";" + f.meta};
}

PAryFunction quadratic_form(FieldPtr ctx,
                            const std::vector<std::pair<Fq, std::uint32_t>>& coeffs) {
  bool any = false;
  for (const auto& [c, i] : coeffs) {
    if (i >= ctx->n())
      throw Reject("RejectBadExponent", "exponent index must be < n");
    if (c != 0) any = true;
  }
  if (!any) throw Reject("RejectAllZero", "all coefficients are zero");

  const std::uint64_t q = ctx->q();
  std::vector<std::uint64_t> exps;
  exps.reserve(coeffs.size());
  for (const auto& [c, i] : coeffs) {
    std::uint64_t pi = 1;
    for (std::uint32_t j = 0; j < i; ++j) pi *= ctx->p();
    exps.push_back(pi + 1);
  }
  std::vector<std::uint8_t> vals(q, 0);
  for (std::uint64_t x = 1; x < q; ++x) {
    Fq acc = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k].first == 0) continue;
      acc = ctx->add(acc, ctx->mul(coeffs[k].first,
                                   ctx->pow(static_cast<Fq>(x), exps[k])));
    }
    vals[x] = static_cast<std::uint8_t>(ctx->trace_to_prime(acc));
  }
  std::string meta = "quad:";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k) meta += ",";
    meta += std::to_string(coeffs[k].first) + "@" + std::to_string(coeffs[k].second);
  }
  return PAryFunction{std::move(ctx), std::move(vals), std::move(meta)};
}

}  // namespace socode
