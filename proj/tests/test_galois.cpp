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

#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "socode/descriptor.hpp"
#include "socode/galois.hpp"

using namespace socode;
using socode::testing::Rng;

namespace {

bool throws_kind(const std::function<void()>& fn, const std::string& kind) {
  try {
    fn();
  } catch (const Reject& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("paper fields construct and x is primitive in each") {
  for (const char* name : {"gf2_12", "gf2_14", "gf2_16", "gf3_4", "gf3_5"}) {
    FieldPtr ctx = parse_field(name);
    CHECK(ctx->primitive_element() == ctx->p());
    CHECK(ctx->element_order(ctx->primitive_element()) == ctx->q() - 1);
  }
}

TEST_CASE("build_field rejects bad inputs") {
  // (x+1)^2 = x^2 + 1 over GF(2)
  CHECK(throws_kind([] { FieldCtx::build(2, 2, {1, 0, 1}); },
                    "RejectReducibleModulus"));
  // x has order 5 modulo x^4+x^3+x^2+x+1, not 15
  CHECK(throws_kind([] { FieldCtx::build(2, 4, {1, 1, 1, 1, 1}, 2); },
                    "RejectNonPrimitive"));
  // 2^25 exceeds the table cap
  CHECK(throws_kind(
      [] {
        std::vector<std::uint8_t> mod(26, 0);
        mod[0] = mod[3] = mod[25] = 1;
        FieldCtx::build(2, 25, mod);
      },
      "RejectTooLarge"));
  CHECK(throws_kind([] { FieldCtx::build(4, 2, {1, 1, 1}); }, "RejectNotPrime"));
}

TEST_CASE("basic arithmetic round-trips") {
  FieldPtr ctx = FieldCtx::build(3, 3, {1, 2, 0, 1});  // x^3 + 2x + 1
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Fq a = static_cast<Fq>(rng.below(ctx->q()));
    const Fq b = static_cast<Fq>(rng.below(ctx->q()));
    CHECK(ctx->add(a, ctx->neg(a)) == 0);
    CHECK(ctx->from_coeffs(ctx->coeffs(a)) == a);
    if (a) CHECK(ctx->mul(a, ctx->inv(a)) == 1);
    CHECK(ctx->mul(a, b) == ctx->mul(b, a));
    if (a && b)
      CHECK(ctx->log(ctx->mul(a, b)) ==
            (ctx->log(a) + ctx->log(b)) % (ctx->q() - 1));
  }
}

TEST_CASE("trace basics: GF(4), zero, additivity, Frobenius fixing") {
  FieldPtr gf4 = FieldCtx::build(2, 2, {1, 1, 1});
  // Tr(xi) = xi + xi^2 = 1 for the class of x
  CHECK(gf4->trace_to_prime(2) == 1);
  CHECK(gf4->trace_to_prime(0) == 0);

  FieldPtr ctx = FieldCtx::build(2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1});
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Fq x = static_cast<Fq>(rng.below(ctx->q()));
    const Fq y = static_cast<Fq>(rng.below(ctx->q()));
    CHECK(ctx->trace_to_prime(ctx->add(x, y)) ==
          (ctx->trace_to_prime(x) + ctx->trace_to_prime(y)) % 2);
    const Fq t = ctx->trace_to_subfield(1, x);
    CHECK(ctx->frobenius(t) == t);
    CHECK(t == ctx->trace_to_prime(x));  // table agrees with the power sum
  }
  CHECK(throws_kind([&] { ctx->trace_to_subfield(3, 1); }, "RejectNonDivisor"));
}

TEST_CASE("trace transitivity Tr_1^n = Tr_1^k o Tr_k^n, exhaustive") {
  struct Case {
    std::uint32_t p, n;
    std::vector<std::uint8_t> mod;
  };
  const std::vector<Case> cases = {
      {2, 6, {1, 1, 0, 0, 0, 0, 1}},  // x^6 + x + 1
      {3, 6, {2, 1, 0, 0, 0, 0, 1}},  // x^6 + x + 2
      {2, 4, {1, 1, 0, 0, 1}},        // x^4 + x + 1
  };
  for (const auto& c : cases) {
    FieldPtr ctx = FieldCtx::build(c.p, c.n, c.mod);
    for (std::uint32_t k = 1; k <= c.n; ++k) {
      if (c.n % k) continue;
      for (std::uint64_t x = 0; x < ctx->q(); ++x) {
        const Fq rel = ctx->trace_to_subfield(k, static_cast<Fq>(x));
        CHECK(ctx->in_subfield(k, rel));
        CHECK(ctx->subfield_trace_to_prime(k, rel) ==
              ctx->trace_to_prime(static_cast<Fq>(x)));
      }
    }
  }
}

TEST_CASE("quadratic character: values, multiplicativity, rejection") {
  FieldPtr gf3 = FieldCtx::build(3, 1, {1, 1});  // x + 1
  CHECK(quad_char_mod(3, 1) == 1);
  CHECK(quad_char_mod(3, -1) == -1);
  CHECK(quad_char_mod(5, -1) == 1);  // 2^2 = 4 = -1 mod 5
  CHECK(gf3->quad_char(0) == 0);

  FieldPtr ctx = FieldCtx::build(5, 2, {2, 1, 1});  // x^2 + x + 2
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Fq a = static_cast<Fq>(1 + rng.below(ctx->q() - 1));
    const Fq b = static_cast<Fq>(1 + rng.below(ctx->q() - 1));
    CHECK(ctx->quad_char(ctx->mul(a, b)) ==
          ctx->quad_char(a) * ctx->quad_char(b));
  }
  FieldPtr gf8 = FieldCtx::build(2, 3, {1, 1, 0, 1});
  CHECK(throws_kind([&] { gf8->quad_char(3); }, "RejectCharTwo"));
}

TEST_CASE("quadratic equation criterion over GF(2^m)") {
  // x^2 + ax + b solvable iff Tr(b / a^2) = 0, against exhaustive root
  // search on random coefficient pairs.
  std::vector<FieldPtr> fields = {
      FieldCtx::build(2, 3, {1, 1, 0, 1}),
      FieldCtx::build(2, 6, {1, 1, 0, 0, 0, 0, 1}),
      parse_field("gf2_12"),
  };
  for (const auto& ctx : fields) {
    Rng rng(17 + ctx->n());
    for (int trial = 0; trial < 40; ++trial) {
      const Fq a = static_cast<Fq>(1 + rng.below(ctx->q() - 1));
      const Fq b = static_cast<Fq>(rng.below(ctx->q()));
      bool has_root = false;
      for (std::uint64_t x = 0; x < ctx->q() && !has_root; ++x) {
        const Fq xx = static_cast<Fq>(x);
        has_root =
            ctx->add(ctx->add(ctx->mul(xx, xx), ctx->mul(a, xx)), b) == 0;
      }
      const Fq ratio = ctx->mul(b, ctx->inv(ctx->mul(a, a)));
      CHECK(has_root == (ctx->trace_to_prime(ratio) == 0));
    }
  }
}

TEST_CASE("character sum over quadratic polynomials mod p") {
  // sum_x eta_0(a2 x^2 + a1 x + a0) is -eta_0(a2) when the discriminant is
  // nonzero and (p-1) eta_0(a2) when it vanishes; exhaustive in the triples.
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (std::uint32_t a2 = 1; a2 < p; ++a2)
      for (std::uint32_t a1 = 0; a1 < p; ++a1)
        for (std::uint32_t a0 = 0; a0 < p; ++a0) {
          int sum = 0;
          for (std::uint32_t x = 0; x < p; ++x)
            sum += quad_char_mod(p, (a2 * x * x + a1 * x + a0) % p);
          const std::uint32_t d = (a1 * a1 % p + p * p - 4 * a0 * a2 % p) % p;
          const int expected = d != 0 ? -quad_char_mod(p, a2)
                                      : int(p - 1) * quad_char_mod(p, a2);
          CHECK(sum == expected);
        }
  }
}

TEST_CASE("fp_rank basics and mixed-context rejection") {
  FieldPtr ctx = FieldCtx::build(2, 4, {1, 1, 0, 0, 1});
  CHECK(ctx->fp_rank({0}) == 0);
  const Fq xi = ctx->primitive_element();
  const Fq xi2 = ctx->mul(xi, xi);
  CHECK(ctx->fp_rank({xi, xi2, ctx->add(xi, xi2)}) == 2);

  FieldPtr other = FieldCtx::build(2, 3, {1, 1, 0, 1});
  CHECK(throws_kind(
      [&] { fp_rank({FqRef{ctx.get(), 1}, FqRef{other.get(), 1}}); },
      "RejectMixedContexts"));
  CHECK(fp_rank({FqRef{ctx.get(), xi}, FqRef{ctx.get(), xi2}}) == 2);
}

TEST_CASE("the seven inverses of the GF(2^14) triple are independent") {
  FieldPtr ctx = parse_field("gf2_14");
  const Fq l1 = ctx->gpow(129), l2 = ctx->gpow(258), l3 = ctx->gpow(516);
  std::vector<Fq> inv = {
      ctx->inv(l1),
      ctx->inv(l2),
      ctx->inv(l3),
      ctx->inv(ctx->add(l1, l2)),
      ctx->inv(ctx->add(l1, l3)),
      ctx->inv(ctx->add(l2, l3)),
      ctx->inv(ctx->add(ctx->add(l1, l2), l3)),
  };
  CHECK(ctx->fp_rank(inv) == 7);
}

TEST_CASE("trace kernel subspaces") {
  FieldPtr gf32 = FieldCtx::build(2, 5, {1, 0, 1, 0, 0, 1});
  const auto hyper = gf32->trace_kernel_basis({1});
  CHECK(hyper.size() == 4);  // n - 1
  for (Fq d : hyper) CHECK(gf32->trace_to_prime(d) == 0);

  FieldPtr big = parse_field("gf2_16");
  const Fq w1 = big->gpow(3084), w2 = big->gpow(42148);
  const auto basis = big->trace_kernel_basis({w1, w2});
  CHECK(basis.size() == 14);
  CHECK(big->fp_rank(basis) == 14);
  for (Fq d : basis) {
    CHECK(big->trace_to_prime(big->mul(w1, d)) == 0);
    CHECK(big->trace_to_prime(big->mul(w2, d)) == 0);
  }

  CHECK(throws_kind([&] { gf32->trace_kernel_basis({3, 3}); },
                    "RejectDependentConstraints"));
  CHECK(big->trace_kernel_basis({w1, w2}) == basis);  // deterministic
}

TEST_CASE("element literals parse") {
  FieldPtr ctx = parse_field("gf3_5");
  CHECK(parse_element(*ctx, "x") == 3);
  CHECK(parse_element(*ctx, "g^0") == 1);
  CHECK(parse_element(*ctx, "g^1") == ctx->primitive_element());
  CHECK(parse_element(*ctx, "g^-1") == ctx->inv(ctx->primitive_element()));
  CHECK(parse_element(*ctx, "2") == 2);
  CHECK(throws_kind([&] { parse_element(*ctx, "g^zz"); }, "RejectParse"));
}
