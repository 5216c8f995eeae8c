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

#include <cmath>
#include <functional>

#include "doctest.h"
#include "oracles.hpp"
#include "socode/cyclotomic.hpp"
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

CycInt random_cyc(std::uint32_t p, Rng& rng, std::int64_t span = 50) {
  std::vector<std::int64_t> c(p);
  for (auto& v : c) v = static_cast<std::int64_t>(rng.below(2 * span)) - span;
  return CycInt::from_coords(std::move(c));
}

}  // namespace

TEST_CASE("ring identities") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    CHECK(CycInt::zeta(p, 1) * CycInt::zeta(p, p - 1) == CycInt::integer(p, 1));
    CycInt all(p);
    for (std::uint32_t a = 0; a < p; ++a) all += CycInt::zeta(p, a);
    CHECK(all == CycInt::integer(p, 0));  // minimal-polynomial relation
  }
  Rng rng(5);
  for (std::uint32_t p : {3u, 5u}) {
    const CycInt u = random_cyc(p, rng), v = random_cyc(p, rng),
                 w = random_cyc(p, rng);
    CHECK(u * v == v * u);
    CHECK(u * (v + w) == u * v + u * w);
    CHECK((u - u) == CycInt::integer(p, 0));
  }
  CHECK(throws_kind([] { return CycInt::zeta(3, 0) + CycInt::zeta(5, 0); },
                    "RejectMixedP"));
}

TEST_CASE("gauss sums square to p*") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const CycInt g = CycInt::gauss_sum(p);
    const std::int64_t pstar =
        (p % 4 == 1) ? static_cast<std::int64_t>(p) : -static_cast<std::int64_t>(p);
    CHECK(g * g == CycInt::integer(p, pstar));
  }
  // p = 3 expansion: zeta - zeta^2
  CHECK(CycInt::gauss_sum(3) ==
        CycInt::zeta(3, 1) - CycInt::zeta(3, 2));
  CHECK(throws_kind([] { CycInt::gauss_sum(2); }, "RejectCharTwo"));
}

TEST_CASE("galois automorphisms") {
  Rng rng(9);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const CycInt u = random_cyc(p, rng);
    CHECK(u.sigma(1) == u);
    // group law on random pairs of indices
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint32_t a = 1 + static_cast<std::uint32_t>(rng.below(p - 1));
      const std::uint32_t b = 1 + static_cast<std::uint32_t>(rng.below(p - 1));
      CHECK(u.sigma(a).sigma(b) == u.sigma(a * b % p));
    }
    // sigma distributes over products
    const CycInt v = random_cyc(p, rng);
    CHECK((u * v).sigma(2) == u.sigma(2) * v.sigma(2));
    // sigma_a(G) = eta_0(a) G
    const CycInt g = CycInt::gauss_sum(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      const CycInt lhs = g.sigma(a);
      const CycInt rhs = quad_char_mod(p, a) == 1 ? g : -g;
      CHECK(lhs == rhs);
    }
  }
  CHECK(throws_kind([] { CycInt::zeta(5, 1).sigma(5); }, "RejectZeroIndex"));
}

TEST_CASE("p = 2 degenerates to the rational integers") {
  const CycInt a = CycInt::from_coords({7, 3});
  std::int64_t v = 0;
  CHECK(a.is_rational(&v));
  CHECK(v == 4);
  CHECK(a == CycInt::integer(2, 4));
  CHECK(a.conj() == a);
  CHECK(a.norm_sq() == 16);
}

TEST_CASE("criterion sums") {
  // zero function at beta = 0: counts (p^n, 0, ..., 0)
  {
    std::vector<std::int64_t> c(5, 0);
    c[0] = 125;
    const auto s = criterion_sums(CycInt::from_coords(std::move(c)));
    CHECK(s.s2 == 0);
    CHECK(s.s1 == 0);
    CHECK(s.s0 == 0);
    CHECK_FALSE(s.representation_dependent);
  }
  // brute-force modular sums on random vectors
  Rng rng(23);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const CycInt u = random_cyc(p, rng, 1000);
      std::int64_t s2 = 0, s1 = 0, s0 = 0;
      for (std::uint32_t a = 0; a < p; ++a) {
        s2 += u.coords()[a] * a * a;
        s1 += u.coords()[a] * a;
        s0 += u.coords()[a];
      }
      auto red = [&](std::int64_t x) {
        x %= p;
        return static_cast<std::uint32_t>(x < 0 ? x + p : x);
      };
      const auto s = criterion_sums(u);
      CHECK(s.s2 == red(s2));
      CHECK(s.s1 == red(s1));
      CHECK(s.s0 == red(s0));
    }
  }
  // p = 3 is flagged representation-dependent
  CHECK(criterion_sums(CycInt::integer(3, 1)).representation_dependent);
}

TEST_CASE("criterion sums are representation independent for p > 3") {
  Rng rng(29);
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (int trial = 0; trial < 50; ++trial) {
      const CycInt u = random_cyc(p, rng);
      const std::int64_t shift = static_cast<std::int64_t>(rng.below(40)) - 20;
      std::vector<std::int64_t> c = u.coords();
      for (auto& x : c) x += shift;
      const CycInt v = CycInt::from_coords(std::move(c));
      CHECK(u == v);
      const auto su = criterion_sums(u), sv = criterion_sums(v);
      CHECK(su.s2 == sv.s2);
      CHECK(su.s1 == sv.s1);
    }
  }
}

TEST_CASE("norms are nonnegative rational integers") {
  Rng rng(31);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::int64_t ns = random_cyc(p, rng).norm_sq();
      CHECK(ns >= 0);
    }
  }
}

TEST_CASE("extension-field gauss sums") {
  // sum_{x in F_q^*} eta(x) zeta^{Tr(rx)} = (-1)^{n-1} eta(r) sqrt(p*)^n
  struct Case {
    std::uint32_t p, n;
    std::vector<std::uint8_t> mod;
  };
  const std::vector<Case> cases = {
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {5, 2, {2, 1, 1}},
      {7, 1, {4, 1}},
  };
  Rng rng(37);
  for (const auto& c : cases) {
    FieldPtr ctx = FieldCtx::build(c.p, c.n, c.mod);
    const CycInt gn = CycInt::gauss_sum(c.p).pow(c.n);
    for (int trial = 0; trial < 8; ++trial) {
      const Fq r = static_cast<Fq>(1 + rng.below(ctx->q() - 1));
      std::vector<std::int64_t> coords(c.p, 0);
      std::vector<std::int64_t> neg(c.p, 0);
      for (std::uint64_t x = 1; x < ctx->q(); ++x) {
        const std::uint32_t e =
            ctx->trace_to_prime(ctx->mul(r, static_cast<Fq>(x)));
        if (ctx->quad_char(static_cast<Fq>(x)) == 1) ++coords[e];
        else ++neg[e];
      }
      for (std::uint32_t a = 0; a < c.p; ++a) coords[a] -= neg[a];
      const CycInt lhs = CycInt::from_coords(std::move(coords));
      CycInt rhs = gn;
      if (ctx->quad_char(r) == -1) rhs = -rhs;
      if (c.n % 2 == 0) rhs = -rhs;  // (-1)^{n-1}
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("quadratic exponential sums complete the square") {
  // sum_x zeta^{a2 x^2 + a1 x + a0} =
  //   zeta^{a0 - a1^2 (4 a2)^{-1}} eta_0(a2) sqrt(p*), exhaustive.
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const CycInt g = CycInt::gauss_sum(p);
    auto inv_mod = [&](std::uint32_t v) {
      for (std::uint32_t t = 1; t < p; ++t)
        if (t * v % p == 1) return t;
      return 0u;
    };
    for (std::uint32_t a2 = 1; a2 < p; ++a2)
      for (std::uint32_t a1 = 0; a1 < p; ++a1)
        for (std::uint32_t a0 = 0; a0 < p; ++a0) {
          std::vector<std::int64_t> coords(p, 0);
          for (std::uint32_t x = 0; x < p; ++x)
            ++coords[(a2 * x * x + a1 * x + a0) % p];
          const CycInt lhs = CycInt::from_coords(std::move(coords));
          const std::uint32_t shift =
              (a0 + p * p - a1 * a1 % p * inv_mod(4 * a2 % p) % p) % p;
          CycInt rhs = CycInt::zeta(p, shift) * g;
          if (quad_char_mod(p, a2) == -1) rhs = -rhs;
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("to_complex sanity") {
  CHECK(std::abs(CycInt::integer(5, 0).to_complex()) < 1e-12);
  const auto g3 = CycInt::gauss_sum(3).to_complex();
  CHECK(std::abs(g3.real()) < 1e-9);
  CHECK(g3.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  const auto k = CycInt::integer(7, 42).to_complex();
  CHECK(k.real() == doctest::Approx(42.0).epsilon(1e-9));
  CHECK(std::abs(k.imag()) < 1e-9);
}

TEST_CASE("rendering is exact and normalized") {
  CHECK(CycInt::integer(3, 0).to_string() == "0");
  CHECK(CycInt::gauss_sum(5).to_string() == "z - z^2 - z^3 + z^4");
  CHECK(CycInt::from_coords({1, 2, 1}).normalized().coords()[2] == 0);
}
