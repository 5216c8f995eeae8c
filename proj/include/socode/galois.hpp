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
#include <memory>
#include <optional>
#include <vector>

#include "socode/errors.hpp"

namespace socode {

// Element of GF(p^n), addressed by its mixed-radix index: an element with
// coefficient vector (c_0, ..., c_{n-1}) in the polynomial basis has index
// sum(c_i * p^i). Constants c < p therefore have index c, and the class of
// x has index p.
using Fq = std::uint32_t;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// A validated finite field GF(p^n) with full log/antilog tables and a
// precomputed absolute-trace table. Instances are immutable after
// construction; every member function is const and thread-safe.
//
// Construction verifies that the modulus is irreducible over GF(p), that the
// primitive element generates the multiplicative group, and that p^n fits the
// table cap of 2^24.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t(1) << 24;

  // `modulus` holds coefficients low to high and must be monic of degree n.
  // When `primitive` is omitted, the smallest generator in index order is
  // located and stored.
  static FieldPtr build(std::uint32_t p, std::uint32_t n,
                        std::vector<std::uint8_t> modulus,
                        std::optional<Fq> primitive = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t q() const { return q_; }
  Fq primitive_element() const { return primitive_; }
  const std::vector<std::uint8_t>& modulus() const { return modulus_; }

  std::vector<std::uint8_t> coeffs(Fq a) const;
  Fq from_coeffs(const std::vector<std::uint8_t>& c) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const;
  Fq neg(Fq a) const;
  Fq mul(Fq a, Fq b) const;
  Fq inv(Fq a) const;                     // a != 0
  Fq pow(Fq a, std::uint64_t e) const;    // 0^0 = 1
  Fq gpow(std::int64_t e) const;          // primitive^e, e may be negative
  Fq scalar_mul(std::uint32_t c, Fq a) const;  // c in GF(p)
  Fq frobenius(Fq a) const { return pow(a, p_); }

  std::uint64_t element_order(Fq a) const;  // a != 0
  std::uint64_t log(Fq a) const;            // discrete log base primitive, a != 0

  // Absolute trace Tr_1^n valued in {0, ..., p-1}; table-backed.
  std::uint32_t trace_to_prime(Fq x) const { return tr1_[x]; }

  // Relative trace Tr_k^n onto the subfield GF(p^k). Errors: RejectNonDivisor.
  Fq trace_to_subfield(std::uint32_t k, Fq x) const;

  // Trace of a GF(p^m)-element down to GF(p), computed inside this field.
  // Precondition: m | n and y lies in the subfield GF(p^m).
  std::uint32_t subfield_trace_to_prime(std::uint32_t m, Fq y) const;

  bool in_subfield(std::uint32_t m, Fq y) const;

  // Quadratic character eta on GF(p^n): +1 on nonzero squares, -1 on
  // nonsquares, 0 at zero. Errors: RejectCharTwo.
  int quad_char(Fq x) const;

  // Basis of {delta : Tr_1^n(w delta) = 0 for all w in constraints}.
  // Deterministic: row-reduced with lowest-index pivots. Errors:
  // RejectDependentConstraints.
  std::vector<Fq> trace_kernel_basis(const std::vector<Fq>& constraints) const;

  // GF(p)-rank of elements viewed as coefficient vectors; lowest coefficient
  // index is eliminated first.
  std::uint32_t fp_rank(const std::vector<Fq>& vectors) const;

 private:
  FieldCtx() = default;

  std::uint32_t p_ = 0, n_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint8_t> modulus_;
  Fq primitive_ = 0;
  std::vector<std::uint32_t> log_, antilog_;
  std::vector<std::uint8_t> tr1_;
  std::vector<std::uint64_t> ppow_;  // p^0 .. p^n
};

// An element tagged with its context, for operations whose contract spans
// multiple elements that must agree on the field.
struct FqRef {
  const FieldCtx* ctx;
  Fq v;
};

// Quadratic character eta_0 on GF(p) without building a field context:
// +1 / -1 / 0. Errors: RejectCharTwo.
int quad_char_mod(std::uint32_t p, std::int64_t c);

bool is_prime_u64(std::uint64_t v);

// GF(p)-rank of a set of elements; all entries must share one context.
// Errors: RejectMixedContexts.
std::uint32_t fp_rank(const std::vector<FqRef>& vectors);

}  // namespace socode
