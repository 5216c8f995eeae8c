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

#include "socode/galois.hpp"

namespace socode {

// A total map GF(p^n) -> GF(p), materialized as a value table indexed by
// element index, plus a descriptor recording how it was built. Immutable
// once constructed.
struct PAryFunction {
  FieldPtr ctx;
  std::vector<std::uint8_t> values;  // length q, entries in [0, p)
  std::string meta;

  std::uint8_t operator()(Fq x) const { return values[x]; }
};

PAryFunction function_from_table(FieldPtr ctx, std::vector<std::uint8_t> values,
                                 std::string meta = "table");

// g_lambda(x) = Tr_1^m(lambda x^{p^m + 1}) over GF(p^{2m}), lambda in
// GF(p^m)^*. Errors: RejectOddDegree, RejectZeroLambda,
// RejectLambdaOutsideSubfield.
PAryFunction monomial_bent(FieldPtr ctx, Fq lambda);

// Product of the three traces Tr_1^m(lambda_i x^{2^m+1}) over GF(2^{2m});
// the lambdas must be GF(2)-independent elements of GF(2^m)^*.
PAryFunction triple_product(FieldPtr ctx, Fq l1, Fq l2, Fq l3);

// Relationship bits between sums of lambdas and sums of their inverses:
// bit = 0 exactly when the corresponding inverse identity holds. t2, t3, t4
// belong to the pairs (1,2), (1,3), (2,3) in that order (index j1+j2-1).
struct TVector {
  bool t1, t2, t3, t4;
  int weight() const { return int(t1) + int(t2) + int(t3) + int(t4); }
};

TVector compute_t_vector(const FieldCtx& ctx, Fq l1, Fq l2, Fq l3);

// Whether the seven inverses {l_i^-1, (l_i + l_j)^-1, (l1+l2+l3)^-1} have
// GF(2)-rank exactly weight(t) + 3.
bool inverse_set_rank_ok(const FieldCtx& ctx, Fq l1, Fq l2, Fq l3);

// Trace product Tr_1^m(l1 x^{2^m+1}) Tr_1^m(l2 x^{2^m+1}) with the value
// flipped at the two points w1 != w2; requires the trace conditions of
// w_condition_check for w1, w2 and w1 + w2, plus
// (l1+l2)^-1 != l1^-1 + l2^-1. Errors: RejectInverseIdentityHolds,
// RejectWConditionFails.
PAryFunction singly_even_function(FieldPtr ctx, Fq l1, Fq l2, Fq w1, Fq w2);

// The eight-trace admissibility predicate on a single w: with l3 = l1 + l2,
// Tr_1^m(mu w^{2^m+1}) must vanish for mu in {l1, l2, l3,
// (l1^-1+l2^-1)^-1, (l1^-1+l3^-1)^-1, (l2^-1+l3^-1)^-1,
// (l1^-1+l2^-1+l3^-1)^-1}.
bool w_condition_check(const FieldCtx& ctx, Fq l1, Fq l2, Fq w);

// f_t(0) = t, f_t(x) = x^{(p^n-1)/2} elsewhere (1 on squares, p-1 on
// nonsquares). Errors: RejectCharTwo, RejectZeroT.
PAryFunction f_t_function(FieldPtr ctx, std::uint32_t t);

// f_a(x) = f(x) + a f(x)^{p-1}; requires the base to classify as an
// unbalanced weakly regular plateaued function (the classification is
// consulted, not trusted). Errors: RejectZeroA, RejectBalancedBase,
// RejectNotWeaklyRegular, RejectCharTwo.
PAryFunction f_a_from_plateaued(const PAryFunction& f, std::uint32_t a);

// Tr_1^n(sum c_i x^{p^i + 1}) from a list of (coefficient, i) pairs.
// Errors: RejectAllZero.
PAryFunction quadratic_form(FieldPtr ctx,
                            const std::vector<std::pair<Fq, std::uint32_t>>& coeffs);

}  // namespace socode
