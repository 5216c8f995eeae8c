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

#include "socode/pfunc.hpp"

namespace socode {

// Deterministic seeded-enumerative searches for the parameter sets the
// constructions assume exist. Every returned certificate has passed its full
// predicate and is re-validated from scratch before being returned. The
// budget counts candidate evaluations and defines a prefix of the canonical
// candidate sequence, so results are identical for any thread count.
struct SearchOptions {
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;
  int threads = 1;

  static constexpr std::uint64_t kMaxBudget = std::uint64_t(1) << 28;
};

template <typename Cert>
struct SearchResult {
  std::vector<Cert> found;
  bool exhausted_budget = false;  // the full candidate space was not covered
  std::uint64_t candidates_examined = 0;
};

// lambda triples sigma^{e1}, sigma^{e2}, sigma^{e3} in the subfield
// GF(2^m) of ctx = GF(2^{2m}) (sigma is the subfield generator), with the
// requested t-vector weight and inverse-set rank wt + 3. Candidates are
// exponent triples e1 < e2 < e3 in lexicographic order, each shifted by the
// seed modulo 2^m - 1.
struct TripleLambdaTask {
  FieldPtr ctx;       // GF(2^{2m})
  int target_wt = 4;  // 3 or 4
};

struct TripleCert {
  std::uint64_t e1, e2, e3;  // exponents of the subfield generator
  Fq l1, l2, l3;
  TVector t;
  std::uint32_t inverse_rank;
};

SearchResult<TripleCert> run(const TripleLambdaTask& task,
                             const SearchOptions& opt);

// (w1, w2) pairs for a fixed lambda pair: both w's and w1 + w2 must pass
// w_condition_check. Single candidates are w = g^{j + seed} for ascending j;
// admissible singles are then paired in order.
struct WPairTask {
  FieldPtr ctx;
  Fq l1, l2;
};

struct WPairCert {
  Fq w1, w2;
};

SearchResult<WPairCert> run(const WPairTask& task, const SearchOptions& opt);

// Quadratic forms Tr(sum c_i x^{p^i + 1}) with all coefficients nonzero,
// classified to the requested plateau amplitude; candidates are exponent
// tuples of the coefficients in lexicographic order, shifted by the seed.
struct PlateauedQuadTask {
  FieldPtr ctx;
  std::uint32_t s_target = 1;
  bool require_unbalanced = true;
};

struct PlateauedCert {
  std::vector<std::uint64_t> exps;  // log of each coefficient
  std::vector<Fq> coeffs;
  std::uint32_t s;
  int epsilon;
  bool balanced;
};

SearchResult<PlateauedCert> run(const PlateauedQuadTask& task,
                                const SearchOptions& opt);

}  // namespace socode
