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
#include <optional>
#include <string>
#include <vector>

#include "socode/walsh.hpp"

namespace socode {

// The three code constructions over a p-ary function f:
//   Punctured: (alpha f(x) - Tr(beta x))_{x != 0}, length p^n - 1
//   Full:      same with x = 0 included, length p^n
//   Augmented: (alpha f(x) - Tr(beta x) - c)_{x}, length p^n
// beta ranges over the full field or over a designated GF(p)-subspace.
enum class CodeKind { Punctured, Full, Augmented };

struct CodeSpec {
  PAryFunction f;
  CodeKind kind = CodeKind::Punctured;
  // Empty optional: beta ranges over the whole field. Otherwise a basis of
  // the subspace (must be GF(p)-independent).
  std::optional<std::vector<Fq>> subspace_basis;

  std::uint64_t length() const {
    return kind == CodeKind::Punctured ? f.ctx->q() - 1 : f.ctx->q();
  }
};

// All beta values of the domain in canonical order (coefficient counter over
// the basis for subspaces, plain index order for the full field).
std::vector<Fq> beta_domain(const CodeSpec& spec);

struct WeightDistribution {
  std::uint32_t p = 0;
  std::uint64_t length = 0;
  std::uint32_t k = 0;       // log_p of the codeword count
  std::uint64_t d = 0;       // minimum nonzero weight
  std::uint64_t w_min = 0, w_max = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;  // sorted (w, mult)

  std::uint64_t total() const;
  std::string enumerator() const;  // "1 + 240z^54 + 2z^81"
};

// Single codeword for parameters (alpha, beta[, c]), coordinates in element
// index order (Punctured omits x = 0). Errors: RejectBetaOutsideDomain,
// RejectCForNonAugmented.
std::vector<std::uint8_t> codeword(const CodeSpec& spec, std::uint32_t alpha,
                                   Fq beta, std::uint32_t c = 0);

// Exact Hamming weight from the spectrum: the Galois-orbit sum
// sum_{z in F_p^*} sigma_{z alpha}(W_f(alpha^-1 beta) zeta^{alpha^-1 c}) is
// evaluated in Z[zeta_p] and must come out as a rational integer divisible
// by p. Errors: AssertNonRationalOrbitSum.
std::uint64_t weight_analytic(const CodeSpec& spec, const WalshSpectrum& w,
                              std::uint32_t alpha, Fq beta, std::uint32_t c = 0);

// Full weight multiset over the parameter domain, computed from one
// transform. Rejects degenerate inputs where distinct parameters would give
// equal codewords (RejectAffineFunction / RejectDegenerateCode).
WeightDistribution weight_distribution(const CodeSpec& spec,
                                       const WalshSpectrum& w, int threads = 1);

// Brute-force path: every codeword, deterministic order (alpha major, then
// beta in domain order, then c). Errors: RejectTooLargeForEnumeration when
// p^k * p^n > 2^34.
std::vector<std::vector<std::uint8_t>> enumerate_codewords(const CodeSpec& spec);

// C subseteq C-perp, decided on a generating set (f row, a trace row per
// domain basis element, the all-one row for Augmented).
bool self_orthogonal_direct(const CodeSpec& spec);

// Binary criterion: W(beta) +- W(0) = 0 mod 8 for every beta in the domain.
// Errors: RejectOddP.
bool so_criterion_binary(const WalshSpectrum& w, const std::vector<Fq>& domain);

// Odd-p criterion on raw count vectors: sum beta_a a^2 = 0 mod p for every
// beta (and sum beta_a a = 0 for the augmented code). Requires p > 3.
// Errors: RejectSmallP.
bool so_criterion_odd(const WalshSpectrum& w, const std::vector<Fq>& domain,
                      bool augmented);

// Ternary code: self-orthogonal iff every weight is divisible by three.
// Errors: RejectNonTernary.
bool so_criterion_ternary(const WeightDistribution& dist);

// Exact minimality via the covering criterion: for every pair of linearly
// independent codewords a, b (reduced to projective representatives),
// sum_{z != 0} wt(a + z b) != (p-1) wt(a) - wt(b) in both orders.
// Errors: RejectTooLargeForEnumeration.
bool minimality_exact(const CodeSpec& spec, int threads = 1);

// Binary punctured-code criterion: no pair h != l in the domain with
// W(h) +- W(l) = 2^n. Errors: RejectOddP.
bool minimality_binary_walsh(const WalshSpectrum& w,
                             const std::vector<Fq>& domain);

enum class AbStatus { Satisfies, Boundary, Violates };

// Compares w_min/w_max against (p-1)/p exactly. Satisfies means the strict
// sufficient inequality holds; Boundary means equality.
AbStatus ab_condition(const WeightDistribution& dist);

struct BoundsReport {
  std::uint64_t griesmer_sum = 0;
  bool griesmer_met = false;  // length equals the Griesmer sum
  std::int64_t singleton_defect = 0;
};

BoundsReport bounds_check(const WeightDistribution& dist);

enum class BinaryParity { DoublyEven, SinglyEven, Odd, NA };

struct DivisibilityReport {
  std::uint64_t delta = 0;  // gcd of the nonzero weights
  BinaryParity parity = BinaryParity::NA;
};

DivisibilityReport divisibility(const WeightDistribution& dist);

struct AnalysisReport {
  std::uint64_t length = 0;
  std::uint32_t dimension = 0;
  std::uint64_t min_distance = 0;
  WeightDistribution dist;

  bool so_direct = false;
  std::optional<bool> so_criterion;  // nullopt: no criterion applies
  std::string criterion_name;        // "walsh-mod8", "ternary-divisibility",
                                     // "cyclotomic-sums", or "n/a"

  bool minimal = false;
  std::string minimal_method;  // "exact", "walsh", "ab"

  AbStatus ab = AbStatus::Satisfies;
  bool ab_violating = false;  // minimal despite failing the AB inequality

  DivisibilityReport div;
  BoundsReport bounds;
  std::vector<std::string> assumptions;
};

// Transform once, then distribution and every verdict. Minimality method is
// picked by size: exact pair scan when p^k p^n <= 2^20, the Walsh criterion
// for binary punctured codes otherwise, the AB shortcut as a last resort.
AnalysisReport analyze(const CodeSpec& spec, int threads = 1);

std::string report_to_json(const AnalysisReport& r);
std::string weights_to_csv(const WeightDistribution& dist);

}  // namespace socode
