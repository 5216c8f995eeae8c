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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "socode/errors.hpp"

namespace socode {

// Exact element of Z[zeta_p], stored as a length-p integer vector in the
// group-ring representation: coords (c_0, ..., c_{p-1}) stands for
// sum c_a * zeta^a. Because 1 + zeta + ... + zeta^{p-1} = 0, two vectors are
// equal as ring elements iff their difference is a constant vector; equality
// and is_rational use that convention. The raw coordinates are preserved
// (never normalized behind the caller's back) so that transform outputs keep
// their counting meaning.
//
// Values are immutable; every operation returns a fresh CycInt.
class CycInt {
 public:
  explicit CycInt(std::uint32_t p) : c_(p, 0) {}

  static CycInt integer(std::uint32_t p, std::int64_t v);
  static CycInt zeta(std::uint32_t p, std::int64_t k);  // zeta_p^k, k mod p
  static CycInt from_coords(std::vector<std::int64_t> coords);

  // Quadratic Gauss sum G = sum_{x in F_p^*} eta_0(x) zeta^x; squares to
  // p* = (-1)^{(p-1)/2} p. Errors: RejectCharTwo.
  static CycInt gauss_sum(std::uint32_t p);

  std::uint32_t p() const { return static_cast<std::uint32_t>(c_.size()); }
  const std::vector<std::int64_t>& coords() const { return c_; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;  // cyclic convolution
  CycInt& operator+=(const CycInt& o);

  bool operator==(const CycInt& o) const;
  bool operator!=(const CycInt& o) const { return !(*this == o); }

  // Galois automorphism sigma_a (zeta -> zeta^a), a not divisible by p.
  // Errors: RejectZeroIndex.
  CycInt sigma(std::uint32_t a) const;
  CycInt conj() const { return sigma(p() - 1); }

  CycInt pow(std::uint32_t e) const;

  // Representative with coords[p-1] == 0.
  CycInt normalized() const;

  bool is_rational(std::int64_t* out = nullptr) const;

  // |u|^2 = u * sigma_{-1}(u). This lies in the real subfield; it is a
  // rational integer for the plateaued-family Walsh values but not for
  // arbitrary ring elements, so the try-variant reports rather than throws.
  bool try_norm_sq(std::int64_t* out) const;
  std::int64_t norm_sq() const;  // throws when the norm is not rational

  bool is_zero() const { return *this == CycInt(p()); }

  std::string to_string() const;          // "a0 + a1*z + ..." exact rendering
  std::complex<double> to_complex() const;

 private:
  std::vector<std::int64_t> c_;
};

// The three reductions used by the self-orthogonality criterion:
// s2 = sum c_a a^2, s1 = sum c_a a, s0 = sum c_a, each mod p. For p <= 3 the
// first two depend on the chosen coordinate representative, so the flag is
// set (the caller is expected to pass raw transform counts there).
struct CriterionSums {
  std::uint32_t s2, s1, s0;
  bool representation_dependent;
};

CriterionSums criterion_sums(const CycInt& v);

}  // namespace socode
