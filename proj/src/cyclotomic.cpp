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

#include "socode/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "socode/galois.hpp"

namespace socode {

namespace {
void check_same_p(const CycInt& a, const CycInt& b) {
  if (a.p() != b.p())
    throw Reject("RejectMixedP", "operands live in different cyclotomic rings");
}
}  // namespace

CycInt CycInt::integer(std::uint32_t p, std::int64_t v) {
  CycInt r(p);
  r.c_[0] = v;
  return r;
}

CycInt CycInt::zeta(std::uint32_t p, std::int64_t k) {
  CycInt r(p);
  std::int64_t j = k % static_cast<std::int64_t>(p);
  if (j < 0) j += p;
  r.c_[static_cast<std::size_t>(j)] = 1;
  return r;
}

CycInt CycInt::from_coords(std::vector<std::int64_t> coords) {
  if (coords.empty()) throw Reject("RejectBadCoords", "empty coordinate vector");
  CycInt r(static_cast<std::uint32_t>(coords.size()));
  r.c_ = std::move(coords);
  return r;
}

CycInt CycInt::gauss_sum(std::uint32_t p) {
  if (p == 2) throw Reject("RejectCharTwo", "Gauss sum needs odd p");
  CycInt r(p);
  for (std::uint32_t x = 1; x < p; ++x) r.c_[x] = quad_char_mod(p, x);
  return r;
}

CycInt CycInt::operator+(const CycInt& o) const {
  check_same_p(*this, o);
  CycInt r(p());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CycInt& CycInt::operator+=(const CycInt& o) {
  check_same_p(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_same_p(*this, o);
  CycInt r(p());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(p());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_same_p(*this, o);
  const std::uint32_t m = p();
  CycInt r(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t j = 0; j < m; ++j) {
      std::uint32_t k = i + j;
      if (k >= m) k -= m;
      r.c_[k] += c_[i] * o.c_[j];
    }
  }
  return r;
}

bool CycInt::operator==(const CycInt& o) const {
  check_same_p(*this, o);
  const std::int64_t d = c_[0] - o.c_[0];
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] - o.c_[i] != d) return false;
  return true;
}

CycInt CycInt::sigma(std::uint32_t a) const {
  const std::uint32_t m = p();
  a %= m;
  if (a == 0) throw Reject("RejectZeroIndex", "sigma_a needs a nonzero mod p");
  CycInt r(m);
  for (std::uint32_t j = 0; j < m; ++j)
    r.c_[static_cast<std::size_t>(std::uint64_t(a) * j % m)] = c_[j];
  return r;
}

CycInt CycInt::pow(std::uint32_t e) const {
  CycInt acc = CycInt::integer(p(), 1);
  CycInt base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycInt CycInt::normalized() const {
  CycInt r(p());
  const std::int64_t last = c_.back();
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - last;
  return r;
}

bool CycInt::is_rational(std::int64_t* out) const {
  const std::int64_t tail = c_.back();
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != tail) return false;
  if (out) *out = c_[0] - tail;
  return true;
}

bool CycInt::try_norm_sq(std::int64_t* out) const {
  return (*this * conj()).is_rational(out);
}

std::int64_t CycInt::norm_sq() const {
  std::int64_t v = 0;
  if (!try_norm_sq(&v))
    throw Reject("RejectInternal", "norm is not a rational integer");
  return v;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    std::int64_t mag = c_[i] > 0 ? c_[i] : -c_[i];
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) {
      if (mag != 1) os << "*";
      os << "z";
      if (i >= 2) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> r(0.0, 0.0);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(p());
  for (std::size_t a = 0; a < c_.size(); ++a)
    r += static_cast<double>(c_[a]) *
         std::complex<double>(std::cos(w * static_cast<double>(a)),
                              std::sin(w * static_cast<double>(a)));
  return r;
}

CriterionSums criterion_sums(const CycInt& v) {
  const std::uint32_t p = v.p();
  std::int64_t s2 = 0, s1 = 0, s0 = 0;
  for (std::uint32_t a = 0; a < p; ++a) {
    const std::int64_t ca = v.coords()[a] % static_cast<std::int64_t>(p);
    s2 += ca % p * (std::int64_t(a) * a % p) % p;
    s1 += ca * a % p;
    s0 += ca;
  }
  auto red = [&](std::int64_t x) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
  };
  return CriterionSums{red(s2), red(s1), red(s0), p <= 3};
}

}  // namespace socode
