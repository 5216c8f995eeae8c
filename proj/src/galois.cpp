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

#include "socode/galois.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace socode {
namespace {

using Poly = std::vector<std::uint8_t>;  // coefficients low -> high

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

// Remainder of a modulo m (m monic after scaling by lead inverse).
Poly poly_rem(Poly a, const Poly& m, std::uint32_t p) {
  a = trim(a);
  const int dm = deg(m);
  std::uint32_t lead = m.back();
  // Inverse of the leading coefficient mod p.
  std::uint32_t lead_inv = 1;
  for (std::uint32_t t = 1; t < p; ++t)
    if (t * lead % p == 1) { lead_inv = t; break; }
  while (deg(a) >= dm) {
    const int shift = deg(a) - dm;
    const std::uint32_t f = static_cast<std::uint32_t>(a.back()) * lead_inv % p;
    for (int i = 0; i <= dm; ++i) {
      std::uint32_t v = a[i + shift] + p * p - f * m[i] % p;
      a[i + shift] = static_cast<std::uint8_t>(v % p);
    }
    a = trim(a);
  }
  return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint8_t>((r[i + j] + a[i] * b[j]) % p);
  }
  return poly_rem(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// h(x) -> h(x)^p mod m, using h^p = h composed with x^p over GF(p).
Poly poly_frobenius(const Poly& h, const Poly& xp, const Poly& m, std::uint32_t p) {
  Poly acc;  // Horner from the top coefficient down
  for (int i = deg(h); i >= 0; --i) {
    acc = poly_mul_mod(acc, xp, m, p);
    if (h[static_cast<std::size_t>(i)]) {
      if (acc.empty()) acc.resize(1, 0);
      acc[0] = static_cast<std::uint8_t>((acc[0] + h[static_cast<std::size_t>(i)]) % p);
    }
  }
  return acc;
}

// Distinct-degree style irreducibility check: a monic degree-n polynomial is
// reducible iff it shares a factor with x^{p^k} - x for some k <= n/2.
bool is_irreducible(const Poly& m, std::uint32_t p, std::uint32_t n) {
  if (n == 1) return true;
  Poly x = {0, 1};
  // x^p mod m by square-and-multiply on the exponent p.
  Poly xp = {1};
  {
    Poly base = x;
    std::uint32_t e = p;
    while (e) {
      if (e & 1) xp = poly_mul_mod(xp, base, m, p);
      base = poly_mul_mod(base, base, m, p);
      e >>= 1;
    }
  }
  Poly h = x;
  for (std::uint32_t k = 1; k <= n / 2; ++k) {
    h = poly_frobenius(h, xp, m, p);  // h = x^{p^k} mod m
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<std::uint8_t>((diff[1] + p - 1) % p);
    Poly g = poly_gcd(m, trim(std::move(diff)), p);
    if (deg(g) > 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

int quad_char_mod(std::uint32_t p, std::int64_t c) {
  if (p == 2) throw Reject("RejectCharTwo", "quadratic character needs odd p");
  std::int64_t r = c % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  if (r == 0) return 0;
  // Euler's criterion: c^((p-1)/2) mod p.
  std::uint64_t base = static_cast<std::uint64_t>(r), acc = 1, e = (p - 1) / 2;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

FieldPtr FieldCtx::build(std::uint32_t p, std::uint32_t n,
                         std::vector<std::uint8_t> modulus,
                         std::optional<Fq> primitive) {
  if (!is_prime_u64(p)) throw Reject("RejectNotPrime", "p = " + std::to_string(p));
  if (n < 1) throw Reject("RejectBadDegree", "n must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Reject("RejectTooLarge", "p^n exceeds 2^24");
  }

  if (modulus.size() != n + 1 || modulus[n] == 0)
    throw Reject("RejectBadModulus", "modulus must have degree exactly n");
  for (auto c : modulus)
    if (c >= p) throw Reject("RejectBadModulus", "coefficient out of range");
  if (modulus[n] != 1) throw Reject("RejectBadModulus", "modulus must be monic");
  if (!is_irreducible(modulus, p, n))
    throw Reject("RejectReducibleModulus", "modulus factors over GF(p)");

  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->p_ = p;
  ctx->n_ = n;
  ctx->q_ = q;
  ctx->modulus_ = modulus;
  ctx->ppow_.resize(n + 1);
  ctx->ppow_[0] = 1;
  for (std::uint32_t i = 1; i <= n; ++i) ctx->ppow_[i] = ctx->ppow_[i - 1] * p;

  // Slow index arithmetic used only until the tables exist.
  auto to_poly = [&](Fq a) {
    Poly c(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      c[i] = static_cast<std::uint8_t>(a % p);
      a = static_cast<Fq>(a / p);
    }
    return trim(std::move(c));
  };
  auto from_poly = [&](const Poly& c) {
    std::uint64_t a = 0;
    for (std::size_t i = 0; i < c.size(); ++i) a += c[i] * ctx->ppow_[i];
    return static_cast<Fq>(a);
  };
  auto mul_slow = [&](Fq a, Fq b) {
    return from_poly(poly_mul_mod(to_poly(a), to_poly(b), modulus, p));
  };
  auto pow_slow = [&](Fq a, std::uint64_t e) {
    Fq acc = 1, base = a;
    while (e) {
      if (e & 1) acc = mul_slow(acc, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    return acc;
  };

  const auto factors = prime_factors(q - 1);
  auto is_generator = [&](Fq g) {
    if (g == 0) return false;
    if (q == 2) return g == 1;
    for (auto r : factors)
      if (pow_slow(g, (q - 1) / r) == 1) return false;
    return true;
  };

  if (primitive.has_value()) {
    if (*primitive >= q || !is_generator(*primitive))
      throw Reject("RejectNonPrimitive",
                   "supplied element does not have order p^n - 1");
    ctx->primitive_ = *primitive;
  } else {
    Fq g = 0;
    for (Fq cand = 1; cand < q; ++cand)
      if (is_generator(cand)) { g = cand; break; }
    ctx->primitive_ = g;
  }

  // Exponent tables. Multiplication by the generator is done on coefficient
  // vectors directly so that building GF(2^16) stays in the millisecond range.
  ctx->antilog_.assign(q - 1, 0);
  ctx->log_.assign(q, 0);
  {
    Poly g = to_poly(ctx->primitive_);
    Poly cur = {1};
    for (std::uint64_t j = 0; j < q - 1; ++j) {
      Fq idx = from_poly(cur);
      ctx->antilog_[j] = idx;
      ctx->log_[idx] = static_cast<std::uint32_t>(j);
      cur = poly_mul_mod(cur, g, modulus, p);
    }
  }

  // Absolute trace of each basis element, then of every index by a
  // mixed-radix counter sweep.
  std::vector<std::uint32_t> trb(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    Fq e = static_cast<Fq>(ctx->ppow_[i]);
    Fq sum = 0, t = e;
    for (std::uint32_t j = 0; j < n; ++j) {
      sum = ctx->add(sum, t);
      t = pow_slow(t, p);
    }
    if (sum >= p)
      throw Reject("RejectInternal", "trace of basis element not in GF(p)");
    trb[i] = sum;
  }
  ctx->tr1_.assign(q, 0);
  {
    std::vector<std::uint32_t> dig(n, 0);
    std::uint32_t acc = 0;
    for (std::uint64_t x = 1; x < q; ++x) {
      std::uint32_t i = 0;
      for (;;) {
        acc += trb[i];
        if (acc >= p) acc -= p;
        if (++dig[i] < p) break;
        dig[i] = 0;
        ++i;
      }
      ctx->tr1_[x] = static_cast<std::uint8_t>(acc);
    }
  }
  return ctx;
}

std::vector<std::uint8_t> FieldCtx::coeffs(Fq a) const {
  std::vector<std::uint8_t> c(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    c[i] = static_cast<std::uint8_t>(a % p_);
    a = static_cast<Fq>(a / p_);
  }
  return c;
}

Fq FieldCtx::from_coeffs(const std::vector<std::uint8_t>& c) const {
  std::uint64_t a = 0;
  for (std::uint32_t i = 0; i < n_ && i < c.size(); ++i) a += c[i] * ppow_[i];
  return static_cast<Fq>(a);
}

Fq FieldCtx::add(Fq a, Fq b) const {
  if (p_ == 2) return a ^ b;
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t s = da + db;
    if (s >= p_) s -= p_;
    r += s * ppow_[i];
  }
  return static_cast<Fq>(r);
}

Fq FieldCtx::neg(Fq a) const {
  if (p_ == 2) return a;
  std::uint64_t r = 0;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t d = a % p_;
    a /= p_;
    r += (d ? p_ - d : 0) * ppow_[i];
  }
  return static_cast<Fq>(r);
}

Fq FieldCtx::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FieldCtx::mul(Fq a, Fq b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t j = log_[a] + log_[b];
  if (j >= q_ - 1) j -= q_ - 1;
  return antilog_[j];
}

Fq FieldCtx::inv(Fq a) const {
  if (a == 0) throw Reject("RejectDivideByZero", "inverse of zero");
  std::uint64_t j = (q_ - 1 - log_[a]) % (q_ - 1);
  return antilog_[j];
}

Fq FieldCtx::pow(Fq a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t j = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
  return antilog_[j];
}

Fq FieldCtx::gpow(std::int64_t e) const {
  std::int64_t m = static_cast<std::int64_t>(q_ - 1);
  std::int64_t j = e % m;
  if (j < 0) j += m;
  return antilog_[static_cast<std::uint64_t>(j)];
}

Fq FieldCtx::scalar_mul(std::uint32_t c, Fq a) const {
  c %= p_;
  if (c == 0 || a == 0) return 0;
  return mul(static_cast<Fq>(c), a);
}

std::uint64_t FieldCtx::log(Fq a) const {
  if (a == 0) throw Reject("RejectDivideByZero", "log of zero");
  return log_[a];
}

std::uint64_t FieldCtx::element_order(Fq a) const {
  if (a == 0) throw Reject("RejectDivideByZero", "order of zero");
  std::uint64_t j = log_[a];
  std::uint64_t g = std::gcd(j, q_ - 1);
  return (q_ - 1) / (g == 0 ? q_ - 1 : g);
}

Fq FieldCtx::trace_to_subfield(std::uint32_t k, Fq x) const {
  if (k == 0 || n_ % k != 0)
    throw Reject("RejectNonDivisor", "k must divide n");
  Fq sum = 0, t = x;
  std::uint64_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) pk *= p_;
  for (std::uint32_t i = 0; i < n_ / k; ++i) {
    sum = add(sum, t);
    t = pow(t, pk);
  }
  return sum;
}

std::uint32_t FieldCtx::subfield_trace_to_prime(std::uint32_t m, Fq y) const {
  if (m == 0 || n_ % m != 0)
    throw Reject("RejectNonDivisor", "m must divide n");
  Fq sum = 0, t = y;
  for (std::uint32_t i = 0; i < m; ++i) {
    sum = add(sum, t);
    t = pow(t, p_);
  }
  if (sum >= p_)
    throw Reject("RejectLambdaOutsideSubfield",
                 "element does not lie in GF(p^m)");
  return sum;
}

bool FieldCtx::in_subfield(std::uint32_t m, Fq y) const {
  if (m == 0 || n_ % m != 0) return false;
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < m; ++i) pm *= p_;
  return pow(y, pm) == y;
}

int FieldCtx::quad_char(Fq x) const {
  if (p_ == 2) throw Reject("RejectCharTwo", "quadratic character needs odd p");
  if (x == 0) return 0;
  return (log_[x] & 1) == 0 ? 1 : -1;
}

std::vector<Fq> FieldCtx::trace_kernel_basis(const std::vector<Fq>& constraints) const {
  if (constraints.empty())
    throw Reject("RejectDependentConstraints", "constraint list is empty");
  const std::uint32_t r = static_cast<std::uint32_t>(constraints.size());
  // Row w has entries Tr(w * e_i): the matrix of the linear forms.
  std::vector<std::vector<std::uint8_t>> mat(r, std::vector<std::uint8_t>(n_));
  for (std::uint32_t row = 0; row < r; ++row)
    for (std::uint32_t i = 0; i < n_; ++i)
      mat[row][i] = static_cast<std::uint8_t>(
          trace_to_prime(mul(constraints[row], static_cast<Fq>(ppow_[i]))));

  // Reduced row echelon form with lowest-index pivots.
  std::vector<int> pivot_col(r, -1);
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < n_ && rank < r; ++col) {
    std::uint32_t sel = rank;
    while (sel < r && mat[sel][col] == 0) ++sel;
    if (sel == r) continue;
    std::swap(mat[rank], mat[sel]);
    std::uint32_t piv_inv = 1;
    for (std::uint32_t t = 1; t < p_; ++t)
      if (t * mat[rank][col] % p_ == 1) { piv_inv = t; break; }
    for (std::uint32_t i = 0; i < n_; ++i)
      mat[rank][i] = static_cast<std::uint8_t>(mat[rank][i] * piv_inv % p_);
    for (std::uint32_t other = 0; other < r; ++other) {
      if (other == rank || mat[other][col] == 0) continue;
      std::uint32_t f = mat[other][col];
      for (std::uint32_t i = 0; i < n_; ++i)
        mat[other][i] = static_cast<std::uint8_t>(
            (mat[other][i] + (p_ - f) * mat[rank][i]) % p_);
    }
    pivot_col[rank] = static_cast<int>(col);
    ++rank;
  }
  if (rank != r)
    throw Reject("RejectDependentConstraints",
                 "constraints are GF(p)-dependent");

  std::vector<bool> is_pivot(n_, false);
  for (std::uint32_t i = 0; i < rank; ++i) is_pivot[static_cast<std::size_t>(pivot_col[i])] = true;

  std::vector<Fq> basis;
  for (std::uint32_t free_col = 0; free_col < n_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<std::uint8_t> v(n_, 0);
    v[free_col] = 1;
    for (std::uint32_t row = 0; row < rank; ++row) {
      std::uint32_t c = mat[row][free_col];
      if (c)
        v[static_cast<std::size_t>(pivot_col[row])] =
            static_cast<std::uint8_t>((p_ - c) % p_);
    }
    basis.push_back(from_coeffs(v));
  }
  return basis;
}

std::uint32_t FieldCtx::fp_rank(const std::vector<Fq>& vectors) const {
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(vectors.size());
  for (Fq v : vectors) rows.push_back(coeffs(v));
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < n_ && rank < rows.size(); ++col) {
    std::uint32_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    std::uint32_t piv_inv = 1;
    for (std::uint32_t t = 1; t < p_; ++t)
      if (t * rows[rank][col] % p_ == 1) { piv_inv = t; break; }
    for (std::uint32_t i = 0; i < n_; ++i)
      rows[rank][i] = static_cast<std::uint8_t>(rows[rank][i] * piv_inv % p_);
    for (std::uint32_t other = rank + 1; other < rows.size(); ++other) {
      std::uint32_t f = rows[other][col];
      if (!f) continue;
      for (std::uint32_t i = 0; i < n_; ++i)
        rows[other][i] = static_cast<std::uint8_t>(
            (rows[other][i] + (p_ - f) * rows[rank][i]) % p_);
    }
    ++rank;
  }
  return rank;
}

std::uint32_t fp_rank(const std::vector<FqRef>& vectors) {
  if (vectors.empty()) return 0;
  const FieldCtx* ctx = vectors.front().ctx;
  std::vector<Fq> raw;
  raw.reserve(vectors.size());
  for (const auto& e : vectors) {
    if (e.ctx != ctx)
      throw Reject("RejectMixedContexts", "elements from different fields");
    raw.push_back(e.v);
  }
  return ctx->fp_rank(raw);
}

}  // namespace socode
