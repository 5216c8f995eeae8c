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

#include "socode/theory.hpp"

#include <map>
#include <sstream>

namespace socode {

namespace {

std::int64_t ipow(std::uint32_t base, std::uint32_t e) {
  std::int64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

void require(bool ok, const std::string& hypothesis) {
  if (!ok) throw Reject("RejectOutOfDomain", "violated hypothesis: " + hypothesis);
}

struct RowSink {
  std::map<std::int64_t, std::uint64_t> rows;
  void add(std::int64_t weight, std::int64_t mult) {
    if (mult == 0) return;
    if (mult < 0 || weight < 0)
      throw Reject("RejectOutOfDomain",
                   "table row evaluated to a negative entry");
    rows[weight] += static_cast<std::uint64_t>(mult);
  }
};

void check_binary_triple(const TheoremParams& pr, int wt) {
  require(pr.p == 2, "p = 2");
  require(pr.n == 2 * pr.m, "n = 2m");
  require(pr.m >= static_cast<std::uint32_t>(wt) + 3, "m >= wt(t) + 3");
}

// Binary trace-product Walsh tables; `sink(value, mult)`.
template <typename F>
void triple_walsh_rows(const TheoremParams& pr, int wt, F&& sink) {
  const std::uint32_t n = pr.n, m = pr.m;
  const std::int64_t w0 = 3 * ipow(2, n - 2) - ipow(2, m - 2);
  sink(w0, 1);
  if (wt == 4) {
    const std::int64_t blk = ipow(2, n - 7) + ipow(2, m - 7);
    for (int i = 0; i <= 1; ++i) {
      const std::int64_t sign = i ? -1 : 1;
      sink(sign * ipow(2, m - 2), 35 * blk - (i ? ipow(2, m) + 1 : 0));
      sink(sign * 3 * ipow(2, m - 2), 21 * blk);
      sink(sign * 5 * ipow(2, m - 2), 7 * blk);
      sink(sign * 7 * ipow(2, m - 2), blk);
    }
  } else {
    const std::int64_t blk = ipow(2, n - 6) + ipow(2, m - 6);
    sink(7 * ipow(2, m - 2), blk);
    for (int i = 0; i <= 1; ++i) {
      const std::int64_t sign = i ? -1 : 1;
      sink(sign * ipow(2, m - 2), (16 + 3 * i) * blk - (i ? ipow(2, m) + 1 : 0));
      sink(sign * 3 * ipow(2, m - 2), (9 + 3 * i) * blk);
      sink(sign * 5 * ipow(2, m - 2), (4 - i) * blk);
    }
  }
}

template <typename F>
void singly_even_walsh_rows(const TheoremParams& pr, F&& sink) {
  const std::uint32_t n = pr.n, m = pr.m;
  sink(ipow(2, n - 1) - ipow(2, m - 1) - 4, 1);
  for (int i = 0; i <= 1; ++i) {
    const std::int64_t sign = i ? -1 : 1;
    sink(sign * ipow(2, m - 1) - 4,
         3 * ipow(2, n - 5) + (3 - 8 * i) * ipow(2, m - 3) - i);
    sink(sign * 3 * ipow(2, m - 1) - 4, ipow(2, n - 5) + ipow(2, m - 3));
  }
}

}  // namespace

PredictedDistribution predict(TheoremId id, const TheoremParams& pr) {
  PredictedDistribution out;
  out.id = id;
  out.params = pr;
  RowSink sink;

  switch (id) {
    case TheoremId::TripleProductWt4:
    case TheoremId::TripleProductWt3: {
      const int wt = id == TheoremId::TripleProductWt4 ? 4 : 3;
      check_binary_triple(pr, wt);
      out.length = static_cast<std::uint64_t>(ipow(2, pr.n)) - 1;
      out.codeword_count = static_cast<std::uint64_t>(ipow(2, pr.n + 1));
      sink.add(0, 1);
      // weight = (2^n - W)/2 for each Walsh value, plus the pure trace rows.
      triple_walsh_rows(pr, wt, [&](std::int64_t w, std::int64_t mult) {
        sink.add((ipow(2, pr.n) - w) / 2, mult);
      });
      sink.add(ipow(2, pr.n - 1), ipow(2, pr.n) - 1);
      break;
    }
    case TheoremId::SinglyEvenSubspace: {
      require(pr.p == 2, "p = 2");
      require(pr.n == 2 * pr.m, "n = 2m");
      require(pr.m >= 3, "n = 2m >= 6");
      out.length = static_cast<std::uint64_t>(ipow(2, pr.n)) - 1;
      out.codeword_count = static_cast<std::uint64_t>(ipow(2, pr.n - 1));
      sink.add(0, 1);
      singly_even_walsh_rows(pr, [&](std::int64_t w, std::int64_t mult) {
        sink.add((ipow(2, pr.n) - w) / 2, mult);
      });
      sink.add(ipow(2, pr.n - 1), ipow(2, pr.n - 2) - 1);
      break;
    }
    case TheoremId::Ftee1Mod4: {
      require(pr.p > 2, "p odd");
      const std::int64_t q = ipow(pr.p, pr.n);
      require(q % 4 == 1, "p^n = 1 mod 4");
      out.length = static_cast<std::uint64_t>(q);
      out.codeword_count = static_cast<std::uint64_t>(ipow(pr.p, pr.n + 1));
      sink.add(0, 1);
      sink.add(q, pr.p - 1);
      sink.add((pr.p - 1) * ipow(pr.p, pr.n - 1), ipow(pr.p, pr.n + 1) - pr.p);
      break;
    }
    case TheoremId::Ftee3Mod4: {
      require(pr.p > 2, "p odd");
      const std::int64_t q = ipow(pr.p, pr.n);
      require(q % 4 == 3, "p^n = 3 mod 4");
      out.length = static_cast<std::uint64_t>(q);
      out.codeword_count = static_cast<std::uint64_t>(ipow(pr.p, pr.n + 1));
      const std::int64_t base = (pr.p - 1) * ipow(pr.p, pr.n - 1);
      const std::int64_t dev = ipow(pr.p, (pr.n - 1) / 2);
      sink.add(0, 1);
      sink.add(q, pr.p - 1);
      sink.add(base, q - 1);
      sink.add(base - dev, (pr.p - 1) * (q - 1) / 2);
      sink.add(base + dev, (pr.p - 1) * (q - 1) / 2);
      break;
    }
    case TheoremId::FaEven: {
      require(pr.p > 2, "p odd");
      require(pr.s > 0 && pr.s < pr.n, "0 < s < n");
      require(pr.n - pr.s > 2, "n - s > 2");
      require((pr.n + pr.s) % 2 == 0, "n + s even");
      require(pr.epsilon == 1 || pr.epsilon == -1, "epsilon in {1, -1}");
      const std::uint32_t p = pr.p, n = pr.n, s = pr.s;
      out.length = static_cast<std::uint64_t>(ipow(p, n)) - 1;
      out.codeword_count = static_cast<std::uint64_t>(ipow(p, n + 1));
      const int em1 = quad_char_mod(p, -1);
      auto eta_pow = [&](std::uint32_t k) { return k % 2 ? em1 : 1; };
      const std::int64_t e3 = pr.epsilon * eta_pow((n + s) / 2);
      const std::int64_t e2 = pr.epsilon * eta_pow(n + (n - s) / 2);
      const std::int64_t ph = ipow(p, (n + s) / 2 - 1);  // p^{(n+s)/2 - 1}
      const std::int64_t pl = ipow(p, (n - s) / 2 - 1);  // p^{(n-s)/2 - 1}
      const std::int64_t pn1 = ipow(p, n - 1);
      sink.add(0, 1);
      sink.add((p - 1) * pn1,
               (p - 1) * (ipow(p, n) - ipow(p, n - s)) + ipow(p, n) - 1);
      sink.add((p - 2) * (pn1 - e3 * ph), p - 1);
      sink.add((p - 1) * pn1 - e3 * (p - 2) * ph,
               (p - 1) * (2 * ipow(p, n - s - 1) + e2 * (p - 2) * pl - 1));
      sink.add((p - 1) * pn1 + e3 * 2 * ph,
               (p - 1) * (p - 2) * (ipow(p, n - s - 1) - e2 * pl));
      break;
    }
    case TheoremId::FaOdd: {
      require(pr.p > 2, "p odd");
      require(pr.s > 0 && pr.s < pr.n, "0 < s < n");
      require(pr.n - pr.s > 2, "n - s > 2");
      require((pr.n + pr.s) % 2 == 1, "n + s odd");
      require(pr.epsilon == 1 || pr.epsilon == -1, "epsilon in {1, -1}");
      require(pr.a >= 1 && pr.a < pr.p, "a in GF(p)*");
      const std::uint32_t p = pr.p, n = pr.n, s = pr.s;
      out.length = static_cast<std::uint64_t>(ipow(p, n)) - 1;
      out.codeword_count = static_cast<std::uint64_t>(ipow(p, n + 1));
      const int em1 = quad_char_mod(p, -1);
      const int ea = quad_char_mod(p, pr.a);
      const int ema = quad_char_mod(p, -static_cast<std::int64_t>(pr.a));
      auto eta_pow = [&](std::uint32_t k) { return k % 2 ? em1 : 1; };
      const std::int64_t epr =
          pr.epsilon * eta_pow((n + s + 1) / 2) * ipow(p, (n + s - 1) / 2);
      const std::int64_t e1r =
          pr.epsilon * eta_pow(n + (n - s - 1) / 2) * ipow(p, (n - s - 1) / 2);
      const std::int64_t pn1 = ipow(p, n - 1);
      const std::int64_t pns1 = ipow(p, n - s - 1);
      sink.add(0, 1);
      sink.add((p - 1) * pn1,
               ((p - 1) * (p - 1) * pns1 + (p - 1) * ea * (1 - em1) * e1r) / 2 +
                   ipow(p, n + 1) - (p - 1) * ipow(p, n - s) - 1);
      sink.add((p - 2) * pn1 - epr * ea, p - 1);
      sink.add((p - 1) * pn1 - epr * ea, (p - 1) * (pns1 - 1));
      sink.add((p - 1) * pn1 - epr * ema, (p - 1) * (pns1 + e1r * ema));
      sink.add((p - 1) * pn1 + 2 * epr * ea,
               (p - 1) * ((p - 3 + ea * (1 + em1)) / 4) * (pns1 - e1r));
      sink.add((p - 1) * pn1 - 2 * epr * ea,
               (p - 1) * ((p - 3 - ea * (1 + em1)) / 4) * (pns1 + e1r));
      break;
    }
    default:
      throw Reject("RejectOutOfDomain",
                   "Walsh-value tables have no weight distribution");
  }

  for (const auto& [w, m] : sink.rows)
    out.rows.emplace_back(static_cast<std::uint64_t>(w), m);
  std::uint64_t total = 0;
  for (const auto& [w, m] : out.rows) total += m;
  if (total != out.codeword_count)
    throw Reject("RejectOutOfDomain",
                 "table multiplicities do not sum to the codeword count "
                 "(paper-errata candidate)");
  return out;
}

WalshPrediction predict_walsh(TheoremId id, const TheoremParams& pr) {
  std::map<std::int64_t, std::uint64_t> rows;
  auto sink = [&](std::int64_t v, std::int64_t mult) {
    if (mult == 0) return;
    if (mult < 0)
      throw Reject("RejectOutOfDomain", "negative multiplicity");
    rows[v] += static_cast<std::uint64_t>(mult);
  };
  if (id == TheoremId::TripleProductWalsh) {
    const int wt = pr.t_weight;
    require(wt == 3 || wt == 4, "wt(t) in {3, 4}");
    check_binary_triple(pr, wt);
    triple_walsh_rows(pr, wt, sink);
  } else if (id == TheoremId::SinglyEvenWalsh) {
    require(pr.p == 2, "p = 2");
    require(pr.n == 2 * pr.m && pr.m >= 3, "n = 2m >= 6");
    singly_even_walsh_rows(pr, sink);
  } else {
    throw Reject("RejectOutOfDomain", "not a Walsh-value table");
  }
  WalshPrediction out;
  out.rows.assign(rows.begin(), rows.end());
  return out;
}

DiffReport diff(const PredictedDistribution& pred,
                const WeightDistribution& computed) {
  DiffReport r;
  std::ostringstream os;
  if (pred.length != computed.length) {
    os << "length: predicted " << pred.length << ", computed " << computed.length;
    r.first_mismatch = os.str();
    return r;
  }
  std::map<std::uint64_t, std::uint64_t> a(pred.rows.begin(), pred.rows.end());
  std::map<std::uint64_t, std::uint64_t> b(computed.rows.begin(),
                                           computed.rows.end());
  for (const auto& [w, m] : a) {
    const auto it = b.find(w);
    const std::uint64_t got = it == b.end() ? 0 : it->second;
    if (got != m) {
      os << "weight " << w << ": predicted x" << m << ", computed x" << got;
      r.first_mismatch = os.str();
      return r;
    }
  }
  for (const auto& [w, m] : b) {
    if (!a.count(w)) {
      os << "weight " << w << ": predicted x0, computed x" << m;
      r.first_mismatch = os.str();
      return r;
    }
  }
  r.match = true;
  return r;
}

}  // namespace socode
