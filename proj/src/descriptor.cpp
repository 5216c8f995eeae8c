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

#include "socode/descriptor.hpp"

#include <cstdlib>
#include <sstream>
#include <unordered_map>

namespace socode {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  if (s.empty()) throw Reject("RejectParse", "empty " + what);
  char* end = nullptr;
  const std::uint64_t v = std::strtoull(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size())
    throw Reject("RejectParse", "bad " + what + " near '" + s + "'");
  return v;
}

// key=value pairs separated by commas.
std::unordered_map<std::string, std::string> parse_kv(const std::string& s) {
  std::unordered_map<std::string, std::string> out;
  for (const auto& part : split(s, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw Reject("RejectParse", "expected key=value near '" + part + "'");
    out[part.substr(0, eq)] = part.substr(eq + 1);
  }
  return out;
}

const std::string& require_key(
    const std::unordered_map<std::string, std::string>& kv,
    const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw Reject("RejectParse", "missing key '" + key + "'");
  return it->second;
}

}  // namespace

FieldPtr parse_field(const std::string& text) {
  struct NamedField {
    std::uint32_t p, n;
    std::vector<std::uint8_t> mod;
  };
  // Moduli are the ones the worked examples use; x is primitive in each.
  static const std::unordered_map<std::string, NamedField> named = {
      {"gf2_12", {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}}},
      {"gf2_14", {2, 14, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}}},
      {"gf2_16", {2, 16, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}}},
      {"gf3_4", {3, 4, {2, 0, 0, 2, 1}}},
      {"gf3_5", {3, 5, {1, 2, 0, 0, 0, 1}}},
  };
  const auto it = named.find(text);
  if (it != named.end())
    return FieldCtx::build(it->second.p, it->second.n, it->second.mod,
                           it->second.p /* the class of x */);

  std::uint32_t p = 0, n = 0;
  std::vector<std::uint8_t> mod;
  std::optional<Fq> prim;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw Reject("RejectParse", "expected key=value near '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "p") p = static_cast<std::uint32_t>(parse_u64(val, "p"));
    else if (key == "n") n = static_cast<std::uint32_t>(parse_u64(val, "n"));
    else if (key == "mod") {
      for (const auto& c : split(val, ','))
        mod.push_back(static_cast<std::uint8_t>(parse_u64(c, "modulus coefficient")));
    } else if (key == "prim") {
      prim = static_cast<Fq>(parse_u64(val, "prim"));
    } else {
      throw Reject("RejectParse", "unknown field key '" + key + "'");
    }
  }
  if (p == 0 || n == 0 || mod.empty())
    throw Reject("RejectParse", "field spec needs p=, n= and mod=");
  return FieldCtx::build(p, n, std::move(mod), prim);
}

Fq parse_element(const FieldCtx& ctx, const std::string& text) {
  if (text.empty()) throw Reject("RejectParse", "empty element literal");
  if (text == "x") return static_cast<Fq>(ctx.p());
  if (text.rfind("g^", 0) == 0) {
    const char* s = text.c_str() + 2;
    char* end = nullptr;
    const long long e = std::strtoll(s, &end, 10);
    if (end != text.c_str() + text.size())
      throw Reject("RejectParse", "bad exponent in '" + text + "'");
    return ctx.gpow(e);
  }
  const std::uint64_t idx = parse_u64(text, "element index");
  if (idx >= ctx.q())
    throw Reject("RejectParse", "element index out of range: " + text);
  return static_cast<Fq>(idx);
}

PAryFunction parse_function(FieldPtr ctx, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Reject("RejectParse", "descriptor needs 'family:args'");
  const std::string family = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);

  if (family == "tripleprod") {
    const auto kv = parse_kv(args);
    return triple_product(ctx, parse_element(*ctx, require_key(kv, "l1")),
                          parse_element(*ctx, require_key(kv, "l2")),
                          parse_element(*ctx, require_key(kv, "l3")));
  }
  if (family == "singlyeven") {
    const auto kv = parse_kv(args);
    return singly_even_function(ctx, parse_element(*ctx, require_key(kv, "l1")),
                                parse_element(*ctx, require_key(kv, "l2")),
                                parse_element(*ctx, require_key(kv, "w1")),
                                parse_element(*ctx, require_key(kv, "w2")));
  }
  if (family == "gl") {
    const auto kv = parse_kv(args);
    return monomial_bent(ctx, parse_element(*ctx, require_key(kv, "l")));
  }
  if (family == "ftee") {
    const auto kv = parse_kv(args);
    return f_t_function(ctx, static_cast<std::uint32_t>(
                                 parse_u64(require_key(kv, "t"), "t")));
  }
  if (family == "quad") {
    std::vector<std::pair<Fq, std::uint32_t>> coeffs;
    for (const auto& term : split(args, ',')) {
      const auto at = term.find('@');
      if (at == std::string::npos)
        throw Reject("RejectParse", "quad term needs coef@i near '" + term + "'");
      coeffs.emplace_back(
          parse_element(*ctx, term.substr(0, at)),
          static_cast<std::uint32_t>(parse_u64(term.substr(at + 1), "exponent index")));
    }
    return quadratic_form(ctx, coeffs);
  }
  if (family == "fa") {
    const auto semi = args.find(';');
    if (semi == std::string::npos)
      throw Reject("RejectParse", "fa needs 'fa:a=<int>;<base descriptor>'");
    const auto kv = parse_kv(args.substr(0, semi));
    const std::uint32_t a =
        static_cast<std::uint32_t>(parse_u64(require_key(kv, "a"), "a"));
    return f_a_from_plateaued(parse_function(ctx, args.substr(semi + 1)), a);
  }
  throw Reject("RejectParse", "unknown function family '" + family + "'");
}

}  // namespace socode
