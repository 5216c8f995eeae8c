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

// Command-line front end: named worked-example presets, ad-hoc analysis of a
// (field, function, construction) triple, and the parameter searches.
// Exit codes: 0 = success/match, 1 = usage or validation error,
// 2 = computed-vs-expected mismatch.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "socode/descriptor.hpp"
#include "socode/presets.hpp"
#include "socode/search.hpp"

namespace {

using namespace socode;

CodeKind parse_kind(const std::string& k) {
  if (k == "punctured") return CodeKind::Punctured;
  if (k == "full") return CodeKind::Full;
  if (k == "augmented") return CodeKind::Augmented;
  throw Reject("RejectParse", "kind must be punctured, full or augmented");
}

int cmd_analyze(const std::string& field, const std::string& fn,
                const std::string& kind, const std::string& beta_domain_str,
                bool json, const std::string& csv_path,
                const std::string& spectrum_path, int threads) {
  FieldPtr ctx = parse_field(field);
  CodeSpec spec;
  spec.f = parse_function(ctx, fn);
  spec.kind = parse_kind(kind);
  if (beta_domain_str != "full") {
    if (beta_domain_str.rfind("V:", 0) != 0)
      throw Reject("RejectParse", "beta domain must be 'full' or 'V:w1,w2,...'");
    std::vector<Fq> constraints;
    std::string rest = beta_domain_str.substr(2);
    std::size_t pos = 0;
    while (pos != std::string::npos) {
      const std::size_t comma = rest.find(',', pos);
      const std::string lit = rest.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      constraints.push_back(parse_element(*ctx, lit));
      pos = comma == std::string::npos ? comma : comma + 1;
    }
    spec.subspace_basis = ctx->trace_kernel_basis(constraints);
  }

  if (!spectrum_path.empty()) {
    const WalshSpectrum w = walsh_transform(spec.f);
    std::ofstream os(spectrum_path);
    const std::uint32_t p = w.p();
    os << "beta_index";
    for (std::uint32_t a = 0; a < p; ++a) os << ",c" << a;
    os << "\n";
    for (std::uint64_t b = 0; b < w.q(); ++b) {
      os << b;
      for (std::uint32_t a = 0; a < p; ++a) os << "," << w.counts[b * p + a];
      os << "\n";
    }
  }

  const AnalysisReport report = analyze(spec, threads);
  if (!csv_path.empty()) {
    std::ofstream os(csv_path);
    os << weights_to_csv(report.dist);
  }
  if (json) {
    std::cout << report_to_json(report) << "\n";
  } else {
    std::cout << "[" << report.length << ", " << report.dimension << ", "
              << report.min_distance << "] " << report.dist.enumerator()
              << "\n";
    std::cout << report_to_json(report) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-orthogonal minimal linear codes from p-ary functions"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker thread cap")->capture_default_str();

  // example
  auto* ex = app.add_subcommand("example", "run a named worked example");
  std::string ex_name;
  bool ex_json = false;
  ex->add_option("name", ex_name, "preset name (ex-3.1a ... ex-4.2b)")->required();
  ex->add_flag("--json", ex_json, "emit the report as JSON");

  // analyze
  auto* an = app.add_subcommand("analyze", "analyze an ad-hoc construction");
  std::string an_field, an_fn, an_kind = "punctured", an_domain = "full";
  std::string an_csv, an_spectrum;
  bool an_json = false;
  an->add_option("--field", an_field, "field spec or named field")->required();
  an->add_option("--fn", an_fn, "function descriptor")->required();
  an->add_option("--kind", an_kind, "punctured|full|augmented")
      ->capture_default_str();
  an->add_option("--beta-domain", an_domain, "full or V:w1,w2,...")
      ->capture_default_str();
  an->add_flag("--json", an_json, "emit JSON only");
  an->add_option("--csv", an_csv, "write the weight table as CSV");
  an->add_option("--emit-spectrum", an_spectrum, "dump the Walsh counts as CSV");

  // search
  auto* se = app.add_subcommand("search", "locate admissible parameter sets");
  se->require_subcommand(1);
  std::uint64_t budget = 100000, seed = 0;
  se->add_option("--budget", budget, "max candidate evaluations")
      ->capture_default_str();
  se->add_option("--seed", seed, "enumeration shift")->capture_default_str();

  auto* st = se->add_subcommand("triple", "lambda triples with a target t-weight");
  std::string st_field;
  std::uint32_t st_m = 0;
  int st_wt = 4;
  st->add_option("--field", st_field, "field spec (GF(2^{2m})); default built from --m");
  st->add_option("--m", st_m, "half degree m");
  st->add_option("--wt", st_wt, "target t-vector weight (3 or 4)")
      ->capture_default_str();

  auto* sw = se->add_subcommand("wpair", "w pairs for a lambda pair");
  std::string sw_field, sw_l1, sw_l2;
  sw->add_option("--field", sw_field, "field spec")->required();
  sw->add_option("--l1", sw_l1, "first lambda")->required();
  sw->add_option("--l2", sw_l2, "second lambda")->required();

  auto* sp = se->add_subcommand("plateaued", "unbalanced plateaued quadratics");
  std::string sp_field;
  std::uint32_t sp_s = 1;
  bool sp_unbalanced = false;
  sp->add_option("--field", sp_field, "field spec")->required();
  sp->add_option("--s", sp_s, "target plateau exponent")->capture_default_str();
  sp->add_flag("--unbalanced", sp_unbalanced, "require W(0) != 0");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ex) return run_example(ex_name, ex_json, threads, std::cout);
    if (*an)
      return cmd_analyze(an_field, an_fn, an_kind, an_domain, an_json, an_csv,
                         an_spectrum, threads);
    if (*se) {
      SearchOptions opt;
      opt.budget = budget;
      opt.seed = seed;
      opt.threads = threads;
      if (*st) {
        std::string field = st_field;
        if (field.empty()) {
          if (st_m == 0)
            throw Reject("RejectParse", "triple search needs --field or --m");
          // Default moduli for the fields the examples use.
          if (st_m == 6) field = "gf2_12";
          else if (st_m == 7) field = "gf2_14";
          else if (st_m == 8) field = "gf2_16";
          else
            throw Reject("RejectParse",
                         "no named field for this m; pass --field");
        }
        TripleLambdaTask task{parse_field(field), st_wt};
        const auto res = run(task, opt);
        for (const auto& c : res.found)
          std::cout << "{\"e\":[" << c.e1 << "," << c.e2 << "," << c.e3
                    << "],\"lambda\":[" << c.l1 << "," << c.l2 << "," << c.l3
                    << "],\"t\":[" << c.t.t1 << "," << c.t.t2 << "," << c.t.t3
                    << "," << c.t.t4 << "],\"rank\":" << c.inverse_rank << "}\n";
        std::cerr << (res.exhausted_budget ? "budget exhausted" : "space covered")
                  << ", " << res.candidates_examined << " candidates, "
                  << res.found.size() << " certified\n";
        return 0;
      }
      if (*sw) {
        FieldPtr ctx = parse_field(sw_field);
        WPairTask task{ctx, parse_element(*ctx, sw_l1), parse_element(*ctx, sw_l2)};
        const auto res = run(task, opt);
        for (const auto& c : res.found)
          std::cout << "{\"w1\":" << c.w1 << ",\"w2\":" << c.w2 << ",\"w1_log\":"
                    << ctx->log(c.w1) << ",\"w2_log\":" << ctx->log(c.w2)
                    << "}\n";
        std::cerr << (res.exhausted_budget ? "budget exhausted" : "space covered")
                  << ", " << res.candidates_examined << " candidates, "
                  << res.found.size() << " certified\n";
        return 0;
      }
      if (*sp) {
        PlateauedQuadTask task{parse_field(sp_field), sp_s, sp_unbalanced};
        const auto res = run(task, opt);
        for (const auto& c : res.found) {
          std::cout << "{\"coeff_logs\":[";
          for (std::size_t i = 0; i < c.exps.size(); ++i)
            std::cout << (i ? "," : "") << c.exps[i];
          std::cout << "],\"coeffs\":[";
          for (std::size_t i = 0; i < c.coeffs.size(); ++i)
            std::cout << (i ? "," : "") << c.coeffs[i];
          std::cout << "],\"s\":" << c.s << ",\"epsilon\":" << c.epsilon
                    << ",\"balanced\":" << (c.balanced ? "true" : "false")
                    << "}\n";
        }
        std::cerr << (res.exhausted_budget ? "budget exhausted" : "space covered")
                  << ", " << res.candidates_examined << " candidates, "
                  << res.found.size() << " certified\n";
        return 0;
      }
    }
  } catch (const Reject& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
