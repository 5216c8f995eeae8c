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

#include "socode/presets.hpp"

#include <ostream>

#include "socode/descriptor.hpp"

namespace socode {

const std::vector<Preset>& paper_presets() {
  static const std::vector<Preset> presets = [] {
    std::vector<Preset> v;

    // Doubly-even triple-product code, wt(t) = 4 over GF(2^14).
    v.push_back(Preset{
        "ex-3.1a",
        "gf2_14",
        "tripleprod:l1=g^129,l2=g^258,l3=g^516",
        CodeKind::Punctured,
        {},
        16383,
        15,
        2064,
        {{0, 1},
         {2064, 1},
         {8080, 129},
         {8112, 903},
         {8144, 2709},
         {8176, 4515},
         {8192, 16383},
         {8208, 4386},
         {8240, 2709},
         {8272, 903},
         {8304, 129}},
        true,
        true,
        std::nullopt,
        TheoremId::TripleProductWt4,
        TheoremParams{2, 14, 7, 0, 1, 1, 4},
    });

    // Same family with t1 = 1, wt(t2,t3,t4) = 2 over GF(2^12).
    v.push_back(Preset{
        "ex-3.1b",
        "gf2_12",
        "tripleprod:l1=g^65,l2=g^1365,l3=g^0",
        CodeKind::Punctured,
        {},
        4095,
        13,
        520,
        {{0, 1},
         {520, 1},
         {1992, 65},
         {2008, 260},
         {2024, 585},
         {2040, 1040},
         {2048, 4095},
         {2056, 1170},
         {2072, 780},
         {2088, 195}},
        true,
        true,
        std::nullopt,
        TheoremId::TripleProductWt3,
        TheoremParams{2, 12, 6, 0, 1, 1, 3},
    });

    // Singly-even subspace code over GF(2^16); beta ranges over the trace
    // kernel of {w1, w2}.
    v.push_back(Preset{
        "ex-3.2",
        "gf2_16",
        "singlyeven:l1=g^257,l2=g^514,w1=g^3084,w2=g^42148",
        CodeKind::Punctured,
        {"g^3084", "g^42148"},
        65535,
        15,
        16450,
        {{0, 1},
         {16450, 1},
         {32578, 2080},
         {32706, 6240},
         {32768, 16383},
         {32834, 5983},
         {32962, 2080}},
        true,
        true,
        std::nullopt,
        TheoremId::SinglyEvenSubspace,
        TheoremParams{2, 16, 8, 0, 1, 1, 4},
    });

    // Square-indicator code, p^n = 1 mod 4. The published parameter line
    // says [243, 6, 54], which contradicts the published enumerator
    // 1 + 240z^54 + 2z^81 (243 codewords, top weight 81); the corrected
    // [81, 5, 54] is what the table and the computation give.
    v.push_back(Preset{
        "ex-4.1a",
        "gf3_4",
        "ftee:t=1",
        CodeKind::Full,
        {},
        81,
        5,
        54,
        {{0, 1}, {54, 240}, {81, 2}},
        true,
        false,
        "published parameters read [243, 6, 54]; the published enumerator "
        "1+240z^54+2z^81 forces [81, 5, 54], which is what this tool checks "
        "against",
        TheoremId::Ftee1Mod4,
        TheoremParams{3, 4, 0, 0, 1, 1, 4},
    });

    // Square-indicator code, p^n = 3 mod 4.
    v.push_back(Preset{
        "ex-4.1b",
        "gf3_5",
        "ftee:t=1",
        CodeKind::Full,
        {},
        243,
        6,
        153,
        {{0, 1}, {153, 242}, {162, 242}, {171, 242}, {243, 2}},
        true,
        false,
        std::nullopt,
        TheoremId::Ftee3Mod4,
        TheoremParams{3, 5, 0, 0, 1, 1, 4},
    });

    // Plateaued-shift code from a 1-plateaued base (n + s even). The table
    // sign is the one the classification derives from exact arithmetic
    // (epsilon = -1 under the Gauss-sum branch).
    v.push_back(Preset{
        "ex-4.2a",
        "gf3_5",
        "fa:a=1;quad:1@0,g^23@1,g^4@2",
        CodeKind::Punctured,
        {},
        242,
        6,
        72,
        {{0, 1}, {72, 2}, {153, 112}, {162, 566}, {180, 48}},
        true,
        true,
        std::nullopt,
        TheoremId::FaEven,
        TheoremParams{3, 5, 0, 1, -1, 1, 4},
    });

    // Plateaued-shift code from a 2-plateaued base (n + s odd). The
    // published theorem calls this family minimal, but for this instance the
    // weight-162 trace word at beta = x covers the weight-54 word f_a itself
    // (direct support containment), so the code is not minimal; the preset
    // matches the computed truth and says so.
    v.push_back(Preset{
        "ex-4.2b",
        "gf3_5",
        "fa:a=1;quad:g^1@0,1@1,2@2",
        CodeKind::Punctured,
        {},
        242,
        6,
        54,
        {{0, 1}, {54, 2}, {135, 16}, {162, 698}, {189, 12}},
        true,
        false,
        "published claim says this code is minimal; the exact pair scan finds "
        "a covering pair (the weight-162 trace word at beta = x covers the "
        "weight-54 word f_a), so the tool checks against not-minimal",
        TheoremId::FaOdd,
        TheoremParams{3, 5, 0, 2, 1, 1, 4},
    });

    return v;
  }();
  return presets;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : paper_presets())
    if (p.name == name) return &p;
  return nullptr;
}

CodeSpec build_preset_code(const Preset& preset) {
  FieldPtr ctx = parse_field(preset.field);
  CodeSpec spec;
  spec.f = parse_function(ctx, preset.descriptor);
  spec.kind = preset.kind;
  if (!preset.kernel_of.empty()) {
    std::vector<Fq> constraints;
    for (const auto& lit : preset.kernel_of)
      constraints.push_back(parse_element(*ctx, lit));
    spec.subspace_basis = ctx->trace_kernel_basis(constraints);
  }
  return spec;
}

int run_example(const std::string& name, bool json, int threads,
                std::ostream& out) {
  const Preset* preset = find_preset(name);
  if (!preset) throw Reject("UnknownPreset", "no preset named '" + name + "'");

  const CodeSpec spec = build_preset_code(*preset);
  const AnalysisReport report = analyze(spec, threads);
  const PredictedDistribution pred = predict(preset->theorem, preset->tparams);
  const DiffReport table_diff = diff(pred, report.dist);

  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      out << "MISMATCH: " << what << "\n";
    }
  };

  check(report.length == preset->exp_length, "length");
  check(report.dimension == preset->exp_k, "dimension");
  check(report.min_distance == preset->exp_d, "minimum distance");
  check(report.dist.rows == preset->exp_weights, "weight enumerator");
  check(report.so_direct == preset->exp_self_orthogonal,
        "self-orthogonality (direct)");
  if (report.so_criterion.has_value())
    check(*report.so_criterion == preset->exp_self_orthogonal,
          "self-orthogonality (criterion)");
  check(report.minimal == preset->exp_minimal, "minimality");
  check(table_diff.match, "closed-form table: " + table_diff.first_mismatch);

  if (preset->errata_note)
    out << "note (errata): " << *preset->errata_note << "\n";

  if (json) {
    out << report_to_json(report) << "\n";
  } else {
    out << name << ": [" << report.length << ", " << report.dimension << ", "
        << report.min_distance << "]\n";
    out << "  enumerator: " << report.dist.enumerator() << "\n";
    out << "  self-orthogonal: " << (report.so_direct ? "yes" : "no")
        << " (direct)";
    if (report.so_criterion.has_value())
      out << ", " << (*report.so_criterion ? "yes" : "no") << " ("
          << report.criterion_name << ")";
    out << "\n";
    out << "  minimal: " << (report.minimal ? "yes" : "no") << " ("
        << report.minimal_method << " method)\n";
    out << "  ab: "
        << (report.ab == AbStatus::Satisfies
                ? "satisfies"
                : report.ab == AbStatus::Boundary ? "boundary" : "violates")
        << ", divisibility: " << report.div.delta << "\n";
    out << "  closed-form table: " << (table_diff.match ? "match" : "MISMATCH")
        << "\n";
  }
  out << (ok ? "OK" : "FAILED") << ": " << name << "\n";
  return ok ? 0 : 2;
}

}  // namespace socode
