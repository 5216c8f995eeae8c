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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "socode/theory.hpp"

namespace socode {

// A named worked example: how to build the code, what the verified data says
// it must come out as, and which closed-form table predicts it. For ex-4.1a
// the published parameter line disagrees with its own enumerator; the preset
// matches the corrected expectation and carries an errata note that is
// printed whenever the preset runs.
struct Preset {
  std::string name;
  std::string field;       // named field spec
  std::string descriptor;  // function descriptor
  CodeKind kind;
  // For subspace codes: the elements whose trace kernel is the beta domain.
  std::vector<std::string> kernel_of;

  std::uint64_t exp_length;
  std::uint32_t exp_k;
  std::uint64_t exp_d;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> exp_weights;
  bool exp_self_orthogonal;
  bool exp_minimal;

  std::optional<std::string> errata_note;

  TheoremId theorem;
  TheoremParams tparams;
};

const std::vector<Preset>& paper_presets();
const Preset* find_preset(const std::string& name);

// Builds the preset's code spec (field, function, domain).
CodeSpec build_preset_code(const Preset& preset);

// Runs analyze + the theory diff and prints a report. Returns the CLI exit
// code: 0 when everything matches the embedded expectation, 2 otherwise.
int run_example(const std::string& name, bool json, int threads,
                std::ostream& out);

}  // namespace socode
