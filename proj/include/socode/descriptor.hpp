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

#include <string>

#include "socode/codes.hpp"

namespace socode {

// Field spec text format:
//   "p=2 n=14 mod=1,0,0,1,0,1,0,1,0,0,0,0,0,0,1 [prim=K]"
// (modulus coefficients low to high; prim is an element index, defaulting to
// the smallest generator), or one of the named presets: gf2_12, gf2_14,
// gf2_16, gf3_4, gf3_5 (each uses x itself as the primitive element).
FieldPtr parse_field(const std::string& text);

// Element literals: "g^K" (primitive element to the K-th power), "x" (the
// class of x), or a plain decimal element index ("0" is zero, constants
// c < p are themselves).
Fq parse_element(const FieldCtx& ctx, const std::string& text);

// Function descriptors:
//   tripleprod:l1=<elt>,l2=<elt>,l3=<elt>
//   singlyeven:l1=<elt>,l2=<elt>,w1=<elt>,w2=<elt>
//   gl:l=<elt>
//   ftee:t=<int>
//   quad:<elt>@<i>[,<elt>@<i>...]      (term <elt> * x^{p^i+1})
//   fa:a=<int>;<base descriptor>
PAryFunction parse_function(FieldPtr ctx, const std::string& text);

}  // namespace socode
