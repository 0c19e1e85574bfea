// Copyright 2026 The exunits authors
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

#include "exunits/common.hpp"
#include "exunits/gf.hpp"
#include "exunits/mat2.hpp"
#include "exunits/quat.hpp"
#include "exunits/ring.hpp"

namespace exunits {

// Ring grammar, whitespace-insensitive:
//   spec   := factor { "x" factor }
//   factor := "Zn:" int | "GF:" prime "^" int | "GR:" prime "^" int ":" int
// Zn:m expands into its prime-power factors in ascending prime order; the
// written factor order is otherwise preserved.
RingSpec parse_ring_spec(const std::string& text);

// Canonical form: "Zn:p^n" factors print by modulus value, r > 1 factors as
// "GF:p^r" (n = 1) or "GR:p^n:r", joined by " x ". parse(print(R)) == R.
std::string print_ring_spec(const RingSpec& R);

enum class ElemKind { Quat, Mat2 };

// Quaternion literal: ['-'] term { ('+'|'-') term }, term := coeff [basis]
// or a bare basis i, j, k. A coeff is an integer (mapped to v * 1 per local
// factor) or a bracketed tuple: one entry per factor (entries are integers
// or per-factor coefficient vectors), or a flat coefficient vector when the
// ring has one factor. Repeated basis terms accumulate.
//
// Matrix literal "[[a,b],[c,d]]" (kind Mat2) requires a single field factor
// of odd order; the matrix is carried back to a quaternion through the
// standard embedding, which preserves all counts.
Quaternion parse_element(const RingSpec& R, const std::string& text, ElemKind kind);

// Matrix literal over F; entries are integers or coefficient vectors.
Mat2 parse_mat2(const FieldSpec& F, const std::string& text);

// Element printers; output parses back to the same element.
std::string print_field_elem(const FieldSpec& F, const FieldElem& a);
std::string print_ring_elem(const RingSpec& R, const RingElem& a);
std::string print_quaternion(const RingSpec& R, const Quaternion& a);
std::string print_mat2(const FieldSpec& F, const Mat2& A);

}  // namespace exunits
