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

#include <array>
#include <string>

#include "exunits/common.hpp"
#include "exunits/gf.hpp"

namespace exunits {

// Row-major 2x2 matrix [[a, b], [c, d]] over a finite field.
struct Mat2 {
    FieldElem a, b, c, d;

    bool operator==(const Mat2&) const = default;
};

Mat2 m_zero(const FieldSpec& F);
Mat2 m_identity(const FieldSpec& F);
Mat2 m_add(const FieldSpec& F, const Mat2& A, const Mat2& B);
Mat2 m_sub(const FieldSpec& F, const Mat2& A, const Mat2& B);
Mat2 m_neg(const FieldSpec& F, const Mat2& A);
Mat2 m_mul(const FieldSpec& F, const Mat2& A, const Mat2& B);
Mat2 m_scale(const FieldSpec& F, const FieldElem& s, const Mat2& A);
FieldElem m_det(const FieldSpec& F, const Mat2& A);
FieldElem m_trace(const FieldSpec& F, const Mat2& A);
bool m_is_invertible(const FieldSpec& F, const Mat2& A);

// |GL_2(F_q)| = (q^2 - 1)(q^2 - q).
BigInt gl2_order(u64 q);

// Dense index over M_2(F_q) with entry a the least significant digit.
u64 mat2_index(const FieldSpec& F, const Mat2& A);
Mat2 mat2_from_index(const FieldSpec& F, u64 idx);

// Conjugation-invariant classes of 2x2 matrices that control the tuple
// counts.  Every matrix falls into exactly one class.
enum class MatClassTag {
    Zero,              // C = 0
    Identity,          // C = I
    ScalarOther,       // C = lambda I, lambda outside {0, 1}
    InvertibleOther,   // det C != 0, C not scalar
    IdempotentRankOne, // det C = 0, C != 0, tr C = 1
    NilpotentNonzero,  // det C = 0, C != 0, tr C = 0
    LambdaIdempotent,  // det C = 0, C != 0, tr C outside {0, 1}
};

struct ResidueClass {
    MatClassTag tag = MatClassTag::Zero;
    FieldElem det;
    FieldElem trace;
    FieldElem lambda;  // scalar for ScalarOther, trace for LambdaIdempotent
};

ResidueClass classify(const FieldSpec& F, const Mat2& C);
std::string mat_class_name(MatClassTag tag);

// Algebra embedding of the quaternions over F_q, q odd, into M_2(F_q):
//   1 -> I,  i -> [[x, y], [y, -x]],  j -> [[0, 1], [-1, 0]],  k -> image(i) image(j)
// where x^2 + y^2 = -1.  The embedding is an isomorphism onto M_2(F_q) and
// sends the quaternion norm to the determinant.
class PsiMap {
  public:
    explicit PsiMap(const FieldSpec& F);

    const FieldSpec& field() const { return F_; }
    const Mat2& image_i() const { return bi_; }
    const Mat2& image_j() const { return bj_; }
    const Mat2& image_k() const { return bk_; }

    Mat2 apply(const std::array<FieldElem, 4>& coords) const;
    std::array<FieldElem, 4> invert(const Mat2& M) const;

  private:
    FieldSpec F_;
    Mat2 bi_, bj_, bk_;
    std::array<std::array<FieldElem, 4>, 4> inv_;
};

}  // namespace exunits
