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

#include "exunits/mat2.hpp"

#include <stdexcept>

namespace exunits {

Mat2 m_zero(const FieldSpec& F) {
    return Mat2{F.zero(), F.zero(), F.zero(), F.zero()};
}

Mat2 m_identity(const FieldSpec& F) {
    return Mat2{F.one(), F.zero(), F.zero(), F.one()};
}

Mat2 m_add(const FieldSpec& F, const Mat2& A, const Mat2& B) {
    return Mat2{F.add(A.a, B.a), F.add(A.b, B.b), F.add(A.c, B.c), F.add(A.d, B.d)};
}

Mat2 m_sub(const FieldSpec& F, const Mat2& A, const Mat2& B) {
    return Mat2{F.sub(A.a, B.a), F.sub(A.b, B.b), F.sub(A.c, B.c), F.sub(A.d, B.d)};
}

Mat2 m_neg(const FieldSpec& F, const Mat2& A) {
    return Mat2{F.neg(A.a), F.neg(A.b), F.neg(A.c), F.neg(A.d)};
}

Mat2 m_mul(const FieldSpec& F, const Mat2& A, const Mat2& B) {
    return Mat2{F.add(F.mul(A.a, B.a), F.mul(A.b, B.c)),
                F.add(F.mul(A.a, B.b), F.mul(A.b, B.d)),
                F.add(F.mul(A.c, B.a), F.mul(A.d, B.c)),
                F.add(F.mul(A.c, B.b), F.mul(A.d, B.d))};
}

Mat2 m_scale(const FieldSpec& F, const FieldElem& s, const Mat2& A) {
    return Mat2{F.mul(s, A.a), F.mul(s, A.b), F.mul(s, A.c), F.mul(s, A.d)};
}

FieldElem m_det(const FieldSpec& F, const Mat2& A) {
    return F.sub(F.mul(A.a, A.d), F.mul(A.b, A.c));
}

FieldElem m_trace(const FieldSpec& F, const Mat2& A) { return F.add(A.a, A.d); }

bool m_is_invertible(const FieldSpec& F, const Mat2& A) {
    return !F.is_zero(m_det(F, A));
}

BigInt gl2_order(u64 q) {
    BigInt Q = q;
    return (Q * Q - 1) * (Q * Q - Q);
}

u64 mat2_index(const FieldSpec& F, const Mat2& A) {
    u64 q = F.q();
    return F.index(A.a) + q * (F.index(A.b) + q * (F.index(A.c) + q * F.index(A.d)));
}

Mat2 mat2_from_index(const FieldSpec& F, u64 idx) {
    u64 q = F.q();
    Mat2 A = m_zero(F);
    A.a = F.from_index(idx % q);
    idx /= q;
    A.b = F.from_index(idx % q);
    idx /= q;
    A.c = F.from_index(idx % q);
    idx /= q;
    A.d = F.from_index(idx % q);
    return A;
}

ResidueClass classify(const FieldSpec& F, const Mat2& C) {
    ResidueClass rc;
    rc.det = m_det(F, C);
    rc.trace = m_trace(F, C);
    rc.lambda = F.zero();
    if (C == m_zero(F)) {
        rc.tag = MatClassTag::Zero;
        return rc;
    }
    if (C == m_identity(F)) {
        rc.tag = MatClassTag::Identity;
        return rc;
    }
    if (!F.is_zero(rc.det)) {
        bool scalar = F.is_zero(C.b) && F.is_zero(C.c) && C.a == C.d;
        if (scalar) {
            rc.tag = MatClassTag::ScalarOther;
            rc.lambda = C.a;
        } else {
            rc.tag = MatClassTag::InvertibleOther;
        }
        return rc;
    }
    // Singular nonzero: C^2 = tr(C) C, so the trace decides the class.
    if (F.is_zero(rc.trace)) {
        rc.tag = MatClassTag::NilpotentNonzero;
    } else if (rc.trace == F.one()) {
        rc.tag = MatClassTag::IdempotentRankOne;
    } else {
        rc.tag = MatClassTag::LambdaIdempotent;
        rc.lambda = rc.trace;
    }
    return rc;
}

std::string mat_class_name(MatClassTag tag) {
    switch (tag) {
        case MatClassTag::Zero: return "zero";
        case MatClassTag::Identity: return "identity";
        case MatClassTag::ScalarOther: return "scalar";
        case MatClassTag::InvertibleOther: return "invertible";
        case MatClassTag::IdempotentRankOne: return "idempotent";
        case MatClassTag::NilpotentNonzero: return "nilpotent";
        case MatClassTag::LambdaIdempotent: return "lambda-idempotent";
    }
    throw std::logic_error("unreachable matrix class tag");
}

PsiMap::PsiMap(const FieldSpec& F) : F_(F) {
    if (F.p() == 2) {
        throw UnsupportedError("matrix model requires odd characteristic");
    }
    auto [x, y] = F_.two_squares_minus_one();
    bi_ = Mat2{x, y, y, F_.neg(x)};
    bj_ = Mat2{F_.zero(), F_.one(), F_.neg(F_.one()), F_.zero()};
    bk_ = m_mul(F_, bi_, bj_);

    // Column t of B is the entry vector (a, b, c, d) of the t-th basis image.
    std::array<Mat2, 4> basis = {m_identity(F_), bi_, bj_, bk_};
    std::array<std::array<FieldElem, 4>, 4> B;
    for (int t = 0; t < 4; ++t) {
        B[0][t] = basis[t].a;
        B[1][t] = basis[t].b;
        B[2][t] = basis[t].c;
        B[3][t] = basis[t].d;
    }
    for (auto& row : inv_) row.fill(F_.zero());
    for (int t = 0; t < 4; ++t) inv_[t][t] = F_.one();

    // Gauss-Jordan on [B | I].
    for (int col = 0; col < 4; ++col) {
        int pivot = -1;
        for (int row = col; row < 4; ++row) {
            if (!F_.is_zero(B[row][col])) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw std::logic_error("basis images are linearly dependent");
        std::swap(B[pivot], B[col]);
        std::swap(inv_[pivot], inv_[col]);
        FieldElem s = F_.inv(B[col][col]);
        for (int t = 0; t < 4; ++t) {
            B[col][t] = F_.mul(s, B[col][t]);
            inv_[col][t] = F_.mul(s, inv_[col][t]);
        }
        for (int row = 0; row < 4; ++row) {
            if (row == col || F_.is_zero(B[row][col])) continue;
            FieldElem f = B[row][col];
            for (int t = 0; t < 4; ++t) {
                B[row][t] = F_.sub(B[row][t], F_.mul(f, B[col][t]));
                inv_[row][t] = F_.sub(inv_[row][t], F_.mul(f, inv_[col][t]));
            }
        }
    }
}

Mat2 PsiMap::apply(const std::array<FieldElem, 4>& coords) const {
    Mat2 M = m_scale(F_, coords[0], m_identity(F_));
    M = m_add(F_, M, m_scale(F_, coords[1], bi_));
    M = m_add(F_, M, m_scale(F_, coords[2], bj_));
    M = m_add(F_, M, m_scale(F_, coords[3], bk_));
    return M;
}

std::array<FieldElem, 4> PsiMap::invert(const Mat2& M) const {
    std::array<FieldElem, 4> entries = {M.a, M.b, M.c, M.d};
    std::array<FieldElem, 4> coords;
    for (int row = 0; row < 4; ++row) {
        FieldElem acc = F_.zero();
        for (int t = 0; t < 4; ++t) {
            acc = F_.add(acc, F_.mul(inv_[row][t], entries[t]));
        }
        coords[row] = acc;
    }
    return coords;
}

}  // namespace exunits
