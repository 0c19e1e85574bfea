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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "exunits/common.hpp"
#include "exunits/count.hpp"
#include "exunits/gf.hpp"
#include "exunits/mat2.hpp"
#include "exunits/quat.hpp"
#include "exunits/ring.hpp"

using namespace exunits;

TEST_CASE("field ambient census") {
    FieldSpec F = FieldSpec::make(5, 1);
    Ambient A = Ambient::field(F);
    CHECK(A.size() == 5);
    CHECK(A.one() == 1);
    CHECK(A.unit_count() == 4);
    CHECK(A.exceptional_count() == 3);  // everything except 0 and 1
    CHECK_FALSE(A.is_exceptional(0));
    CHECK_FALSE(A.is_exceptional(1));
    CHECK(A.is_exceptional(2));
}

TEST_CASE("matrix ambient census") {
    FieldSpec F = FieldSpec::make(3, 1);
    Ambient A = Ambient::mat2(F);
    CHECK(A.size() == 81);
    CHECK(BigInt(A.unit_count()) == gl2_order(3));
    u64 exc = 0;
    for (u64 idx = 0; idx < 81; ++idx) {
        Mat2 C = mat2_from_index(F, idx);
        bool expect = m_is_invertible(F, C) && m_is_invertible(F, m_sub(F, C, m_identity(F)));
        CHECK(A.is_exceptional(idx) == expect);
        if (expect) ++exc;
    }
    CHECK(A.exceptional_count() == exc);
}

TEST_CASE("quaternion ambient census") {
    RingSpec R = RingSpec::zn(4);
    Ambient A = Ambient::quaternion(R);
    CHECK(A.size() == 256);
    CHECK(A.unit_count() == 128);
    CHECK(A.exceptional_count() == 0);
    for (u64 idx = 0; idx < 256; ++idx) {
        Quaternion a = quat_from_index(R, idx);
        CHECK(A.is_unit(idx) == q_is_unit(R, a));
    }
}

TEST_CASE("ambient addition matches the element model") {
    RingSpec R = RingSpec::zn(6);
    Ambient A = Ambient::quaternion(R);
    const u64 n = A.size();
    for (u64 ia = 7; ia < n; ia += 131) {
        for (u64 ib = 3; ib < n; ib += 97) {
            Quaternion qa = quat_from_index(R, ia);
            Quaternion qb = quat_from_index(R, ib);
            CHECK(A.add(ia, ib) == quat_index(R, q_add(R, qa, qb)));
            CHECK(A.sub(ia, ib) == quat_index(R, q_sub(R, qa, qb)));
        }
    }
}

TEST_CASE("digit walkers track base plus and minus x") {
    FieldSpec F = FieldSpec::make(3, 2);
    Ambient A = Ambient::mat2(F);
    const u64 n = A.size();
    for (u64 base : {u64{0}, u64{17}, u64{n - 1}}) {
        DigitWalk up(A, base, 0, +1);
        DigitWalk down(A, base, 0, -1);
        for (u64 x = 0; x < n; ++x) {
            CHECK(up.value() == A.add(base, x));
            CHECK(down.value() == A.sub(base, x));
            if (x + 1 < n) {
                up.advance();
                down.advance();
            }
        }
    }
}

TEST_CASE("pair scan equals convolution") {
    FieldSpec F = FieldSpec::make(7, 1);
    Ambient A = Ambient::field(F);
    for (u64 c = 0; c < 7; ++c) {
        PhiResult scan = phi2_scan_oracle(A, c);
        PhiResult conv = phi_k_convolution_oracle(A, c, 2);
        CHECK(scan.value() == conv.value());
        CHECK(scan.provenance == Provenance::Oracle);
    }

    Ambient M = Ambient::mat2(FieldSpec::make(3, 1));
    for (u64 c : {u64{0}, u64{1}, u64{40}, u64{80}}) {
        CHECK(phi2_scan_oracle(M, c).value() == phi_k_convolution_oracle(M, c, 2).value());
    }
}

TEST_CASE("tables are consistent with single-target counts and the grand total") {
    FieldSpec F = FieldSpec::make(3, 2);
    Ambient A = Ambient::field(F);
    for (u32 k : {u32{2}, u32{3}, u32{4}}) {
        std::vector<u64> table = phi_k_table(A, k);
        REQUIRE(table.size() == 9);
        BigInt total = 0;
        for (u64 idx = 0; idx < 9; ++idx) {
            total += table[idx];
            CHECK(BigInt(table[idx]) == phi_k_convolution_oracle(A, idx, k).value());
        }
        CHECK(total == bpow(A.exceptional_count(), k));
    }
}

TEST_CASE("field formula matches enumeration") {
    for (u64 q : {u64{2}, u64{3}, u64{4}, u64{5}, u64{8}, u64{9}, u64{13}}) {
        CAPTURE(q);
        u64 p = q;
        u32 r = 1;
        if (q == 4) p = 2, r = 2;
        if (q == 8) p = 2, r = 3;
        if (q == 9) p = 3, r = 2;
        FieldSpec F = FieldSpec::make(p, r);
        Ambient A = Ambient::field(F);
        for (u32 k = 2; k <= 5; ++k) {
            std::vector<u64> table = phi_k_table(A, k);
            for (u64 idx = 0; idx < q; ++idx) {
                PhiResult res = phi_k_field_formula(F, F.from_index(idx), k);
                CHECK(res.is_exact);
                CHECK(res.provenance == Provenance::FieldFormula);
                CHECK(res.value() == BigInt(table[idx]));
            }
        }
    }
}

TEST_CASE("field formula golden values") {
    FieldSpec F3 = FieldSpec::make(3, 1);
    CHECK(phi_k_field_formula(F3, F3.from_int(1), 2).value() == BigInt(1));
    CHECK(phi_k_field_formula(F3, F3.zero(), 2).value() == BigInt(0));
    // Over GF(4) the two exceptional units u satisfy u + u = 0 and sum to 1,
    // so pair counts are 2, 2, 0, 0 across the four targets.
    FieldSpec F4 = FieldSpec::make(2, 2);
    CHECK(phi_k_field_formula(F4, F4.zero(), 2).value() == BigInt(2));
    CHECK(phi_k_field_formula(F4, F4.one(), 2).value() == BigInt(2));
    CHECK(phi_k_field_formula(F4, F4.from_index(2), 2).value() == BigInt(0));
}

TEST_CASE("characteristic 2 closed form") {
    struct Case {
        RingSpec R;
        std::vector<u32> ks;
    };
    std::vector<Case> cases = {
        {RingSpec::zn(2), {2, 3, 4}},
        {RingSpec::zn(4), {2, 3}},
        {RingSpec::field(2, 2), {2, 3}},
        {RingSpec::single(LocalRingSpec::make(2, 2, 2)), {2}},
    };
    for (const Case& tc : cases) {
        Ambient A = Ambient::quaternion(tc.R);
        const LocalRingSpec& L = tc.R.local(0);
        const FieldSpec& F = L.residue_field();
        for (u32 k : tc.ks) {
            std::vector<u64> table = phi_k_table(A, k);
            for (u64 s = 0; s < F.q(); ++s) {
                Quaternion rep = q_zero(tc.R);
                rep.x1 = RingElem{L.lift(F.from_index(s))};
                PhiResult res = phi_k_even_quaternion(tc.R, rep, k);
                CHECK(res.is_exact);
                CHECK(res.provenance == Provenance::EvenTheorem);
                CHECK(res.value() == BigInt(table[quat_index(tc.R, rep)]));
            }
        }
    }
}

TEST_CASE("characteristic 2 golden values") {
    RingSpec R4 = RingSpec::field(2, 2);
    CHECK(phi_k_even_quaternion(R4, q_zero(R4), 2).value() == BigInt(128));
    CHECK(phi_k_even_quaternion(R4, q_one(R4), 2).value() == BigInt(128));
    Quaternion w = q_zero(R4);
    w.x1 = RingElem{R4.local(0).lift(R4.local(0).residue_field().from_index(2))};
    CHECK(phi_k_even_quaternion(R4, w, 2).value() == BigInt(0));

    RingSpec Z4 = RingSpec::zn(4);
    CHECK(phi_k_even_quaternion(Z4, q_one(Z4), 2).value() == BigInt(0));

    RingSpec GR = RingSpec::single(LocalRingSpec::make(2, 2, 2));
    CHECK(phi_k_even_quaternion(GR, q_zero(GR), 2).value() == BigInt(32768));
}

TEST_CASE("matrix class formulas, golden values") {
    FieldSpec F3 = FieldSpec::make(3, 1);
    FieldSpec F5 = FieldSpec::make(5, 1);
    auto val = [](const FieldSpec& F, const Mat2& C) {
        return phi2_mat_formula(F, classify(F, C)).value();
    };
    const FieldElem z3 = F3.zero(), o3 = F3.one();
    const FieldElem z5 = F5.zero(), o5 = F5.one();

    CHECK(val(F3, Mat2{z3, z3, z3, z3}) == BigInt(18));
    CHECK(val(F3, Mat2{o3, z3, z3, o3}) == BigInt(27));
    CHECK(val(F3, Mat2{o3, z3, z3, z3}) == BigInt(10));
    CHECK(val(F3, Mat2{z3, o3, z3, z3}) == BigInt(6));

    CHECK(val(F5, Mat2{z5, z5, z5, z5}) == BigInt(280));
    CHECK(val(F5, Mat2{o5, z5, z5, o5}) == BigInt(365));
    CHECK(val(F5, Mat2{o5, z5, z5, z5}) == BigInt(234));
    CHECK(val(F5, Mat2{z5, o5, z5, z5}) == BigInt(210));
}

TEST_CASE("matrix class formulas match enumeration for small q") {
    for (u64 q : {u64{3}, u64{5}}) {
        CAPTURE(q);
        FieldSpec F = FieldSpec::make(q, 1);
        Ambient M = Ambient::mat2(F);
        for (u64 idx = 0; idx < M.size(); ++idx) {
            Mat2 C = mat2_from_index(F, idx);
            PhiResult claim = phi2_mat_formula(F, classify(F, C));
            BigInt oracle = phi2_scan_oracle(M, idx).value();
            if (claim.is_exact) {
                CHECK(claim.value() == oracle);
            } else {
                CHECK(claim.contains(oracle));
            }
        }
    }
}

TEST_CASE("interval endpoints for q equal to 9") {
    FieldSpec F = FieldSpec::make(3, 2);
    const FieldElem z = F.zero(), o = F.one();

    PhiResult inv = phi2_mat_formula(F, classify(F, Mat2{z, o, F.neg(o), z}));
    CHECK_FALSE(inv.is_exact);
    CHECK(inv.lo == BigInt(729));
    CHECK(inv.hi == BigInt(5049));
    CHECK(inv.provenance == Provenance::OddTheorem);
    CHECK_THROWS_AS(inv.value(), std::logic_error);

    PhiResult li = phi2_mat_formula(F, classify(F, Mat2{F.from_index(2), z, z, z}));
    CHECK_FALSE(li.is_exact);
    CHECK(li.lo == BigInt(729));
    CHECK(li.hi == BigInt(36162));
}

TEST_CASE("interval endpoints below the threshold") {
    FieldSpec F = FieldSpec::make(5, 1);
    const FieldElem z = F.zero(), o = F.one();
    PhiResult inv = phi2_mat_formula(F, classify(F, Mat2{z, o, F.neg(o), z}));
    CHECK_FALSE(inv.is_exact);
    CHECK(inv.lo == BigInt(0));
    CHECK(inv.hi == BigInt(365));
    PhiResult li = phi2_mat_formula(F, classify(F, Mat2{F.from_int(2), z, z, z}));
    CHECK(li.lo == BigInt(0));
    CHECK(li.hi == BigInt(625));
}

TEST_CASE("odd local reduction, exact classes and fallback") {
    RingSpec R9 = RingSpec::zn(9);
    PhiResult zero9 = phi2_odd_quaternion(R9, q_zero(R9), false);
    CHECK(zero9.is_exact);
    CHECK(zero9.value() == BigInt(1458));
    CHECK(zero9.provenance == Provenance::OddTheorem);
    CHECK(zero9.detail == "zero");
    CHECK(zero9.label() == "OddTheorem(zero)");

    RingSpec R3 = RingSpec::zn(3);
    CHECK(phi2_odd_quaternion(R3, q_zero(R3), false).value() == BigInt(18));

    // An invertible residue over q = 3 has no closed form; with the fallback
    // enabled the result is exact and matches the direct scan.
    Quaternion j3 = q_zero(R3);
    j3.x3 = R3.one();
    PhiResult no_fb = phi2_odd_quaternion(R3, j3, false);
    CHECK_FALSE(no_fb.is_exact);
    PhiResult fb = phi2_odd_quaternion(R3, j3, true);
    CHECK(fb.is_exact);
    CHECK(fb.provenance == Provenance::RadicalReduction);
    Ambient A3 = Ambient::quaternion(R3);
    CHECK(fb.value() == phi2_scan_oracle(A3, quat_index(R3, j3)).value());
    CHECK(no_fb.contains(fb.value()));
}

TEST_CASE("odd local reduction matches enumeration everywhere, q = 3 lift") {
    RingSpec R = RingSpec::zn(9);
    Ambient A = Ambient::quaternion(R);
    std::vector<u64> table = phi_k_table(A, 2);
    for (u64 idx = 0; idx < A.size(); idx += 23) {
        Quaternion c = quat_from_index(R, idx);
        PhiResult res = phi2_odd_quaternion(R, c, true);
        CHECK(res.is_exact);
        CHECK(res.value() == BigInt(table[idx]));
    }
}

TEST_CASE("full reduction, product rule golden value") {
    RingSpec R = RingSpec::zn(15);
    PhiResult res = phi_k_reduce(R, q_zero(R), 2);
    CHECK(res.is_exact);
    CHECK(res.value() == BigInt(5040));
    CHECK(res.provenance == Provenance::ProductRule);
    CHECK(res.label() == "ProductRule");

    PhiResult oracle = phi_k_reduce(R, q_zero(R), 2, Method::Oracle);
    CHECK(oracle.value() == BigInt(5040));
    CHECK(oracle.provenance == Provenance::Oracle);
}

TEST_CASE("full reduction, single factors route by parity") {
    RingSpec R9 = RingSpec::zn(9);
    PhiResult odd = phi_k_reduce(R9, q_zero(R9), 2);
    CHECK(odd.provenance == Provenance::OddTheorem);
    CHECK(odd.value() == BigInt(1458));

    RingSpec R4 = RingSpec::zn(4);
    PhiResult even = phi_k_reduce(R4, q_one(R4), 2);
    CHECK(even.provenance == Provenance::EvenTheorem);
    CHECK(even.value() == BigInt(0));
}

TEST_CASE("full reduction, longer tuples through the residue convolution") {
    RingSpec R = RingSpec::zn(9);
    Ambient A = Ambient::quaternion(R);
    for (u64 idx : {u64{0}, u64{1}, u64{13}, u64{100}}) {
        Quaternion c = quat_from_index(R, idx);
        PhiResult res = phi_k_reduce(R, c, 3, Method::Formula);
        CHECK(res.is_exact);
        CHECK(res.provenance == Provenance::RadicalReduction);
        CHECK(res.value() == phi_k_convolution_oracle(A, idx, 3).value());
    }
}

TEST_CASE("full reduction, product of even and odd factors") {
    // GF(4) x Z_3: both factors contribute nonzero pair counts.
    RingSpec R =
        RingSpec::product({LocalRingSpec::make(2, 1, 2), LocalRingSpec::make(3, 1, 1)});
    Ambient A = Ambient::quaternion(R);
    PhiResult at_zero = phi_k_reduce(R, q_zero(R), 2);
    CHECK(at_zero.is_exact);
    CHECK(at_zero.value() == BigInt(128 * 18));
    CHECK(at_zero.provenance == Provenance::ProductRule);
    for (u64 idx : {u64{0}, u64{1}, u64{7}, u64{5000}}) {
        PhiResult res = phi_k_reduce(R, quat_from_index(R, idx), 2);
        CHECK(res.is_exact);
        CHECK(res.value() == phi2_scan_oracle(A, idx).value());
    }
}

TEST_CASE("size limits are enforced") {
    Limits saved = limits();
    limits().max_enumeration = 1000;
    CHECK_THROWS_AS(Ambient::quaternion(RingSpec::zn(9)), SizeLimitError);
    CHECK_THROWS_AS(phi_k_reduce(RingSpec::zn(9), q_zero(RingSpec::zn(9)), 2, Method::Oracle),
                    SizeLimitError);
    limits() = saved;

    // Accumulator headroom: |E|^(k-1) must fit a 64-bit signed count.
    FieldSpec F = FieldSpec::make(2, 2);
    Ambient A = Ambient::field(F);  // two exceptional units
    CHECK_THROWS_AS(phi_k_convolution_oracle(A, 0, 70), SizeLimitError);
}

TEST_CASE("tuple length below 2 is rejected") {
    FieldSpec F = FieldSpec::make(3, 1);
    Ambient A = Ambient::field(F);
    CHECK_THROWS_AS(phi_k_convolution_oracle(A, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(phi_k_field_formula(F, F.zero(), 0), std::invalid_argument);
}

TEST_CASE("result invariants") {
    CHECK_THROWS_AS(PhiResult::bounds(BigInt(5), BigInt(3), Provenance::OddTheorem),
                    std::logic_error);
    CHECK_THROWS_AS(PhiResult::exact(BigInt(-1), Provenance::Oracle), std::logic_error);
    PhiResult b = PhiResult::bounds(BigInt(2), BigInt(7), Provenance::OddTheorem, "invertible");
    CHECK(b.contains(BigInt(2)));
    CHECK(b.contains(BigInt(7)));
    CHECK_FALSE(b.contains(BigInt(8)));
    CHECK(b.label() == "OddTheorem(invertible)");
}
