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
#include "exunits/gf.hpp"
#include "exunits/ring.hpp"

using namespace exunits;

TEST_CASE("integers modulo a prime power") {
    LocalRingSpec L = LocalRingSpec::make(2, 3, 1);
    CHECK(L.coeff_mod() == 8);
    CHECK(L.order() == 8);
    CHECK(L.radical_order() == 4);
    CHECK(L.unit_count() == 4);
    for (u64 v = 0; v < 8; ++v) {
        auto a = L.from_index(v);
        CHECK(L.index(a) == v);
        CHECK(L.is_unit(a) == (v % 2 == 1));
        CHECK(L.in_radical(a) == (v % 2 == 0));
    }
    CHECK(L.mul(L.from_int(3), L.from_int(5)) == L.from_int(7));
    CHECK(L.add(L.from_int(6), L.from_int(5)) == L.from_int(3));
}

TEST_CASE("degree 2 extension of the integers modulo 4") {
    LocalRingSpec L = LocalRingSpec::make(2, 2, 2);
    CHECK(L.order() == 16);
    CHECK(L.radical_order() == 4);
    CHECK(L.unit_count() == 12);
    CHECK(L.modulus() == std::vector<u64>{1, 1});

    const FieldSpec& F = L.residue_field();
    CHECK(F.q() == 4);

    // Residue map restricted to verbatim lifts is the identity, and an
    // element is a unit exactly when its residue is nonzero.
    u64 rad = 0;
    for (u64 idx = 0; idx < L.order(); ++idx) {
        auto a = L.from_index(idx);
        CHECK(L.is_unit(a) == !F.is_zero(L.residue(a)));
        if (L.in_radical(a)) ++rad;
    }
    CHECK(rad == 4);
    for (u64 fi = 0; fi < 4; ++fi) {
        FieldElem e = F.from_index(fi);
        CHECK(L.residue(L.lift(e)) == e);
    }

    // x^2 = -x - 1 after reduction by the lifted modulus.
    auto x = L.lift(F.from_index(2));
    auto x2 = L.mul(x, x);
    auto expect = L.sub(L.neg(x), L.one());
    CHECK(x2 == expect);
}

TEST_CASE("composite modulus splits into local factors") {
    RingSpec R = RingSpec::zn(12);
    REQUIRE(R.factors() == 2);
    CHECK(R.local(0).p() == 2);
    CHECK(R.local(0).coeff_mod() == 4);
    CHECK(R.local(1).p() == 3);
    CHECK(R.order() == BigInt(12));
    CHECK(R.small_order() == 12);
    CHECK(R.unit_count() == BigInt(4));
    CHECK(R.radical_order() == BigInt(2));
    CHECK(zn_representable(R));

    // The indexed elements biject with 0..11 through the integer value map,
    // and ring arithmetic matches integer arithmetic modulo 12.
    std::vector<u64> seen(12, 0);
    for (u64 idx = 0; idx < 12; ++idx) {
        RingElem a = R.from_index(idx);
        CHECK(R.index(a) == idx);
        u64 va = zn_value(R, a).convert_to<u64>();
        ++seen[va];
        for (u64 jdx = 0; jdx < 12; ++jdx) {
            RingElem b = R.from_index(jdx);
            u64 vb = zn_value(R, b).convert_to<u64>();
            CHECK(zn_value(R, R.add(a, b)) == BigInt((va + vb) % 12));
            CHECK(zn_value(R, R.mul(a, b)) == BigInt(va * vb % 12));
        }
        CHECK(R.is_unit(a) == (va % 2 == 1 && va % 3 != 0));
    }
    for (u64 v = 0; v < 12; ++v) CHECK(seen[v] == 1);
}

TEST_CASE("splitting and joining across factors") {
    RingSpec R = RingSpec::zn(15);
    for (u64 idx = 0; idx < 15; ++idx) {
        RingElem a = R.from_index(idx);
        std::vector<RingElem> parts = R.crt_split(a);
        REQUIRE(parts.size() == 2);
        CHECK(R.crt_join(parts) == a);
        CHECK(zn_value(R.factor_ring(0), parts[0]) == zn_value(R, a) % 3);
        CHECK(zn_value(R.factor_ring(1), parts[1]) == zn_value(R, a) % 5);
    }
}

TEST_CASE("single field factor") {
    RingSpec R = RingSpec::field(3, 2);
    CHECK(R.factors() == 1);
    CHECK(R.order() == BigInt(9));
    CHECK(R.radical_order() == BigInt(1));
    CHECK(R.unit_count() == BigInt(8));
    CHECK_FALSE(zn_representable(R));
    std::vector<FieldElem> res = R.residues(R.from_int(-1));
    REQUIRE(res.size() == 1);
    CHECK(res[0] == R.local(0).residue_field().from_int(2));
}

TEST_CASE("residues cover every factor") {
    RingSpec R = RingSpec::zn(45);  // 9 x 5
    RingElem a = R.from_int(13);
    std::vector<FieldElem> res = R.residues(a);
    REQUIRE(res.size() == 2);
    CHECK(res[0] == R.local(0).residue_field().from_int(13 % 3));
    CHECK(res[1] == R.local(1).residue_field().from_int(13 % 5));
}

TEST_CASE("invalid ring parameters are rejected") {
    CHECK_THROWS_AS(RingSpec::zn(1), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::zn(0), std::invalid_argument);
    CHECK_THROWS_AS(LocalRingSpec::make(6, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(LocalRingSpec::make(2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(RingSpec::product({}), std::invalid_argument);
}
