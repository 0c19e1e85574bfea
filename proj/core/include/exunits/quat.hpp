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
#include <vector>

#include "exunits/common.hpp"
#include "exunits/ring.hpp"

namespace exunits {

// Quaternion x1 + x2*i + x3*j + x4*k over a commutative coefficient ring,
// with i^2 = j^2 = k^2 = ijk = -1 and ij = -ji = k.
struct Quaternion {
    RingElem x1, x2, x3, x4;

    bool operator==(const Quaternion&) const = default;
};

Quaternion q_zero(const RingSpec& R);
Quaternion q_one(const RingSpec& R);
Quaternion q_add(const RingSpec& R, const Quaternion& a, const Quaternion& b);
Quaternion q_sub(const RingSpec& R, const Quaternion& a, const Quaternion& b);
Quaternion q_neg(const RingSpec& R, const Quaternion& a);
Quaternion q_mul(const RingSpec& R, const Quaternion& a, const Quaternion& b);
Quaternion q_conj(const RingSpec& R, const Quaternion& a);

// Reduced norm x1^2 + x2^2 + x3^2 + x4^2; equals a * conj(a).
RingElem q_norm(const RingSpec& R, const Quaternion& a);

// A quaternion is a unit exactly when its norm is a unit of R.
bool q_is_unit(const RingSpec& R, const Quaternion& a);

// Exceptional unit: both a and 1 - a are units.
bool q_is_exceptional_unit(const RingSpec& R, const Quaternion& a);

// Dense index over H(R) with x1 the least significant digit.
u64 quat_index(const RingSpec& R, const Quaternion& a);
Quaternion quat_from_index(const RingSpec& R, u64 idx);

// Componentwise factor split matching RingSpec::crt_split ordering.
std::vector<Quaternion> quat_split(const RingSpec& R, const Quaternion& a);
Quaternion quat_join(const RingSpec& R, const std::vector<Quaternion>& parts);

// Data of a quaternion over a local ring modulo the Jacobson radical of H(R).
//
// For residue characteristic 2 the radical has index 2^r in H(R) and the
// class of a is determined by the residue of x1 + x2 + x3 + x4.  For odd
// residue characteristic the radical is J(R)^4 and the class is the residue
// coordinate vector.
struct QuatRadicalView {
    bool even = false;
    BigInt radical_size = 0;
    FieldElem scalar_residue;                // even case only
    std::array<FieldElem, 4> coord_residue;  // odd case only
};

QuatRadicalView q_radical_view(const RingSpec& R, const Quaternion& a);

}  // namespace exunits
