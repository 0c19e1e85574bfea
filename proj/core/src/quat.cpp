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

#include "exunits/quat.hpp"

#include <stdexcept>

namespace exunits {

Quaternion q_zero(const RingSpec& R) {
    return Quaternion{R.zero(), R.zero(), R.zero(), R.zero()};
}

Quaternion q_one(const RingSpec& R) {
    return Quaternion{R.one(), R.zero(), R.zero(), R.zero()};
}

Quaternion q_add(const RingSpec& R, const Quaternion& a, const Quaternion& b) {
    return Quaternion{R.add(a.x1, b.x1), R.add(a.x2, b.x2), R.add(a.x3, b.x3),
                      R.add(a.x4, b.x4)};
}

Quaternion q_sub(const RingSpec& R, const Quaternion& a, const Quaternion& b) {
    return Quaternion{R.sub(a.x1, b.x1), R.sub(a.x2, b.x2), R.sub(a.x3, b.x3),
                      R.sub(a.x4, b.x4)};
}

Quaternion q_neg(const RingSpec& R, const Quaternion& a) {
    return Quaternion{R.neg(a.x1), R.neg(a.x2), R.neg(a.x3), R.neg(a.x4)};
}

Quaternion q_mul(const RingSpec& R, const Quaternion& a, const Quaternion& b) {
    const RingElem &a1 = a.x1, &a2 = a.x2, &a3 = a.x3, &a4 = a.x4;
    const RingElem &b1 = b.x1, &b2 = b.x2, &b3 = b.x3, &b4 = b.x4;
    RingElem w = R.sub(R.sub(R.mul(a1, b1), R.mul(a2, b2)),
                       R.add(R.mul(a3, b3), R.mul(a4, b4)));
    RingElem x = R.add(R.add(R.mul(a1, b2), R.mul(a2, b1)),
                       R.sub(R.mul(a3, b4), R.mul(a4, b3)));
    RingElem y = R.add(R.add(R.mul(a1, b3), R.mul(a3, b1)),
                       R.sub(R.mul(a4, b2), R.mul(a2, b4)));
    RingElem z = R.add(R.add(R.mul(a1, b4), R.mul(a4, b1)),
                       R.sub(R.mul(a2, b3), R.mul(a3, b2)));
    return Quaternion{w, x, y, z};
}

Quaternion q_conj(const RingSpec& R, const Quaternion& a) {
    return Quaternion{a.x1, R.neg(a.x2), R.neg(a.x3), R.neg(a.x4)};
}

RingElem q_norm(const RingSpec& R, const Quaternion& a) {
    RingElem n = R.mul(a.x1, a.x1);
    n = R.add(n, R.mul(a.x2, a.x2));
    n = R.add(n, R.mul(a.x3, a.x3));
    n = R.add(n, R.mul(a.x4, a.x4));
    return n;
}

bool q_is_unit(const RingSpec& R, const Quaternion& a) {
    return R.is_unit(q_norm(R, a));
}

bool q_is_exceptional_unit(const RingSpec& R, const Quaternion& a) {
    if (!q_is_unit(R, a)) return false;
    return q_is_unit(R, q_sub(R, q_one(R), a));
}

u64 quat_index(const RingSpec& R, const Quaternion& a) {
    u64 m = R.small_order();
    return R.index(a.x1) + m * (R.index(a.x2) + m * (R.index(a.x3) + m * R.index(a.x4)));
}

Quaternion quat_from_index(const RingSpec& R, u64 idx) {
    u64 m = R.small_order();
    Quaternion out = q_zero(R);
    out.x1 = R.from_index(idx % m);
    idx /= m;
    out.x2 = R.from_index(idx % m);
    idx /= m;
    out.x3 = R.from_index(idx % m);
    idx /= m;
    out.x4 = R.from_index(idx % m);
    return out;
}

std::vector<Quaternion> quat_split(const RingSpec& R, const Quaternion& a) {
    auto p1 = R.crt_split(a.x1);
    auto p2 = R.crt_split(a.x2);
    auto p3 = R.crt_split(a.x3);
    auto p4 = R.crt_split(a.x4);
    std::vector<Quaternion> out;
    out.reserve(R.factors());
    for (std::size_t i = 0; i < R.factors(); ++i) {
        out.push_back(Quaternion{p1[i], p2[i], p3[i], p4[i]});
    }
    return out;
}

Quaternion quat_join(const RingSpec& R, const std::vector<Quaternion>& parts) {
    if (parts.size() != R.factors()) {
        throw std::invalid_argument("component count does not match the factor count");
    }
    std::vector<RingElem> p1, p2, p3, p4;
    for (const auto& q : parts) {
        p1.push_back(q.x1);
        p2.push_back(q.x2);
        p3.push_back(q.x3);
        p4.push_back(q.x4);
    }
    return Quaternion{R.crt_join(p1), R.crt_join(p2), R.crt_join(p3), R.crt_join(p4)};
}

QuatRadicalView q_radical_view(const RingSpec& R, const Quaternion& a) {
    if (R.factors() != 1) {
        throw std::invalid_argument("radical view requires a local coefficient ring");
    }
    const LocalRingSpec& L = R.local(0);
    QuatRadicalView view;
    if (L.p() == 2) {
        view.even = true;
        // |J(H(R))| = 2^{(4n-1) r}: index of the radical in H(R) is 2^r.
        view.radical_size = bpow(2, u64(4 * L.n() - 1) * L.r());
        RingElem s = R.add(R.add(a.x1, a.x2), R.add(a.x3, a.x4));
        view.scalar_residue = L.residue(s.v);
    } else {
        view.even = false;
        view.radical_size = bpow(L.radical_order(), 4);
        view.coord_residue = {L.residue(a.x1.v), L.residue(a.x2.v), L.residue(a.x3.v),
                              L.residue(a.x4.v)};
    }
    return view;
}

}  // namespace exunits
