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

#include <cstdint>
#include <utility>
#include <vector>

#include "exunits/common.hpp"

namespace exunits {

bool is_prime_u64(u64 n);

// Element of GF(p^r): coeffs[t] multiplies x^t, entries in [0, p).
// Always stored reduced.
struct FieldElem {
    std::vector<u32> coeffs;

    bool operator==(const FieldElem&) const = default;
};

// First monic irreducible of degree r over GF(p) in integer encoding order,
// where a candidate with coefficients (c0..c_{r-1}, leading 1 implicit) is
// encoded as c0 + c1 p + ... + c_{r-1} p^{r-1}. Certified by the gcd ladder
// gcd(x^{p^i} - x, f) = 1 for 1 <= i <= r/2 together with f | x^{p^r} - x.
std::vector<u32> find_irreducible(u64 p, u32 r);

// GF(p^r) with the canonical modulus. Immutable after construction; all
// operations are pure, so instances may be shared freely across threads.
class FieldSpec {
  public:
    static FieldSpec make(u64 p, u32 r);

    u64 p() const noexcept { return p_; }
    u32 r() const noexcept { return r_; }
    u64 q() const noexcept { return q_; }
    const std::vector<u32>& modulus() const noexcept { return modulus_; }

    FieldElem zero() const;
    FieldElem one() const;
    // v * 1, reduced. Accepts negative v.
    FieldElem from_int(long long v) const;

    bool is_zero(const FieldElem& a) const;
    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem pow(const FieldElem& a, u64 e) const;

    // Integer encoding c0 + c1 p + ... + c_{r-1} p^{r-1}. Doubles as the
    // canonical total order on elements.
    u64 index(const FieldElem& a) const;
    FieldElem from_index(u64 idx) const;

    // First pair (x, y), x scanned before y in index order, with
    // x^2 + y^2 = -1. Odd characteristic only.
    std::pair<FieldElem, FieldElem> two_squares_minus_one() const;

    bool operator==(const FieldSpec&) const = default;

  private:
    friend class LocalRingSpec;

    FieldSpec() = default;

    u64 p_ = 0;
    u32 r_ = 0;
    u64 q_ = 0;
    std::vector<u32> modulus_;
};

}  // namespace exunits
