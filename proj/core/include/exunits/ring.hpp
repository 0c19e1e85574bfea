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

#include <cstddef>
#include <vector>

#include "exunits/common.hpp"
#include "exunits/gf.hpp"

namespace exunits {

// Element of a product ring: concatenated local coefficient vectors, entries
// reduced into [0, p^n) per local factor.
struct RingElem {
    std::vector<u64> v;

    bool operator==(const RingElem&) const = default;
};

// Local ring Z_{p^n}[x]/(f) where f is the verbatim lift of the canonical
// GF(p^r) modulus. Local of order p^{nr}; non-units form the ideal (p) and
// the residue field is GF(p^r). n = 1 coincides with GF(p^r) itself.
class LocalRingSpec {
  public:
    static LocalRingSpec make(u64 p, u32 n, u32 r);

    u64 p() const noexcept { return p_; }
    u32 n() const noexcept { return n_; }
    u32 r() const noexcept { return r_; }
    u64 coeff_mod() const noexcept { return pn_; }  // p^n
    u64 order() const noexcept { return order_; }   // p^{nr}
    u64 radical_order() const noexcept { return radical_; }  // p^{(n-1)r}
    u64 unit_count() const noexcept { return order_ - radical_; }
    const FieldSpec& residue_field() const noexcept { return residue_; }
    const std::vector<u64>& modulus() const noexcept { return modulus_; }

    // Local element: length-r coefficient vector, entries in [0, p^n).
    using Coeffs = std::vector<u64>;

    Coeffs zero() const;
    Coeffs one() const;
    Coeffs from_int(long long v) const;
    Coeffs lift(const FieldElem& a) const;  // verbatim coefficient lift

    Coeffs add(const Coeffs& a, const Coeffs& b) const;
    Coeffs sub(const Coeffs& a, const Coeffs& b) const;
    Coeffs neg(const Coeffs& a) const;
    Coeffs mul(const Coeffs& a, const Coeffs& b) const;

    bool is_unit(const Coeffs& a) const;
    bool in_radical(const Coeffs& a) const;
    FieldElem residue(const Coeffs& a) const;

    u64 index(const Coeffs& a) const;  // mixed radix base p^n
    Coeffs from_index(u64 idx) const;

    bool operator==(const LocalRingSpec&) const = default;

  private:
    LocalRingSpec() = default;

    u64 p_ = 0;
    u32 n_ = 0;
    u32 r_ = 0;
    u64 pn_ = 0;
    u64 order_ = 0;
    u64 radical_ = 0;
    std::vector<u64> modulus_;
    FieldSpec residue_;
};

// Finite commutative ring presented as an ordered product of local factors.
// Immutable after construction; operations are pure.
class RingSpec {
  public:
    static RingSpec product(std::vector<LocalRingSpec> locals);
    static RingSpec single(LocalRingSpec local);
    // Prime-power factorization of m in ascending prime order.
    static RingSpec zn(u64 m);
    static RingSpec field(u64 p, u32 r);

    std::size_t factors() const noexcept { return locals_.size(); }
    const LocalRingSpec& local(std::size_t i) const { return locals_[i]; }
    RingSpec factor_ring(std::size_t i) const;

    BigInt order() const;
    // Throws SizeLimitError when the order does not fit the index space.
    u64 small_order() const;
    BigInt radical_order() const;
    BigInt unit_count() const;

    RingElem zero() const;
    RingElem one() const;
    RingElem from_int(long long v) const;

    RingElem add(const RingElem& a, const RingElem& b) const;
    RingElem sub(const RingElem& a, const RingElem& b) const;
    RingElem neg(const RingElem& a) const;
    RingElem mul(const RingElem& a, const RingElem& b) const;

    bool is_unit(const RingElem& a) const;
    bool in_radical(const RingElem& a) const;
    // Componentwise quotient into the local residue fields.
    std::vector<FieldElem> residues(const RingElem& a) const;

    // Mixed-radix element index, factor 0 least significant.
    u64 index(const RingElem& a) const;
    RingElem from_index(u64 idx) const;

    // Mutually inverse ring homomorphisms between this ring and the product
    // of its factor rings.
    std::vector<RingElem> crt_split(const RingElem& a) const;
    RingElem crt_join(const std::vector<RingElem>& parts) const;

    bool operator==(const RingSpec&) const = default;

  private:
    std::vector<LocalRingSpec> locals_;
    std::vector<std::size_t> offset_;
    std::size_t total_len_ = 0;

    LocalRingSpec::Coeffs slice(const RingElem& a, std::size_t i) const;
    void place(RingElem& a, std::size_t i, const LocalRingSpec::Coeffs& c) const;
};

// True when every factor has r = 1 and the factor primes are pairwise
// distinct, so elements carry a unique integer value mod the ring order.
bool zn_representable(const RingSpec& R);
BigInt zn_value(const RingSpec& R, const RingElem& a);

}  // namespace exunits
