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

#include "exunits/ring.hpp"

#include <stdexcept>

namespace exunits {

namespace {

// Coefficient arithmetic requires products of two entries to fit u64.
constexpr u64 kMaxCoeffMod = u64{1} << 32;
// Index arithmetic requires ring orders to fit comfortably in u64.
constexpr u64 kMaxLocalOrder = u64{1} << 62;

}  // namespace

LocalRingSpec LocalRingSpec::make(u64 p, u32 n, u32 r) {
    if (!is_prime_u64(p)) throw std::invalid_argument("ring characteristic base must be prime");
    if (n < 1) throw std::invalid_argument("nilpotency exponent must be at least 1");
    if (r < 1) throw std::invalid_argument("residue degree must be at least 1");

    LocalRingSpec spec;
    spec.p_ = p;
    spec.n_ = n;
    spec.r_ = r;
    spec.pn_ = 1;
    for (u32 t = 0; t < n; ++t) {
        if (spec.pn_ >= kMaxCoeffMod / p + 1 || spec.pn_ * p >= kMaxCoeffMod) {
            throw SizeLimitError("local coefficient modulus p^n exceeds the supported range");
        }
        spec.pn_ *= p;
    }
    spec.order_ = 1;
    for (u32 t = 0; t < r; ++t) {
        if (spec.order_ > kMaxLocalOrder / spec.pn_) {
            throw SizeLimitError("local ring order exceeds the supported range");
        }
        spec.order_ *= spec.pn_;
    }
    spec.radical_ = 1;
    if (n > 1) {
        u64 pn1 = spec.pn_ / p;  // p^{n-1}
        for (u32 t = 0; t < r; ++t) spec.radical_ *= pn1;
    }
    spec.residue_ = FieldSpec::make(p, r);
    spec.modulus_.assign(spec.residue_.modulus().begin(), spec.residue_.modulus().end());
    return spec;
}

LocalRingSpec::Coeffs LocalRingSpec::zero() const { return Coeffs(r_, 0); }

LocalRingSpec::Coeffs LocalRingSpec::one() const {
    Coeffs c = zero();
    c[0] = 1 % pn_;
    return c;
}

LocalRingSpec::Coeffs LocalRingSpec::from_int(long long v) const {
    long long m = static_cast<long long>(pn_);
    long long c = ((v % m) + m) % m;
    Coeffs out = zero();
    out[0] = static_cast<u64>(c);
    return out;
}

LocalRingSpec::Coeffs LocalRingSpec::lift(const FieldElem& a) const {
    Coeffs out = zero();
    for (u32 t = 0; t < r_; ++t) out[t] = a.coeffs[t];
    return out;
}

LocalRingSpec::Coeffs LocalRingSpec::add(const Coeffs& a, const Coeffs& b) const {
    Coeffs out = zero();
    for (u32 t = 0; t < r_; ++t) {
        u64 s = a[t] + b[t];
        out[t] = s >= pn_ ? s - pn_ : s;
    }
    return out;
}

LocalRingSpec::Coeffs LocalRingSpec::sub(const Coeffs& a, const Coeffs& b) const {
    Coeffs out = zero();
    for (u32 t = 0; t < r_; ++t) {
        u64 s = a[t] + pn_ - b[t];
        out[t] = s >= pn_ ? s - pn_ : s;
    }
    return out;
}

LocalRingSpec::Coeffs LocalRingSpec::neg(const Coeffs& a) const { return sub(zero(), a); }

LocalRingSpec::Coeffs LocalRingSpec::mul(const Coeffs& a, const Coeffs& b) const {
    std::vector<u64> buf(2 * r_ - 1, 0);
    for (u32 i = 0; i < r_; ++i) {
        if (a[i] == 0) continue;
        for (u32 j = 0; j < r_; ++j) {
            buf[i + j] = (buf[i + j] + a[i] * b[j] % pn_) % pn_;
        }
    }
    for (std::size_t d = buf.size(); d-- > r_;) {
        u64 c = buf[d];
        if (c != 0) {
            for (u32 t = 0; t < r_; ++t) {
                buf[d - r_ + t] = (buf[d - r_ + t] + (pn_ - modulus_[t]) % pn_ * c % pn_) % pn_;
            }
        }
    }
    Coeffs out = zero();
    for (u32 t = 0; t < r_; ++t) out[t] = buf[t];
    return out;
}

bool LocalRingSpec::is_unit(const Coeffs& a) const {
    for (u64 c : a) {
        if (c % p_ != 0) return true;
    }
    return false;
}

bool LocalRingSpec::in_radical(const Coeffs& a) const { return !is_unit(a); }

FieldElem LocalRingSpec::residue(const Coeffs& a) const {
    FieldElem e = residue_.zero();
    for (u32 t = 0; t < r_; ++t) e.coeffs[t] = static_cast<u32>(a[t] % p_);
    return e;
}

u64 LocalRingSpec::index(const Coeffs& a) const {
    u64 idx = 0;
    for (u32 t = r_; t-- > 0;) idx = idx * pn_ + a[t];
    return idx;
}

LocalRingSpec::Coeffs LocalRingSpec::from_index(u64 idx) const {
    Coeffs out = zero();
    for (u32 t = 0; t < r_; ++t) {
        out[t] = idx % pn_;
        idx /= pn_;
    }
    return out;
}

RingSpec RingSpec::product(std::vector<LocalRingSpec> locals) {
    if (locals.empty()) throw std::invalid_argument("a ring needs at least one local factor");
    RingSpec spec;
    spec.locals_ = std::move(locals);
    spec.offset_.reserve(spec.locals_.size());
    for (const auto& L : spec.locals_) {
        spec.offset_.push_back(spec.total_len_);
        spec.total_len_ += L.r();
    }
    return spec;
}

RingSpec RingSpec::single(LocalRingSpec local) {
    std::vector<LocalRingSpec> v;
    v.push_back(std::move(local));
    return product(std::move(v));
}

RingSpec RingSpec::zn(u64 m) {
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    std::vector<LocalRingSpec> locals;
    for (u64 d = 2; d <= m / d; ++d) {
        if (m % d != 0) continue;
        u32 n = 0;
        while (m % d == 0) {
            m /= d;
            ++n;
        }
        locals.push_back(LocalRingSpec::make(d, n, 1));
    }
    if (m > 1) locals.push_back(LocalRingSpec::make(m, 1, 1));
    return product(std::move(locals));
}

RingSpec RingSpec::field(u64 p, u32 r) { return single(LocalRingSpec::make(p, 1, r)); }

RingSpec RingSpec::factor_ring(std::size_t i) const { return single(locals_[i]); }

BigInt RingSpec::order() const {
    BigInt o = 1;
    for (const auto& L : locals_) o *= L.order();
    return o;
}

u64 RingSpec::small_order() const {
    u64 o = 1;
    for (const auto& L : locals_) {
        if (o > kMaxLocalOrder / L.order()) {
            throw SizeLimitError("ring order exceeds the indexable range");
        }
        o *= L.order();
    }
    return o;
}

BigInt RingSpec::radical_order() const {
    BigInt o = 1;
    for (const auto& L : locals_) o *= L.radical_order();
    return o;
}

BigInt RingSpec::unit_count() const {
    BigInt o = 1;
    for (const auto& L : locals_) o *= L.unit_count();
    return o;
}

LocalRingSpec::Coeffs RingSpec::slice(const RingElem& a, std::size_t i) const {
    const auto& L = locals_[i];
    return LocalRingSpec::Coeffs(a.v.begin() + offset_[i], a.v.begin() + offset_[i] + L.r());
}

void RingSpec::place(RingElem& a, std::size_t i, const LocalRingSpec::Coeffs& c) const {
    std::copy(c.begin(), c.end(), a.v.begin() + offset_[i]);
}

RingElem RingSpec::zero() const { return RingElem{std::vector<u64>(total_len_, 0)}; }

RingElem RingSpec::one() const {
    RingElem out = zero();
    for (std::size_t i = 0; i < locals_.size(); ++i) place(out, i, locals_[i].one());
    return out;
}

RingElem RingSpec::from_int(long long v) const {
    RingElem out = zero();
    for (std::size_t i = 0; i < locals_.size(); ++i) place(out, i, locals_[i].from_int(v));
    return out;
}

RingElem RingSpec::add(const RingElem& a, const RingElem& b) const {
    RingElem out = zero();
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        place(out, i, locals_[i].add(slice(a, i), slice(b, i)));
    }
    return out;
}

RingElem RingSpec::sub(const RingElem& a, const RingElem& b) const {
    RingElem out = zero();
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        place(out, i, locals_[i].sub(slice(a, i), slice(b, i)));
    }
    return out;
}

RingElem RingSpec::neg(const RingElem& a) const { return sub(zero(), a); }

RingElem RingSpec::mul(const RingElem& a, const RingElem& b) const {
    RingElem out = zero();
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        place(out, i, locals_[i].mul(slice(a, i), slice(b, i)));
    }
    return out;
}

bool RingSpec::is_unit(const RingElem& a) const {
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        if (!locals_[i].is_unit(slice(a, i))) return false;
    }
    return true;
}

bool RingSpec::in_radical(const RingElem& a) const {
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        if (!locals_[i].in_radical(slice(a, i))) return false;
    }
    return true;
}

std::vector<FieldElem> RingSpec::residues(const RingElem& a) const {
    std::vector<FieldElem> out;
    out.reserve(locals_.size());
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        out.push_back(locals_[i].residue(slice(a, i)));
    }
    return out;
}

u64 RingSpec::index(const RingElem& a) const {
    small_order();
    u64 idx = 0;
    for (std::size_t i = locals_.size(); i-- > 0;) {
        idx = idx * locals_[i].order() + locals_[i].index(slice(a, i));
    }
    return idx;
}

RingElem RingSpec::from_index(u64 idx) const {
    small_order();
    RingElem out = zero();
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        const auto& L = locals_[i];
        place(out, i, L.from_index(idx % L.order()));
        idx /= L.order();
    }
    return out;
}

std::vector<RingElem> RingSpec::crt_split(const RingElem& a) const {
    std::vector<RingElem> out;
    out.reserve(locals_.size());
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        out.push_back(RingElem{slice(a, i)});
    }
    return out;
}

RingElem RingSpec::crt_join(const std::vector<RingElem>& parts) const {
    if (parts.size() != locals_.size()) {
        throw std::invalid_argument("component count does not match the factor count");
    }
    RingElem out = zero();
    for (std::size_t i = 0; i < locals_.size(); ++i) {
        if (parts[i].v.size() != locals_[i].r()) {
            throw std::invalid_argument("component length does not match the factor degree");
        }
        place(out, i, parts[i].v);
    }
    return out;
}

bool zn_representable(const RingSpec& R) {
    for (std::size_t i = 0; i < R.factors(); ++i) {
        if (R.local(i).r() != 1) return false;
        for (std::size_t j = i + 1; j < R.factors(); ++j) {
            if (R.local(i).p() == R.local(j).p()) return false;
        }
    }
    return true;
}

namespace {

// Modular inverse of a mod m for coprime a, m, both below 2^32.
u64 mod_inv_u64(u64 a, u64 m) {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
    while (newr != 0) {
        long long quot = r / newr;
        t -= quot * newt;
        std::swap(t, newt);
        r -= quot * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::logic_error("arguments are not coprime");
    long long mm = static_cast<long long>(m);
    return static_cast<u64>(((t % mm) + mm) % mm);
}

}  // namespace

BigInt zn_value(const RingSpec& R, const RingElem& a) {
    if (!zn_representable(R)) {
        throw std::invalid_argument("ring has no integer residue form");
    }
    auto parts = R.crt_split(a);
    BigInt x = 0;
    BigInt m = 1;
    for (std::size_t i = 0; i < R.factors(); ++i) {
        u64 mi = R.local(i).order();
        u64 ci = parts[i].v[0];
        u64 xi = static_cast<u64>(x % mi);
        u64 mm = static_cast<u64>(m % mi);
        u64 t = (ci + mi - xi) % mi * mod_inv_u64(mm, mi) % mi;
        x += m * t;
        m *= mi;
    }
    return x;
}

}  // namespace exunits
