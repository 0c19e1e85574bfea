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

#include "exunits/gf.hpp"

#include <cstdlib>

namespace exunits {

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

// Dense polynomial over GF(p), coefficient t multiplies x^t. May carry
// trailing zeros; degree queries trim on the fly.
using Poly = std::vector<u64>;

std::size_t poly_deg_plus1(const Poly& a) {
    std::size_t n = a.size();
    while (n > 0 && a[n - 1] == 0) --n;
    return n;
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    std::size_t na = poly_deg_plus1(a), nb = poly_deg_plus1(b);
    if (na == 0 || nb == 0) return {};
    Poly out(na + nb - 1, 0);
    for (std::size_t i = 0; i < na; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < nb; ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
        }
    }
    return out;
}

// In-place remainder of a modulo monic f (full coefficients, f.back() == 1).
void poly_mod(Poly& a, const Poly& f, u64 p) {
    std::size_t nf = f.size();
    std::size_t na = poly_deg_plus1(a);
    while (na >= nf) {
        u64 c = a[na - 1] % p;
        if (c != 0) {
            std::size_t shift = na - nf;
            for (std::size_t t = 0; t + 1 < nf; ++t) {
                a[shift + t] = (a[shift + t] + (p - f[t]) * c) % p;
            }
        }
        a[na - 1] = 0;
        --na;
        while (na > 0 && a[na - 1] == 0) --na;
    }
    a.resize(nf - 1, 0);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly result{1};
    poly_mod(base, f, p);
    while (e != 0) {
        if (e & 1) {
            result = poly_mul(result, base, p);
            poly_mod(result, f, p);
        }
        e >>= 1;
        if (e != 0) {
            base = poly_mul(base, base, p);
            poly_mod(base, f, p);
        }
    }
    return result;
}

u64 mod_pow_u64(u64 a, u64 e, u64 p) {
    u64 result = 1 % p;
    a %= p;
    while (e != 0) {
        if (e & 1) result = result * a % p;
        e >>= 1;
        a = a * a % p;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    while (poly_deg_plus1(b) != 0) {
        std::size_t nb = poly_deg_plus1(b);
        // Make b monic so poly_mod applies.
        Poly bm(b.begin(), b.begin() + nb);
        u64 lead = bm[nb - 1] % p;
        if (lead != 1) {
            u64 inv = mod_pow_u64(lead, p - 2, p);
            for (auto& c : bm) c = c * inv % p;
        }
        poly_mod(a, bm, p);
        std::swap(a, b);
    }
    a.resize(poly_deg_plus1(a));
    return a;
}

void check_field_args(u64 p, u32 r) {
    if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic must be prime");
    if (r < 1) throw std::invalid_argument("field degree must be at least 1");
    u64 q = 1;
    for (u32 t = 0; t < r; ++t) {
        if (q > limits().max_field_order / p) {
            throw SizeLimitError("field order exceeds the configured limit");
        }
        q *= p;
    }
    if (q > limits().max_field_order) {
        throw SizeLimitError("field order exceeds the configured limit");
    }
}

bool is_irreducible(const Poly& f, u64 p, u32 r) {
    // f has no factor of degree <= r/2 and divides x^{p^r} - x.
    Poly g{0, 1};
    for (u32 i = 1; i <= r; ++i) {
        g = poly_powmod(g, p, f, p);
        if (i <= r / 2) {
            Poly d = g;
            if (d.size() < 2) d.resize(2, 0);
            d[1] = (d[1] + p - 1) % p;
            Poly gc = poly_gcd(d, f, p);
            if (gc.size() != 1) return false;
        }
    }
    // Here g = x^{p^r} mod f; f passes iff g equals x.
    return poly_deg_plus1(g) == 2 && g[1] == 1 && g[0] == 0;
}

}  // namespace

std::vector<u32> find_irreducible(u64 p, u32 r) {
    check_field_args(p, r);
    if (r == 1) return {0};
    u64 q = 1;
    for (u32 t = 0; t < r; ++t) q *= p;
    for (u64 enc = 0; enc < q; ++enc) {
        Poly f(r + 1, 0);
        u64 e = enc;
        for (u32 t = 0; t < r; ++t) {
            f[t] = e % p;
            e /= p;
        }
        f[r] = 1;
        if (is_irreducible(f, p, r)) {
            std::vector<u32> out(r);
            for (u32 t = 0; t < r; ++t) out[t] = static_cast<u32>(f[t]);
            return out;
        }
    }
    throw std::logic_error("no irreducible polynomial found");
}

FieldSpec FieldSpec::make(u64 p, u32 r) {
    check_field_args(p, r);
    FieldSpec spec;
    spec.p_ = p;
    spec.r_ = r;
    spec.q_ = 1;
    for (u32 t = 0; t < r; ++t) spec.q_ *= p;
    spec.modulus_ = find_irreducible(p, r);
    return spec;
}

FieldElem FieldSpec::zero() const { return FieldElem{std::vector<u32>(r_, 0)}; }

FieldElem FieldSpec::one() const {
    FieldElem e = zero();
    e.coeffs[0] = 1 % static_cast<u32>(p_);
    return e;
}

FieldElem FieldSpec::from_int(long long v) const {
    long long m = static_cast<long long>(p_);
    long long c = ((v % m) + m) % m;
    FieldElem e = zero();
    e.coeffs[0] = static_cast<u32>(c);
    return e;
}

bool FieldSpec::is_zero(const FieldElem& a) const {
    for (u32 c : a.coeffs) {
        if (c != 0) return false;
    }
    return true;
}

FieldElem FieldSpec::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem out = zero();
    for (u32 t = 0; t < r_; ++t) {
        u64 s = static_cast<u64>(a.coeffs[t]) + b.coeffs[t];
        out.coeffs[t] = static_cast<u32>(s >= p_ ? s - p_ : s);
    }
    return out;
}

FieldElem FieldSpec::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem out = zero();
    for (u32 t = 0; t < r_; ++t) {
        u64 s = static_cast<u64>(a.coeffs[t]) + p_ - b.coeffs[t];
        out.coeffs[t] = static_cast<u32>(s >= p_ ? s - p_ : s);
    }
    return out;
}

FieldElem FieldSpec::neg(const FieldElem& a) const { return sub(zero(), a); }

FieldElem FieldSpec::mul(const FieldElem& a, const FieldElem& b) const {
    std::vector<u64> buf(2 * r_ - 1, 0);
    for (u32 i = 0; i < r_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (u32 j = 0; j < r_; ++j) {
            buf[i + j] += static_cast<u64>(a.coeffs[i]) * b.coeffs[j];
        }
    }
    for (auto& c : buf) c %= p_;
    for (std::size_t d = buf.size(); d-- > r_;) {
        u64 c = buf[d];
        if (c != 0) {
            for (u32 t = 0; t < r_; ++t) {
                buf[d - r_ + t] = (buf[d - r_ + t] + (p_ - modulus_[t]) * c) % p_;
            }
        }
    }
    FieldElem out = zero();
    for (u32 t = 0; t < r_; ++t) out.coeffs[t] = static_cast<u32>(buf[t]);
    return out;
}

FieldElem FieldSpec::inv(const FieldElem& a) const {
    if (is_zero(a)) throw std::invalid_argument("inversion of zero");
    return pow(a, q_ - 2);
}

FieldElem FieldSpec::pow(const FieldElem& a, u64 e) const {
    FieldElem result = one();
    FieldElem base = a;
    while (e != 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e != 0) base = mul(base, base);
    }
    return result;
}

u64 FieldSpec::index(const FieldElem& a) const {
    u64 idx = 0;
    for (u32 t = r_; t-- > 0;) idx = idx * p_ + a.coeffs[t];
    return idx;
}

FieldElem FieldSpec::from_index(u64 idx) const {
    FieldElem e = zero();
    for (u32 t = 0; t < r_; ++t) {
        e.coeffs[t] = static_cast<u32>(idx % p_);
        idx /= p_;
    }
    return e;
}

std::pair<FieldElem, FieldElem> FieldSpec::two_squares_minus_one() const {
    if (p_ == 2) throw UnsupportedError("two_squares_minus_one requires odd characteristic");
    // sqrt_min[v] = least y in index order with y^2 = v, or -1.
    std::vector<long long> sqrt_min(q_, -1);
    for (u64 yi = 0; yi < q_; ++yi) {
        FieldElem y = from_index(yi);
        u64 v = index(mul(y, y));
        if (sqrt_min[v] < 0) sqrt_min[v] = static_cast<long long>(yi);
    }
    FieldElem minus_one = neg(one());
    for (u64 xi = 0; xi < q_; ++xi) {
        FieldElem x = from_index(xi);
        u64 target = index(sub(minus_one, mul(x, x)));
        if (sqrt_min[target] >= 0) {
            return {x, from_index(static_cast<u64>(sqrt_min[target]))};
        }
    }
    throw std::logic_error("no sum of two squares equals -1");
}

}  // namespace exunits
