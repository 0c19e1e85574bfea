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

#include "exunits/count.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace exunits {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Oracle: return "Oracle";
        case Provenance::FieldFormula: return "FieldFormula";
        case Provenance::EvenTheorem: return "EvenTheorem";
        case Provenance::OddTheorem: return "OddTheorem";
        case Provenance::RadicalReduction: return "RadicalReduction";
        case Provenance::ProductRule: return "ProductRule";
    }
    throw std::logic_error("unreachable provenance tag");
}

std::string provenance_label(Provenance p, const std::string& detail) {
    std::string name = provenance_name(p);
    if (detail.empty()) return name;
    return name + "(" + detail + ")";
}

PhiResult PhiResult::exact(BigInt v, Provenance p, std::string detail) {
    if (v < 0) throw std::logic_error("exact count must be nonnegative");
    PhiResult r;
    r.is_exact = true;
    r.lo = v;
    r.hi = std::move(v);
    r.provenance = p;
    r.detail = std::move(detail);
    return r;
}

PhiResult PhiResult::bounds(BigInt lo, BigInt hi, Provenance p, std::string detail) {
    if (lo < 0 || hi < lo) throw std::logic_error("malformed count interval");
    PhiResult r;
    r.is_exact = false;
    r.lo = std::move(lo);
    r.hi = std::move(hi);
    r.provenance = p;
    r.detail = std::move(detail);
    return r;
}

const BigInt& PhiResult::value() const {
    if (!is_exact) throw std::logic_error("interval result has no single value");
    return lo;
}

void Ambient::finish_layout() {
    stride_.resize(radix_.size());
    u64 acc = 1;
    for (std::size_t t = 0; t < radix_.size(); ++t) {
        stride_[t] = acc;
        acc *= radix_[t];
    }
    if (acc != size_) throw std::logic_error("digit layout does not cover the ambient size");
}

void Ambient::finish_counts() {
    unit_count_ = 0;
    exc_count_ = 0;
    for (u64 idx = 0; idx < size_; ++idx) {
        unit_count_ += unit_[idx];
        exc_count_ += exc_[idx];
    }
}

Ambient Ambient::field(const FieldSpec& F) {
    Ambient A;
    A.name_ = "GF(" + std::to_string(F.q()) + ")";
    A.size_ = F.q();
    if (A.size_ > limits().max_enumeration) {
        throw SizeLimitError("field enumeration exceeds the configured cap");
    }
    A.radix_.assign(F.r(), F.p());
    A.finish_layout();
    A.one_ = F.index(F.one());
    A.unit_.assign(A.size_, 0);
    A.exc_.assign(A.size_, 0);
    const FieldElem one = F.one();
    for (u64 idx = 0; idx < A.size_; ++idx) {
        const FieldElem e = F.from_index(idx);
        const bool u = !F.is_zero(e);
        A.unit_[idx] = u;
        A.exc_[idx] = u && !F.is_zero(F.sub(one, e));
    }
    A.finish_counts();
    return A;
}

Ambient Ambient::mat2(const FieldSpec& F) {
    Ambient A;
    A.name_ = "M2(GF(" + std::to_string(F.q()) + "))";
    const BigInt total = bpow(BigInt(F.q()), 4);
    if (total > BigInt(limits().max_enumeration)) {
        throw SizeLimitError("matrix enumeration exceeds the configured cap");
    }
    A.size_ = static_cast<u64>(total);
    A.radix_.assign(std::size_t{4} * F.r(), F.p());
    A.finish_layout();
    const Mat2 I = m_identity(F);
    A.one_ = mat2_index(F, I);
    A.unit_.assign(A.size_, 0);
    A.exc_.assign(A.size_, 0);
    for (u64 idx = 0; idx < A.size_; ++idx) {
        const Mat2 M = mat2_from_index(F, idx);
        const bool u = m_is_invertible(F, M);
        A.unit_[idx] = u;
        A.exc_[idx] = u && m_is_invertible(F, m_sub(F, M, I));
    }
    A.finish_counts();
    return A;
}

Ambient Ambient::quaternion(const RingSpec& R) {
    const u64 m = R.small_order();
    const BigInt total = bpow(BigInt(m), 4);
    if (total > BigInt(limits().max_enumeration)) {
        throw SizeLimitError("quaternion enumeration over " + total.str() +
                             " elements exceeds the configured cap");
    }
    Ambient A;
    A.name_ = "H(R)";
    A.size_ = static_cast<u64>(total);
    for (int copy = 0; copy < 4; ++copy) {
        for (std::size_t i = 0; i < R.factors(); ++i) {
            const LocalRingSpec& L = R.local(i);
            for (u32 t = 0; t < L.r(); ++t) A.radix_.push_back(L.coeff_mod());
        }
    }
    A.finish_layout();
    A.one_ = quat_index(R, q_one(R));

    // Coefficient-ring operation tables; the element pass below is pure
    // lookups. norm(a) = sum of coordinate squares, and norm(1 - a) only
    // differs in the x1 term since squares kill coordinate signs.
    std::vector<RingElem> elems;
    elems.reserve(m);
    for (u64 t = 0; t < m; ++t) elems.push_back(R.from_index(t));
    const RingElem one = R.one();
    std::vector<u64> add_tbl(m * m), sq(m), one_minus_sq(m);
    std::vector<std::uint8_t> unit_tbl(m);
    for (u64 a = 0; a < m; ++a) {
        for (u64 b = 0; b < m; ++b) {
            add_tbl[a * m + b] = R.index(R.add(elems[a], elems[b]));
        }
    }
    for (u64 t = 0; t < m; ++t) {
        sq[t] = R.index(R.mul(elems[t], elems[t]));
        unit_tbl[t] = R.is_unit(elems[t]);
    }
    for (u64 t = 0; t < m; ++t) {
        one_minus_sq[t] = sq[R.index(R.sub(one, elems[t]))];
    }

    A.unit_.assign(A.size_, 0);
    A.exc_.assign(A.size_, 0);
    u64 idx = 0;
    for (u64 i4 = 0; i4 < m; ++i4) {
        for (u64 i3 = 0; i3 < m; ++i3) {
            const u64 s43 = add_tbl[sq[i4] * m + sq[i3]];
            for (u64 i2 = 0; i2 < m; ++i2) {
                const u64 s432 = add_tbl[s43 * m + sq[i2]];
                const u64* row = add_tbl.data() + s432 * m;
                for (u64 i1 = 0; i1 < m; ++i1, ++idx) {
                    const std::uint8_t u = unit_tbl[row[sq[i1]]];
                    A.unit_[idx] = u;
                    A.exc_[idx] = u & unit_tbl[row[one_minus_sq[i1]]];
                }
            }
        }
    }
    A.finish_counts();
    return A;
}

u64 Ambient::add(u64 a, u64 b) const {
    u64 out = 0;
    for (std::size_t t = 0; t < radix_.size(); ++t) {
        const u64 m = radix_[t];
        u64 s = a % m + b % m;
        if (s >= m) s -= m;
        out += s * stride_[t];
        a /= m;
        b /= m;
    }
    return out;
}

u64 Ambient::sub(u64 a, u64 b) const {
    u64 out = 0;
    for (std::size_t t = 0; t < radix_.size(); ++t) {
        const u64 m = radix_[t];
        u64 s = a % m + m - b % m;
        if (s >= m) s -= m;
        out += s * stride_[t];
        a /= m;
        b /= m;
    }
    return out;
}

void Ambient::decompose(u64 idx, std::vector<u64>& digits) const {
    digits.resize(radix_.size());
    for (std::size_t t = 0; t < radix_.size(); ++t) {
        digits[t] = idx % radix_[t];
        idx /= radix_[t];
    }
}

DigitWalk::DigitWalk(const Ambient& A, u64 base, u64 start, int dir)
    : A_(&A), dir_(dir) {
    const auto& radix = A.radix();
    const auto& stride = A.stride();
    const std::size_t D = radix.size();
    xdig_.resize(D);
    wdig_.resize(D);
    bdig_.resize(D);
    w_ = 0;
    for (std::size_t t = 0; t < D; ++t) {
        bdig_[t] = base % radix[t];
        base /= radix[t];
        xdig_[t] = start % radix[t];
        start /= radix[t];
        u64 wd = dir_ > 0 ? bdig_[t] + xdig_[t] : bdig_[t] + radix[t] - xdig_[t];
        if (wd >= radix[t]) wd -= radix[t];
        wdig_[t] = wd;
        w_ += wd * stride[t];
    }
}

void DigitWalk::advance() {
    const auto& radix = A_->radix();
    const auto& stride = A_->stride();
    std::size_t t = 0;
    for (;;) {
        if (xdig_[t] + 1 == radix[t]) {
            // x digit wraps to 0, so the w digit returns to its base value.
            xdig_[t] = 0;
            w_ += (bdig_[t] - wdig_[t]) * stride[t];
            wdig_[t] = bdig_[t];
            ++t;
        } else {
            ++xdig_[t];
            u64 nv = wdig_[t] + (dir_ > 0 ? u64{1} : radix[t] - 1);
            if (nv >= radix[t]) nv -= radix[t];
            w_ += (nv - wdig_[t]) * stride[t];
            wdig_[t] = nv;
            return;
        }
    }
}

namespace {

unsigned plan_jobs(u64 work, unsigned jobs) {
    unsigned J = jobs != 0 ? jobs : std::thread::hardware_concurrency();
    if (J == 0) J = 1;
    if (work < (u64{1} << 12)) J = 1;
    return J;
}

// Runs body(lo, hi, slot) over a partition of [0, count) into J chunks.
// Slots are distinct, so the body may write slot-private state freely.
template <typename Body>
void run_parallel(unsigned J, u64 count, Body&& body) {
    if (J > count) J = static_cast<unsigned>(count);
    if (J <= 1) {
        body(0, count, 0);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(J);
    for (unsigned t = 0; t < J; ++t) {
        const u64 lo = count * t / J;
        const u64 hi = count * (t + 1) / J;
        threads.emplace_back([&body, lo, hi, t] { body(lo, hi, t); });
    }
    for (auto& th : threads) th.join();
}

// One additive convolution of v with the exceptional indicator:
// out[u + x] += v[x] for every exceptional u.
std::vector<u64> conv_with_exc(const Ambient& A, const std::vector<u64>& v, unsigned jobs) {
    const u64 n = A.size();
    const auto& exc = A.exceptional();
    std::vector<u64> elist;
    elist.reserve(A.exceptional_count());
    for (u64 u = 0; u < n; ++u) {
        if (exc[u]) elist.push_back(u);
    }
    if (elist.empty()) return std::vector<u64>(n, 0);

    unsigned J = plan_jobs(elist.size() * n, jobs);
    if (J > elist.size()) J = static_cast<unsigned>(elist.size());
    // Each worker owns a full-size accumulator; cap their total footprint.
    const u64 max_slabs = std::max<u64>(1, (u64{512} << 20) / (n * 8));
    if (J > max_slabs) J = static_cast<unsigned>(max_slabs);

    std::vector<std::vector<u64>> slabs(J);
    run_parallel(J, elist.size(), [&](u64 lo, u64 hi, unsigned slot) {
        auto& out = slabs[slot];
        out.assign(n, 0);
        for (u64 e = lo; e < hi; ++e) {
            DigitWalk walk(A, elist[e], 0, +1);
            for (u64 x = 0; x < n;) {
                if (v[x] != 0) out[walk.value()] += v[x];
                if (++x == n) break;
                walk.advance();
            }
        }
    });
    std::vector<u64> out = std::move(slabs[0]);
    for (unsigned s = 1; s < J; ++s) {
        const auto& slab = slabs[s];
        for (u64 i = 0; i < n; ++i) out[i] += slab[i];
    }
    return out;
}

void check_accumulator_headroom(u64 ecount, u32 k) {
    if (ecount == 0) return;
    const BigInt cap = std::numeric_limits<std::int64_t>::max();
    if (bpow(BigInt(ecount), k - 1) > cap) {
        throw SizeLimitError("tuple counts exceed the 64-bit accumulator range");
    }
}

BigInt field_formula_value(const FieldSpec& F, const FieldElem& c, u32 k) {
    const BigInt q = F.q();
    BigInt S = 0;
    for (u32 j = 0; j <= k; ++j) {
        if (F.from_int(static_cast<long long>(j)) == c) S += binomial(k, j);
    }
    BigInt raw = q * S - bpow(2, k) + bpow(BigInt(2) - q, k);
    if (k % 2 == 1) raw = -raw;
    if (raw % q != 0) throw std::logic_error("field count is not divisible by the field order");
    BigInt out = raw / q;
    if (out < 0) throw std::logic_error("field count came out negative");
    return out;
}

}  // namespace

PhiResult phi2_scan_oracle(const Ambient& A, u64 c, unsigned jobs) {
    const u64 n = A.size();
    const unsigned J = plan_jobs(n, jobs);
    std::vector<u64> partial(std::max(J, 1u), 0);
    run_parallel(J, n, [&](u64 lo, u64 hi, unsigned slot) {
        const auto& exc = A.exceptional();
        u64 cnt = 0;
        if (lo < hi) {
            DigitWalk walk(A, c, lo, -1);
            for (u64 x = lo; x < hi;) {
                if (exc[x] && exc[walk.value()]) ++cnt;
                if (++x == hi) break;
                walk.advance();
            }
        }
        partial[slot] = cnt;
    });
    u64 total = 0;
    for (u64 v : partial) total += v;
    return PhiResult::exact(BigInt(total), Provenance::Oracle);
}

PhiResult phi_k_convolution_oracle(const Ambient& A, u64 c, u32 k, unsigned jobs) {
    if (k < 2) throw std::invalid_argument("tuple length must be at least 2");
    const u64 n = A.size();
    const auto& exc = A.exceptional();
    if (A.exceptional_count() == 0) return PhiResult::exact(0, Provenance::Oracle);
    check_accumulator_headroom(A.exceptional_count(), k);
    if (k == 2) {
        u64 cnt = 0;
        for (u64 u = 0; u < n; ++u) {
            if (exc[u] && exc[A.sub(c, u)]) ++cnt;
        }
        return PhiResult::exact(BigInt(cnt), Provenance::Oracle);
    }
    std::vector<u64> v(exc.begin(), exc.end());
    for (u32 pass = 0; pass + 2 < k; ++pass) v = conv_with_exc(A, v, jobs);
    const unsigned J = plan_jobs(n, jobs);
    std::vector<u64> partial(std::max(J, 1u), 0);
    run_parallel(J, n, [&](u64 lo, u64 hi, unsigned slot) {
        u64 cnt = 0;
        if (lo < hi) {
            DigitWalk walk(A, c, lo, -1);
            for (u64 x = lo; x < hi;) {
                if (v[x] != 0 && exc[walk.value()]) cnt += v[x];
                if (++x == hi) break;
                walk.advance();
            }
        }
        partial[slot] = cnt;
    });
    u64 total = 0;
    for (u64 p : partial) total += p;
    return PhiResult::exact(BigInt(total), Provenance::Oracle);
}

std::vector<u64> phi_k_table(const Ambient& A, u32 k, unsigned jobs) {
    if (k < 2) throw std::invalid_argument("tuple length must be at least 2");
    check_accumulator_headroom(A.exceptional_count(), k);
    const auto& exc = A.exceptional();
    std::vector<u64> v(exc.begin(), exc.end());
    for (u32 pass = 1; pass < k; ++pass) v = conv_with_exc(A, v, jobs);
    return v;
}

PhiResult phi_k_field_formula(const FieldSpec& F, const FieldElem& c, u32 k) {
    if (k < 2) throw std::invalid_argument("tuple length must be at least 2");
    return PhiResult::exact(field_formula_value(F, c, k), Provenance::FieldFormula);
}

PhiResult phi_k_even_quaternion(const RingSpec& R, const Quaternion& c, u32 k) {
    if (k < 2) throw std::invalid_argument("tuple length must be at least 2");
    if (R.factors() != 1 || R.local(0).p() != 2) {
        throw std::invalid_argument("even closed form needs one local factor of characteristic 2");
    }
    const LocalRingSpec& L = R.local(0);
    const FieldSpec& F = L.residue_field();
    const QuatRadicalView view = q_radical_view(R, c);
    const FieldElem& sbar = view.scalar_residue;
    const u64 nn = L.n();
    const u64 rr = L.r();
    const u64 e = (4 * nn * k - 4 * nn - k) * rr;
    BigInt inner = bpow(BigInt(2) - bpow(2, rr), k) - bpow(2, k);
    if (F.is_zero(sbar) || sbar == F.one()) inner += bpow(2, rr + k - 1);
    BigInt val = bpow(2, e) * inner;
    if (k % 2 == 1) val = -val;
    const BigInt alt = bpow(view.radical_size, k - 1) * field_formula_value(F, sbar, k);
    if (val != alt) throw std::logic_error("even closed form disagrees with the radical census");
    if (val < 0) throw std::logic_error("even count came out negative");
    return PhiResult::exact(val, Provenance::EvenTheorem);
}

PhiResult phi2_mat_formula(const FieldSpec& F, const ResidueClass& cls) {
    if (F.p() == 2) throw std::invalid_argument("matrix class counts need odd characteristic");
    const BigInt q = F.q();
    const BigInt q2 = q * q, q3 = q2 * q, q4 = q3 * q;
    const std::string name = mat_class_name(cls.tag);
    switch (cls.tag) {
        case MatClassTag::Zero:
            return PhiResult::exact(q4 - 3 * q3 + 6 * q, Provenance::OddTheorem, name);
        case MatClassTag::Identity:
            return PhiResult::exact(q4 - 2 * q3 - q2 + 3 * q, Provenance::OddTheorem, name);
        case MatClassTag::IdempotentRankOne:
            return PhiResult::exact(q4 - 4 * q3 + 5 * q2 - 4 * q + 4, Provenance::OddTheorem,
                                    name);
        case MatClassTag::NilpotentNonzero:
            return PhiResult::exact(q4 - 4 * q3 + 3 * q2 + 2 * q, Provenance::OddTheorem, name);
        case MatClassTag::ScalarOther:
        case MatClassTag::InvertibleOther: {
            const BigInt lo = q >= 9 ? q3 * (q - 8) : BigInt(0);
            const BigInt hi = q4 - 2 * q3 - q2 + 3 * q;
            return PhiResult::bounds(lo, hi, Provenance::OddTheorem, name);
        }
        case MatClassTag::LambdaIdempotent: {
            if (q < 9) {
                // No usable closed bound this small; enumeration fallback in
                // phi2_odd_quaternion supplies the exact value.
                return PhiResult::bounds(0, q4, Provenance::OddTheorem, name);
            }
            const BigInt P = q4 - 4 * q3 + 5 * q2 - 4 * q + 4;
            BigInt lo = ceil_div((q - 8) * P, q);
            lo = std::max(lo, BigInt(q3 * (q - 8)));
            const BigInt hi = floor_div(q * P, q - 8);
            return PhiResult::bounds(lo, hi, Provenance::OddTheorem, name);
        }
    }
    throw std::logic_error("unreachable matrix class tag");
}

PhiResult phi2_odd_quaternion(const RingSpec& R, const Quaternion& c,
                              bool allow_enumeration_fallback, unsigned jobs) {
    if (R.factors() != 1 || R.local(0).p() == 2) {
        throw std::invalid_argument("odd reduction needs one local factor of odd characteristic");
    }
    const LocalRingSpec& L = R.local(0);
    const FieldSpec& F = L.residue_field();
    const QuatRadicalView view = q_radical_view(R, c);
    const PsiMap psi(F);
    const Mat2 cbar = psi.apply(view.coord_residue);
    const ResidueClass cls = classify(F, cbar);
    const BigInt scale = bpow(L.radical_order(), 4);
    const PhiResult base = phi2_mat_formula(F, cls);
    if (base.is_exact) {
        return PhiResult::exact(scale * base.value(), Provenance::OddTheorem, base.detail);
    }
    if (allow_enumeration_fallback && F.q() <= limits().exact_fallback_max_q) {
        const Ambient M = Ambient::mat2(F);
        const PhiResult scan = phi2_scan_oracle(M, mat2_index(F, cbar), jobs);
        return PhiResult::exact(scale * scan.value(), Provenance::RadicalReduction);
    }
    return PhiResult::bounds(scale * base.lo, scale * base.hi, Provenance::OddTheorem,
                             base.detail);
}

PhiResult phi_k_reduce(const RingSpec& R, const Quaternion& c, u32 k, Method method,
                       unsigned jobs) {
    if (k < 2) throw std::invalid_argument("tuple length must be at least 2");
    if (method == Method::Oracle) {
        const Ambient A = Ambient::quaternion(R);
        const u64 target = quat_index(R, c);
        if (k == 2) return phi2_scan_oracle(A, target, jobs);
        return phi_k_convolution_oracle(A, target, k, jobs);
    }
    const std::vector<Quaternion> parts = quat_split(R, c);
    std::vector<PhiResult> results;
    results.reserve(parts.size());
    for (std::size_t i = 0; i < R.factors(); ++i) {
        const RingSpec Ri = R.factor_ring(i);
        const LocalRingSpec& L = R.local(i);
        if (L.p() == 2) {
            results.push_back(phi_k_even_quaternion(Ri, parts[i], k));
        } else if (k == 2) {
            results.push_back(
                phi2_odd_quaternion(Ri, parts[i], method == Method::Auto, jobs));
        } else {
            // No odd closed form beyond pairs: count tuples in the matrix
            // quotient exactly and scale back through the radical.
            const FieldSpec& F = L.residue_field();
            const PsiMap psi(F);
            const QuatRadicalView view = q_radical_view(Ri, parts[i]);
            const Mat2 cbar = psi.apply(view.coord_residue);
            const Ambient M = Ambient::mat2(F);
            const PhiResult inner = phi_k_convolution_oracle(M, mat2_index(F, cbar), k, jobs);
            const BigInt scale = bpow(L.radical_order(), 4 * (u64{k} - 1));
            results.push_back(
                PhiResult::exact(scale * inner.value(), Provenance::RadicalReduction));
        }
    }
    if (results.size() == 1) return results[0];
    BigInt lo = 1, hi = 1;
    bool exact = true;
    for (const PhiResult& r : results) {
        lo *= r.lo;
        hi *= r.hi;
        exact = exact && r.is_exact;
    }
    if (exact) return PhiResult::exact(lo, Provenance::ProductRule);
    return PhiResult::bounds(lo, hi, Provenance::ProductRule);
}

}  // namespace exunits
