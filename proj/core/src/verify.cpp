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

#include "exunits/verify.hpp"

#include <array>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "exunits/count.hpp"
#include "exunits/gf.hpp"
#include "exunits/mat2.hpp"
#include "exunits/parse.hpp"
#include "exunits/quat.hpp"
#include "exunits/ring.hpp"

namespace exunits {

namespace {

void add_check(std::vector<CheckResult>& out, const std::string& suite, std::string name,
               std::string expected, std::string actual) {
    bool pass = expected == actual;
    out.push_back({suite, std::move(name), std::move(expected), std::move(actual), pass});
}

void add_flag(std::vector<CheckResult>& out, const std::string& suite, std::string name, bool ok,
              std::string detail) {
    out.push_back({suite, std::move(name), "ok", ok ? "ok" : std::move(detail), ok});
}

bool prime_power(u64 q, u64& p, u32& r) {
    if (q < 2) return false;
    u64 d = 2;
    while (d * d <= q && q % d != 0) ++d;
    p = (d * d <= q) ? d : q;
    u64 rest = q;
    r = 0;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    return rest == 1;
}

template <typename Body>
void parallel_chunks(u64 count, unsigned jobs, Body&& body) {
    unsigned workers = jobs != 0 ? jobs : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (count < 64) workers = 1;
    if (count > 0 && u64{workers} > count) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        body(u64{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        u64 lo = count * t / workers;
        u64 hi = count * (t + 1) / workers;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

// The nonunits form an ideal exactly when they are closed under addition.
bool nonunits_closed(const Ambient& A, unsigned jobs) {
    std::vector<u64> nonunits;
    for (u64 idx = 0; idx < A.size(); ++idx) {
        if (!A.is_unit(idx)) nonunits.push_back(idx);
    }
    std::atomic<bool> ok{true};
    parallel_chunks(nonunits.size(), jobs, [&](u64 lo, u64 hi) {
        const u64 n = A.size();
        for (u64 t = lo; t < hi && ok.load(std::memory_order_relaxed); ++t) {
            DigitWalk walk(A, nonunits[t], 0, +1);
            for (u64 y = 0; y < n;) {
                if (!A.is_unit(y) && A.is_unit(walk.value())) {
                    ok.store(false, std::memory_order_relaxed);
                    break;
                }
                if (++y == n) break;
                walk.advance();
            }
        }
    });
    return ok.load();
}

Quaternion lift_coords(const RingSpec& R, const std::array<FieldElem, 4>& coords) {
    const LocalRingSpec& L = R.local(0);
    return Quaternion{RingElem{L.lift(coords[0])}, RingElem{L.lift(coords[1])},
                      RingElem{L.lift(coords[2])}, RingElem{L.lift(coords[3])}};
}

Quaternion lift_matrix(const RingSpec& R, const PsiMap& psi, const Mat2& C) {
    return lift_coords(R, psi.invert(C));
}

Mat2 psi_of(const RingSpec& R, const PsiMap& psi, const Quaternion& a) {
    std::array<FieldElem, 4> res = {R.residues(a.x1)[0], R.residues(a.x2)[0],
                                    R.residues(a.x3)[0], R.residues(a.x4)[0]};
    return psi.apply(res);
}

Mat2 m_inv(const FieldSpec& F, const Mat2& M) {
    FieldElem s = F.inv(m_det(F, M));
    return Mat2{F.mul(s, M.d), F.mul(s, F.neg(M.b)), F.mul(s, F.neg(M.c)), F.mul(s, M.a)};
}

// Four singular-or-unit representatives with exact closed forms, optionally
// extended to one representative per residue class.
std::vector<std::pair<std::string, Mat2>> class_reps(const FieldSpec& F, bool all_classes) {
    const FieldElem z = F.zero();
    const FieldElem o = F.one();
    const FieldElem two = F.from_int(2);
    std::vector<Mat2> mats = {
        Mat2{z, z, z, z},
        Mat2{o, z, z, o},
        Mat2{o, z, z, z},
        Mat2{z, o, z, z},
    };
    if (all_classes) {
        mats.push_back(Mat2{two, z, z, two});
        mats.push_back(Mat2{z, o, F.neg(o), z});
        mats.push_back(Mat2{two, z, z, z});
    }
    std::vector<std::pair<std::string, Mat2>> out;
    out.reserve(mats.size());
    for (const Mat2& C : mats) out.emplace_back(mat_class_name(classify(F, C).tag), C);
    return out;
}

void suite_fields(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::string suite = "fields";
    for (u64 q = 2; q <= opts.max_q; ++q) {
        u64 p = 0;
        u32 r = 0;
        if (!prime_power(q, p, r)) continue;
        FieldSpec F = FieldSpec::make(p, r);
        Ambient A = Ambient::field(F);
        for (u32 k = 2; k <= 4; ++k) {
            std::vector<u64> table = phi_k_table(A, k, opts.jobs);
            std::string bad;
            for (u64 idx = 0; idx < q && bad.empty(); ++idx) {
                BigInt formula = phi_k_field_formula(F, F.from_index(idx), k).value();
                if (formula != BigInt(table[idx])) {
                    bad = "c=" + print_field_elem(F, F.from_index(idx)) + " formula " +
                          formula.str() + " oracle " + std::to_string(table[idx]);
                }
            }
            if (k == 2 && bad.empty()) {
                u64 scanned = phi2_scan_oracle(A, A.one(), opts.jobs).value().convert_to<u64>();
                if (scanned != table[A.one()]) {
                    bad = "pair scan " + std::to_string(scanned) + " table " +
                          std::to_string(table[A.one()]);
                }
            }
            add_flag(out, suite,
                     "GF(" + std::to_string(q) + ") k=" + std::to_string(k) +
                         " formula matches enumeration at every target",
                     bad.empty(), bad);
        }
    }
    {
        std::string bad;
        for (u64 k = 2; k <= 30 && bad.empty(); ++k) {
            BigInt s = 0;
            for (u64 j = 0; 2 * j <= k; ++j) s += binomial(k, 2 * j);
            if (s != bpow(2, k - 1)) bad = "k=" + std::to_string(k) + " sum " + s.str();
        }
        add_flag(out, suite, "even-index binomial sums equal 2^(k-1) for k=2..30", bad.empty(),
                 bad);
    }
}

void suite_even(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::string suite = "even";
    std::vector<RingSpec> rings = {RingSpec::zn(2), RingSpec::zn(4), RingSpec::field(2, 2),
                                   RingSpec::single(LocalRingSpec::make(2, 2, 2))};
    for (const RingSpec& R : rings) {
        if (bpow(R.order(), 4) > BigInt(opts.max_hr_order)) continue;
        const std::string label = print_ring_spec(R);
        Ambient A = Ambient::quaternion(R);
        QuatRadicalView view = q_radical_view(R, q_zero(R));

        BigInt nonunit_count = BigInt(A.size()) - BigInt(A.unit_count());
        add_check(out, suite, label + " radical size equals nonunit census",
                  view.radical_size.str(), nonunit_count.str());
        add_flag(out, suite, label + " nonunits are closed under addition",
                 nonunits_closed(A, opts.jobs), "found a unit sum of two nonunits");

        const LocalRingSpec& L = R.local(0);
        const FieldSpec& F = L.residue_field();
        std::vector<u32> ks = {2, 3};
        if (R.order() == BigInt(2)) ks.push_back(4);
        for (u32 k : ks) {
            std::vector<u64> table = phi_k_table(A, k, opts.jobs);
            BigInt total = 0;
            for (u64 v : table) total += v;
            add_check(out, suite,
                      label + " k=" + std::to_string(k) + " tuple total equals |E|^k",
                      bpow(A.exceptional_count(), k).str(), total.str());
            for (u64 s = 0; s < F.q(); ++s) {
                FieldElem sbar = F.from_index(s);
                Quaternion rep = q_zero(R);
                rep.x1 = RingElem{L.lift(sbar)};
                u64 idx = quat_index(R, rep);
                BigInt formula = phi_k_even_quaternion(R, rep, k).value();
                add_check(out, suite,
                          label + " k=" + std::to_string(k) + " closed form at s=" +
                              print_field_elem(F, sbar),
                          std::to_string(table[idx]), formula.str());
                if (k == 2 && s == 0) {
                    BigInt scanned = phi2_scan_oracle(A, idx, opts.jobs).value();
                    add_check(out, suite, label + " pair scan agrees with convolution",
                              std::to_string(table[idx]), scanned.str());
                }
            }
        }
    }
}

void suite_odd(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::string suite = "odd";
    std::vector<RingSpec> rings = {RingSpec::zn(3), RingSpec::zn(5), RingSpec::zn(9),
                                   RingSpec::field(3, 2)};
    for (const RingSpec& R : rings) {
        if (bpow(R.order(), 4) > BigInt(opts.max_hr_order)) continue;
        const std::string label = print_ring_spec(R);
        const FieldSpec& F = R.local(0).residue_field();
        PsiMap psi(F);
        Ambient A = Ambient::quaternion(R);
        for (const auto& [cls, C] : class_reps(F, false)) {
            Quaternion c = lift_matrix(R, psi, C);
            PhiResult formula = phi2_odd_quaternion(R, c, false, opts.jobs);
            BigInt oracle = phi2_scan_oracle(A, quat_index(R, c), opts.jobs).value();
            add_check(out, suite, label + " pair count at a " + cls + " residue",
                      oracle.str(), formula.value().str());
        }
    }

    RingSpec R15 = RingSpec::zn(15);
    if (bpow(R15.order(), 4) <= BigInt(opts.max_hr_order)) {
        Ambient A15 = Ambient::quaternion(R15);
        Ambient A3 = Ambient::quaternion(R15.factor_ring(0));
        Ambient A5 = Ambient::quaternion(R15.factor_ring(1));
        std::mt19937_64 rng(20260818ull);
        std::string bad;
        for (int trial = 0; trial < 20 && bad.empty(); ++trial) {
            u64 idx = rng() % A15.size();
            Quaternion c = quat_from_index(R15, idx);
            std::vector<Quaternion> parts = quat_split(R15, c);
            BigInt whole = phi2_scan_oracle(A15, idx, opts.jobs).value();
            BigInt left =
                phi2_scan_oracle(A3, quat_index(R15.factor_ring(0), parts[0]), opts.jobs).value();
            BigInt right =
                phi2_scan_oracle(A5, quat_index(R15.factor_ring(1), parts[1]), opts.jobs).value();
            if (whole != left * right) {
                bad = "c index " + std::to_string(idx) + ": " + whole.str() + " vs " +
                      BigInt(left * right).str();
            }
        }
        add_flag(out, suite, "Zn:15 pair counts split across the factor rings (20 samples)",
                 bad.empty(), bad);
    }

    RingSpec R9 = RingSpec::zn(9);
    if (bpow(R9.order(), 4) <= BigInt(opts.max_hr_order)) {
        const LocalRingSpec& L = R9.local(0);
        const FieldSpec& F = L.residue_field();
        PsiMap psi(F);
        Ambient A9 = Ambient::quaternion(R9);
        Ambient M3 = Ambient::mat2(F);
        BigInt scale = bpow(L.radical_order(), 4);
        std::string bad;
        for (const auto& [cls, C] : class_reps(F, true)) {
            if (!bad.empty()) break;
            Quaternion c = lift_matrix(R9, psi, C);
            BigInt whole = phi2_scan_oracle(A9, quat_index(R9, c), opts.jobs).value();
            BigInt matrix = phi2_scan_oracle(M3, mat2_index(F, C), opts.jobs).value();
            if (whole != scale * matrix) {
                bad = cls + ": " + whole.str() + " vs " + BigInt(scale * matrix).str();
            }
        }
        add_flag(out, suite,
                 "Zn:9 pair counts reduce to " + scale.str() + " times the matrix counts",
                 bad.empty(), bad);
    }
}

void suite_matrix(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::string suite = "matrix";
    struct FieldCase {
        u64 p;
        u32 r;
    };
    const std::vector<FieldCase> odd_fields = {{3, 1}, {5, 1}, {7, 1}, {3, 2}};

    for (const FieldCase& fc : odd_fields) {
        u64 q = 1;
        for (u32 t = 0; t < fc.r; ++t) q *= fc.p;
        if (q > opts.max_q) continue;
        FieldSpec F = FieldSpec::make(fc.p, fc.r);
        Ambient M = Ambient::mat2(F);
        for (const auto& [cls, C] : class_reps(F, false)) {
            BigInt formula = phi2_mat_formula(F, classify(F, C)).value();
            BigInt oracle = phi2_scan_oracle(M, mat2_index(F, C), opts.jobs).value();
            add_check(out, suite,
                      "M2(GF(" + std::to_string(q) + ")) closed form at the " + cls + " class",
                      oracle.str(), formula.str());
        }
    }

    {
        std::string bad;
        for (u64 q : {u64{2}, u64{3}, u64{4}, u64{5}}) {
            u64 p = 0;
            u32 r = 0;
            prime_power(q, p, r);
            FieldSpec F = FieldSpec::make(p, r);
            u64 units = Ambient::mat2(F).unit_count();
            if (BigInt(units) != gl2_order(q)) {
                bad = "q=" + std::to_string(q) + " census " + std::to_string(units);
                break;
            }
        }
        add_flag(out, suite, "GL2 order formula matches the unit census for q=2,3,4,5",
                 bad.empty(), bad);
    }

    for (const FieldCase& fc : odd_fields) {
        u64 q = 1;
        for (u32 t = 0; t < fc.r; ++t) q *= fc.p;
        if (q > opts.max_q) continue;
        FieldSpec F = FieldSpec::make(fc.p, fc.r);
        RingSpec R = RingSpec::field(fc.p, fc.r);
        PsiMap psi(F);
        const u64 n = q * q * q * q;
        const bool exhaustive = q <= 5;

        std::string bad;
        if (exhaustive) {
            for (u64 ia = 0; ia < n && bad.empty(); ++ia) {
                Quaternion a = quat_from_index(R, ia);
                Mat2 ma = psi_of(R, psi, a);
                for (u64 ib = 0; ib < n; ++ib) {
                    Quaternion b = quat_from_index(R, ib);
                    if (!(m_mul(F, ma, psi_of(R, psi, b)) == psi_of(R, psi, q_mul(R, a, b)))) {
                        bad = "indices " + std::to_string(ia) + "," + std::to_string(ib);
                        break;
                    }
                }
            }
        } else {
            std::mt19937_64 rng(0x5eedull + q);
            for (int trial = 0; trial < 10000 && bad.empty(); ++trial) {
                Quaternion a = quat_from_index(R, rng() % n);
                Quaternion b = quat_from_index(R, rng() % n);
                if (!(m_mul(F, psi_of(R, psi, a), psi_of(R, psi, b)) ==
                      psi_of(R, psi, q_mul(R, a, b)))) {
                    bad = "trial " + std::to_string(trial);
                }
            }
        }
        add_flag(out, suite,
                 "quaternion-to-matrix map over GF(" + std::to_string(q) + ") is multiplicative" +
                     (exhaustive ? "" : " (10000 samples)"),
                 bad.empty(), bad);

        if (exhaustive) {
            std::vector<uint8_t> seen(n, 0);
            bool distinct = true;
            for (u64 ia = 0; ia < n; ++ia) {
                u64 im = mat2_index(F, psi_of(R, psi, quat_from_index(R, ia)));
                if (seen[im]) {
                    distinct = false;
                    break;
                }
                seen[im] = 1;
            }
            add_flag(out, suite,
                     "quaternion-to-matrix map over GF(" + std::to_string(q) + ") is a bijection",
                     distinct, "two quaternions share an image");

            std::string nb;
            for (u64 ia = 0; ia < n && nb.empty(); ++ia) {
                Quaternion a = quat_from_index(R, ia);
                FieldElem nr = R.residues(q_norm(R, a))[0];
                if (!(m_det(F, psi_of(R, psi, a)) == nr)) nb = "index " + std::to_string(ia);
            }
            add_flag(out, suite,
                     "determinant of the image equals the quaternion norm over GF(" +
                         std::to_string(q) + ")",
                     nb.empty(), nb);

            Ambient AQ = Ambient::quaternion(R);
            Ambient AM = Ambient::mat2(F);
            std::string eb;
            for (u64 ia = 0; ia < n && eb.empty(); ++ia) {
                u64 im = mat2_index(F, psi_of(R, psi, quat_from_index(R, ia)));
                if (AQ.is_exceptional(ia) != AM.is_exceptional(im)) {
                    eb = "index " + std::to_string(ia);
                }
            }
            add_flag(out, suite,
                     "exceptional units correspond across the map over GF(" + std::to_string(q) +
                         ")",
                     eb.empty(), eb);
        }
    }

    {
        std::mt19937_64 rng(0xC1A551F7ull);
        std::vector<FieldSpec> fields;
        for (const FieldCase& fc : odd_fields) {
            u64 q = 1;
            for (u32 t = 0; t < fc.r; ++t) q *= fc.p;
            if (q <= opts.max_q) fields.push_back(FieldSpec::make(fc.p, fc.r));
        }
        std::string bad;
        for (int trial = 0; trial < 100 && bad.empty() && !fields.empty(); ++trial) {
            const FieldSpec& F = fields[rng() % fields.size()];
            const u64 n = F.q() * F.q() * F.q() * F.q();
            Mat2 C = mat2_from_index(F, rng() % n);
            Mat2 P = mat2_from_index(F, rng() % n);
            while (!m_is_invertible(F, P)) P = mat2_from_index(F, rng() % n);
            ResidueClass before = classify(F, C);
            ResidueClass after = classify(F, m_mul(F, m_mul(F, P, C), m_inv(F, P)));
            if (before.tag != after.tag || !(before.lambda == after.lambda)) {
                bad = "q=" + std::to_string(F.q()) + " trial " + std::to_string(trial);
            }
        }
        add_flag(out, suite, "residue class is invariant under conjugation (100 samples)",
                 bad.empty(), bad);
    }

    for (u64 q : {u64{3}, u64{5}}) {
        if (q > opts.max_q) continue;
        FieldSpec F = FieldSpec::make(q, 1);
        Ambient M = Ambient::mat2(F);
        std::mt19937_64 rng(0xD00D + q);
        const u64 n = q * q * q * q;
        std::string bad;
        for (int ci = 0; ci < 10 && bad.empty(); ++ci) {
            u64 cidx = rng() % n;
            Mat2 C = mat2_from_index(F, cidx);
            BigInt base = phi2_scan_oracle(M, cidx, opts.jobs).value();
            for (int pi = 0; pi < 3; ++pi) {
                Mat2 P = mat2_from_index(F, rng() % n);
                while (!m_is_invertible(F, P)) P = mat2_from_index(F, rng() % n);
                Mat2 conj = m_mul(F, m_mul(F, P, C), m_inv(F, P));
                BigInt moved = phi2_scan_oracle(M, mat2_index(F, conj), opts.jobs).value();
                if (moved != base) {
                    bad = "q=" + std::to_string(q) + " target " + std::to_string(cidx);
                    break;
                }
            }
        }
        add_flag(out, suite,
                 "pair counts over M2(GF(" + std::to_string(q) +
                     ")) are invariant under conjugation",
                 bad.empty(), bad);
    }
}

void suite_bounds(const VerifyOptions& opts, std::vector<CheckResult>& out) {
    const std::string suite = "bounds";
    if (9 <= opts.max_q) {
        FieldSpec F = FieldSpec::make(3, 2);
        Ambient M = Ambient::mat2(F);
        const u64 n = F.q() * F.q() * F.q() * F.q();
        std::mt19937_64 rng(0xB0CEDull);

        std::string bad;
        for (int trial = 0; trial < 50 && bad.empty(); ++trial) {
            u64 idx = rng() % n;
            Mat2 C = mat2_from_index(F, idx);
            while (!m_is_invertible(F, C)) {
                idx = rng() % n;
                C = mat2_from_index(F, idx);
            }
            PhiResult claim = phi2_mat_formula(F, classify(F, C));
            BigInt oracle = phi2_scan_oracle(M, idx, opts.jobs).value();
            if (!claim.contains(oracle)) {
                bad = "index " + std::to_string(idx) + " count " + oracle.str() + " outside [" +
                      claim.lo.str() + "," + claim.hi.str() + "]";
            }
        }
        add_flag(out, suite, "q=9 invertible targets fall inside the reported intervals (50 samples)",
                 bad.empty(), bad);

        std::string lbad;
        for (u64 li = 2; li < F.q() && lbad.empty(); ++li) {
            FieldElem lambda = F.from_index(li);
            Mat2 C{lambda, F.zero(), F.zero(), F.zero()};
            PhiResult claim = phi2_mat_formula(F, classify(F, C));
            BigInt oracle = phi2_scan_oracle(M, mat2_index(F, C), opts.jobs).value();
            if (!claim.contains(oracle)) {
                lbad = "lambda=" + print_field_elem(F, lambda) + " count " + oracle.str() +
                       " outside [" + claim.lo.str() + "," + claim.hi.str() + "]";
            }
        }
        add_flag(out, suite, "q=9 lambda-idempotent intervals contain the enumerated counts",
                 lbad.empty(), lbad);

        std::string rbad;
        const BigInt qv = 9;
        const BigInt qm8 = 1;
        for (int ci = 0; ci < 10 && rbad.empty(); ++ci) {
            u64 cidx = rng() % n;
            Mat2 C = mat2_from_index(F, cidx);
            BigInt base = phi2_scan_oracle(M, cidx, opts.jobs).value();
            for (u64 li = 1; li < F.q(); ++li) {
                FieldElem lambda = F.from_index(li);
                Mat2 scaled = m_scale(F, lambda, C);
                BigInt moved = phi2_scan_oracle(M, mat2_index(F, scaled), opts.jobs).value();
                if (qm8 * base > qv * moved || qm8 * moved > qv * base) {
                    rbad = "target " + std::to_string(cidx) + " lambda " +
                           print_field_elem(F, lambda);
                    break;
                }
            }
        }
        add_flag(out, suite,
                 "q=9 unit scaling moves pair counts by at most the q/(q-8) ratio",
                 rbad.empty(), rbad);
    }

    for (u64 q : {u64{3}, u64{5}}) {
        if (q > opts.max_q) continue;
        FieldSpec F = FieldSpec::make(q, 1);
        Ambient M = Ambient::mat2(F);
        const u64 n = q * q * q * q;
        std::vector<u64> table = phi_k_table(M, 2, opts.jobs);
        u64 at_identity = table[mat2_index(F, m_identity(F))];
        u64 peak = 0;
        std::string bad;
        for (u64 idx = 0; idx < n; ++idx) {
            if (!m_is_invertible(F, mat2_from_index(F, idx))) continue;
            if (table[idx] > peak) peak = table[idx];
            if (table[idx] > at_identity) {
                bad = "index " + std::to_string(idx) + " count " + std::to_string(table[idx]) +
                      " exceeds " + std::to_string(at_identity);
                break;
            }
        }
        if (bad.empty() && peak != at_identity) bad = "identity does not attain the maximum";
        add_flag(out, suite,
                 "q=" + std::to_string(q) +
                     " identity maximizes pair counts over the invertible targets",
                 bad.empty(), bad);
    }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    bool all = suite == "all";
    bool known = all;
    if (all || suite == "fields") {
        suite_fields(opts, out);
        known = true;
    }
    if (all || suite == "even") {
        suite_even(opts, out);
        known = true;
    }
    if (all || suite == "odd") {
        suite_odd(opts, out);
        known = true;
    }
    if (all || suite == "matrix") {
        suite_matrix(opts, out);
        known = true;
    }
    if (all || suite == "bounds") {
        suite_bounds(opts, out);
        known = true;
    }
    if (!known) throw std::invalid_argument("unknown verification suite: " + suite);
    return out;
}

}  // namespace exunits
