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
#include <string>
#include <vector>

#include "exunits/common.hpp"
#include "exunits/gf.hpp"
#include "exunits/mat2.hpp"
#include "exunits/quat.hpp"
#include "exunits/ring.hpp"

namespace exunits {

// How a count was obtained.
enum class Provenance {
    Oracle,            // direct enumeration
    FieldFormula,      // closed form over a finite field
    EvenTheorem,       // closed form for residue characteristic 2
    OddTheorem,        // per-class closed form or bound, odd characteristic
    RadicalReduction,  // exact residue enumeration scaled through the radical
    ProductRule,       // combined across ring factors
};

std::string provenance_name(Provenance p);
// provenance_name, or "name(detail)" when detail is nonempty.
std::string provenance_label(Provenance p, const std::string& detail);

// Number of ordered k-tuples of exceptional units with a fixed sum: either
// an exact value or an inclusive interval. Always 0 <= lo <= hi.
struct PhiResult {
    bool is_exact = false;
    BigInt lo = 0;
    BigInt hi = 0;
    Provenance provenance = Provenance::Oracle;
    std::string detail;  // OddTheorem carries the matrix class name

    static PhiResult exact(BigInt v, Provenance p, std::string detail = {});
    static PhiResult bounds(BigInt lo, BigInt hi, Provenance p, std::string detail = {});

    // Exact results only.
    const BigInt& value() const;
    bool contains(const BigInt& v) const { return lo <= v && v <= hi; }
    std::string label() const { return provenance_label(provenance, detail); }
};

// A fully enumerated additive group with unit and exceptional-unit indicator
// tables: a field GF(q), a matrix ring M_2(GF(q)), or a quaternion ring H(R).
// Element indices are the canonical ones (FieldSpec::index, mat2_index,
// quat_index), and addition acts digitwise on a mixed-radix decomposition of
// the index, which is what the incremental walkers below exploit.
// Immutable after construction; shared freely across threads.
class Ambient {
  public:
    static Ambient field(const FieldSpec& F);
    static Ambient mat2(const FieldSpec& F);
    static Ambient quaternion(const RingSpec& R);

    const std::string& name() const noexcept { return name_; }
    u64 size() const noexcept { return size_; }
    u64 one() const noexcept { return one_; }
    const std::vector<u64>& radix() const noexcept { return radix_; }
    const std::vector<u64>& stride() const noexcept { return stride_; }

    bool is_unit(u64 idx) const { return unit_[idx] != 0; }
    bool is_exceptional(u64 idx) const { return exc_[idx] != 0; }
    const std::vector<std::uint8_t>& units() const noexcept { return unit_; }
    const std::vector<std::uint8_t>& exceptional() const noexcept { return exc_; }
    u64 unit_count() const noexcept { return unit_count_; }
    u64 exceptional_count() const noexcept { return exc_count_; }

    u64 add(u64 a, u64 b) const;
    u64 sub(u64 a, u64 b) const;
    void decompose(u64 idx, std::vector<u64>& digits) const;

  private:
    Ambient() = default;
    void finish_layout();
    void finish_counts();

    std::string name_;
    u64 size_ = 0;
    u64 one_ = 0;
    u64 unit_count_ = 0;
    u64 exc_count_ = 0;
    std::vector<u64> radix_;
    std::vector<u64> stride_;
    std::vector<std::uint8_t> unit_;
    std::vector<std::uint8_t> exc_;
};

// Maintains w = base + x or w = base - x (ambient addition) while x steps
// through 0, 1, 2, ... in index order; each step is amortized O(1). The
// ambient must outlive the walker. Never advance past index size() - 1.
class DigitWalk {
  public:
    DigitWalk(const Ambient& A, u64 base, u64 start, int dir);

    u64 value() const noexcept { return w_; }
    void advance();

  private:
    const Ambient* A_;
    int dir_;
    u64 w_ = 0;
    std::vector<u64> xdig_;
    std::vector<u64> wdig_;
    std::vector<u64> bdig_;
};

// Exact pair count |{x : x and c - x both exceptional}| by a single parallel
// pass over the ambient.
PhiResult phi2_scan_oracle(const Ambient& A, u64 c, unsigned jobs = 0);

// Exact ordered k-tuple count by k - 2 additive convolutions of the
// exceptional indicator followed by a correlation against it. Agrees with
// phi2_scan_oracle at k = 2 (where it deliberately uses per-element
// subtraction instead of a walker, so the two share no mechanics).
PhiResult phi_k_convolution_oracle(const Ambient& A, u64 c, u32 k, unsigned jobs = 0);

// Full table: entry s is the ordered k-tuple count with sum of index s.
std::vector<u64> phi_k_table(const Ambient& A, u32 k, unsigned jobs = 0);

// Exact count over GF(q): ((-1)^k / q) (q S - 2^k + (2 - q)^k) with
// S summing binomial(k, j) over j in [0, k] with j * 1 = c. The division is
// exact by construction; anything else throws logic_error.
PhiResult phi_k_field_formula(const FieldSpec& F, const FieldElem& c, u32 k);

// Exact count over H(R) for a local R of residue characteristic 2. Branches
// on whether the residue of x1 + x2 + x3 + x4 lies in {0, 1}; cross-checked
// internally against the radical-census route through phi_k_field_formula.
PhiResult phi_k_even_quaternion(const RingSpec& R, const Quaternion& c, u32 k);

// Pair count over M_2(GF(q)), q odd, by residue class: exact for Zero,
// Identity, IdempotentRankOne and NilpotentNonzero; inclusive bounds for the
// invertible and lambda-idempotent classes (ceil on lo, floor on hi).
PhiResult phi2_mat_formula(const FieldSpec& F, const ResidueClass& cls);

// Pair count over H(R) for a local R of odd residue characteristic: the
// matrix-class result at the residue of c, scaled by |J(H(R))|. When only
// bounds exist and q <= limits().exact_fallback_max_q, an exact enumeration
// of M_2(GF(q)) replaces them unless fallback is disallowed.
PhiResult phi2_odd_quaternion(const RingSpec& R, const Quaternion& c,
                              bool allow_enumeration_fallback = true, unsigned jobs = 0);

enum class Method { Auto, Formula, Oracle };

// Main entry: phi_k(H(R), c) for any supported R and k >= 2. Splits over the
// local factors, dispatches per residue characteristic, and recombines by
// interval multiplication. Method::Oracle enumerates H(R) directly;
// Method::Formula forbids enumeration fallbacks and may return bounds.
PhiResult phi_k_reduce(const RingSpec& R, const Quaternion& c, u32 k,
                       Method method = Method::Auto, unsigned jobs = 0);

}  // namespace exunits
