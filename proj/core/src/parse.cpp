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

#include "exunits/parse.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace exunits {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool try_eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!try_eat(c)) fail(std::string("expected ") + what);
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }
};

u64 parse_u64(Cursor& cur) {
    cur.skip_ws();
    u64 value = 0;
    const char* first = cur.s.data() + cur.pos;
    const char* last = cur.s.data() + cur.s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::invalid_argument || ptr == first) cur.fail("expected a number");
    if (ec == std::errc::result_out_of_range) cur.fail("number out of range");
    cur.pos = static_cast<std::size_t>(ptr - cur.s.data());
    return value;
}

long long parse_i64(Cursor& cur) {
    cur.skip_ws();
    long long value = 0;
    const char* first = cur.s.data() + cur.pos;
    const char* last = cur.s.data() + cur.s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::invalid_argument || ptr == first) cur.fail("expected an integer");
    if (ec == std::errc::result_out_of_range) cur.fail("integer literal out of range");
    cur.pos = static_cast<std::size_t>(ptr - cur.s.data());
    return value;
}

bool try_keyword(Cursor& cur, const char* kw) {
    cur.skip_ws();
    std::size_t len = 0;
    while (kw[len] != '\0') ++len;
    if (cur.s.compare(cur.pos, len, kw) == 0) {
        cur.pos += len;
        return true;
    }
    return false;
}

void append_factors(Cursor& cur, std::vector<LocalRingSpec>& out) {
    const std::size_t at = cur.pos;
    try {
        if (try_keyword(cur, "Zn:")) {
            const u64 m = parse_u64(cur);
            RingSpec zn = RingSpec::zn(m);
            for (std::size_t i = 0; i < zn.factors(); ++i) out.push_back(zn.local(i));
            return;
        }
        if (try_keyword(cur, "GF:")) {
            const u64 p = parse_u64(cur);
            cur.expect('^', "'^'");
            const u64 r = parse_u64(cur);
            if (r == 0 || r > 0xffffffffull) cur.fail("field degree out of range");
            out.push_back(LocalRingSpec::make(p, 1, static_cast<u32>(r)));
            return;
        }
        if (try_keyword(cur, "GR:")) {
            const u64 p = parse_u64(cur);
            cur.expect('^', "'^'");
            const u64 n = parse_u64(cur);
            cur.expect(':', "':'");
            const u64 r = parse_u64(cur);
            if (n == 0 || n > 0xffffffffull) cur.fail("ring exponent out of range");
            if (r == 0 || r > 0xffffffffull) cur.fail("ring degree out of range");
            out.push_back(LocalRingSpec::make(p, static_cast<u32>(n), static_cast<u32>(r)));
            return;
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), at);
    }
    cur.fail("expected a ring factor (Zn:, GF: or GR:)");
}

}  // namespace

RingSpec parse_ring_spec(const std::string& text) {
    Cursor cur{text};
    std::vector<LocalRingSpec> locals;
    append_factors(cur, locals);
    while (!cur.done()) {
        cur.expect('x', "'x' between ring factors");
        append_factors(cur, locals);
    }
    return RingSpec::product(std::move(locals));
}

std::string print_ring_spec(const RingSpec& R) {
    std::string out;
    for (std::size_t i = 0; i < R.factors(); ++i) {
        const LocalRingSpec& L = R.local(i);
        if (i > 0) out += " x ";
        if (L.r() == 1) {
            out += "Zn:" + std::to_string(L.coeff_mod());
        } else if (L.n() == 1) {
            out += "GF:" + std::to_string(L.p()) + "^" + std::to_string(L.r());
        } else {
            out += "GR:" + std::to_string(L.p()) + "^" + std::to_string(L.n()) + ":" +
                   std::to_string(L.r());
        }
    }
    return out;
}

namespace {

// One tuple entry: a plain integer or a nested coefficient vector.
struct TupleEntry {
    bool nested = false;
    long long iv = 0;
    std::vector<long long> vec;
    std::size_t at = 0;
};

u64 reduce_mod(long long v, u64 m) {
    const long long mm = static_cast<long long>(m);
    return static_cast<u64>(((v % mm) + mm) % mm);
}

RingElem tuple_to_elem(const RingSpec& R, const std::vector<TupleEntry>& entries,
                       std::size_t open_at) {
    if (entries.size() == R.factors()) {
        std::vector<RingElem> parts;
        parts.reserve(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const LocalRingSpec& L = R.local(i);
            if (!entries[i].nested) {
                parts.push_back(RingElem{L.from_int(entries[i].iv)});
                continue;
            }
            if (entries[i].vec.size() != L.r()) {
                throw ParseError("coefficient vector needs " + std::to_string(L.r()) +
                                     " entries for this factor",
                                 entries[i].at);
            }
            LocalRingSpec::Coeffs c(L.r());
            for (u32 t = 0; t < L.r(); ++t) c[t] = reduce_mod(entries[i].vec[t], L.coeff_mod());
            parts.push_back(RingElem{std::move(c)});
        }
        return R.crt_join(parts);
    }
    if (R.factors() == 1 && entries.size() == R.local(0).r()) {
        const LocalRingSpec& L = R.local(0);
        LocalRingSpec::Coeffs c(L.r());
        for (u32 t = 0; t < L.r(); ++t) {
            if (entries[t].nested) {
                throw ParseError("flat coefficient vector cannot nest brackets", entries[t].at);
            }
            c[t] = reduce_mod(entries[t].iv, L.coeff_mod());
        }
        return RingElem{std::move(c)};
    }
    throw ParseError("tuple needs one entry per ring factor (" +
                         std::to_string(R.factors()) + ")",
                     open_at);
}

RingElem parse_tuple(Cursor& cur, const RingSpec& R) {
    const std::size_t open_at = cur.pos;
    cur.expect('[', "'['");
    std::vector<TupleEntry> entries;
    for (;;) {
        TupleEntry e;
        cur.skip_ws();
        e.at = cur.pos;
        if (cur.peek() == '[') {
            e.nested = true;
            cur.expect('[', "'['");
            for (;;) {
                e.vec.push_back(parse_i64(cur));
                if (!cur.try_eat(',')) break;
            }
            cur.expect(']', "']'");
        } else {
            e.iv = parse_i64(cur);
        }
        entries.push_back(std::move(e));
        if (!cur.try_eat(',')) break;
    }
    cur.expect(']', "']'");
    return tuple_to_elem(R, entries, open_at);
}

int basis_of(char c) {
    switch (c) {
        case 'i': return 1;
        case 'j': return 2;
        case 'k': return 3;
        default: return -1;
    }
}

Quaternion parse_quaternion(const RingSpec& R, const std::string& text) {
    Cursor cur{text};
    std::array<RingElem, 4> coords = {R.zero(), R.zero(), R.zero(), R.zero()};
    bool negative = cur.try_eat('-');
    for (;;) {
        if (cur.done()) cur.fail("expected a term");
        RingElem value = R.one();
        bool have_coeff = false;
        const char c = cur.peek();
        if (c == '[') {
            value = parse_tuple(cur, R);
            have_coeff = true;
        } else if (c == '-' || c == '+' || (c >= '0' && c <= '9')) {
            value = R.from_int(parse_i64(cur));
            have_coeff = true;
        }
        int basis = basis_of(cur.peek());
        if (basis >= 0) {
            ++cur.pos;
        } else {
            if (!have_coeff) cur.fail("expected a coefficient or basis symbol");
            basis = 0;
        }
        coords[basis] = negative ? R.sub(coords[basis], value) : R.add(coords[basis], value);
        if (cur.done()) break;
        if (cur.try_eat('+')) {
            negative = false;
        } else if (cur.try_eat('-')) {
            negative = true;
        } else {
            cur.fail("expected '+' or '-' between terms");
        }
    }
    return Quaternion{coords[0], coords[1], coords[2], coords[3]};
}

FieldElem parse_mat_entry(Cursor& cur, const FieldSpec& F) {
    cur.skip_ws();
    if (cur.peek() == '[') {
        const std::size_t at = cur.pos;
        cur.expect('[', "'['");
        std::vector<long long> vec;
        for (;;) {
            vec.push_back(parse_i64(cur));
            if (!cur.try_eat(',')) break;
        }
        cur.expect(']', "']'");
        if (vec.size() != F.r()) {
            throw ParseError("coefficient vector needs " + std::to_string(F.r()) + " entries",
                             at);
        }
        FieldElem e = F.zero();
        for (u32 t = 0; t < F.r(); ++t) {
            e.coeffs[t] = static_cast<u32>(reduce_mod(vec[t], F.p()));
        }
        return e;
    }
    return F.from_int(parse_i64(cur));
}

}  // namespace

Mat2 parse_mat2(const FieldSpec& F, const std::string& text) {
    Cursor cur{text};
    Mat2 M = m_zero(F);
    cur.expect('[', "'['");
    cur.expect('[', "'['");
    M.a = parse_mat_entry(cur, F);
    cur.expect(',', "','");
    M.b = parse_mat_entry(cur, F);
    cur.expect(']', "']'");
    cur.expect(',', "','");
    cur.expect('[', "'['");
    M.c = parse_mat_entry(cur, F);
    cur.expect(',', "','");
    M.d = parse_mat_entry(cur, F);
    cur.expect(']', "']'");
    cur.expect(']', "']'");
    if (!cur.done()) cur.fail("unexpected trailing characters");
    return M;
}

Quaternion parse_element(const RingSpec& R, const std::string& text, ElemKind kind) {
    if (kind == ElemKind::Quat) return parse_quaternion(R, text);
    if (R.factors() != 1 || R.local(0).n() != 1 || R.local(0).p() == 2) {
        throw UnsupportedError("matrix elements need a single field factor of odd order");
    }
    const FieldSpec& F = R.local(0).residue_field();
    const Mat2 M = parse_mat2(F, text);
    const PsiMap psi(F);
    const std::array<FieldElem, 4> coords = psi.invert(M);
    const LocalRingSpec& L = R.local(0);
    return Quaternion{RingElem{L.lift(coords[0])}, RingElem{L.lift(coords[1])},
                      RingElem{L.lift(coords[2])}, RingElem{L.lift(coords[3])}};
}

std::string print_field_elem(const FieldSpec& F, const FieldElem& a) {
    if (F.r() == 1) return std::to_string(a.coeffs[0]);
    std::string out = "[";
    for (u32 t = 0; t < F.r(); ++t) {
        if (t > 0) out += ",";
        out += std::to_string(a.coeffs[t]);
    }
    return out + "]";
}

namespace {

std::string print_local_coeffs(const LocalRingSpec& L, const LocalRingSpec::Coeffs& c) {
    if (L.r() == 1) return std::to_string(c[0]);
    std::string out = "[";
    for (u32 t = 0; t < L.r(); ++t) {
        if (t > 0) out += ",";
        out += std::to_string(c[t]);
    }
    return out + "]";
}

}  // namespace

std::string print_ring_elem(const RingSpec& R, const RingElem& a) {
    if (zn_representable(R)) return zn_value(R, a).str();
    const std::vector<RingElem> parts = R.crt_split(a);
    if (R.factors() == 1) return print_local_coeffs(R.local(0), parts[0].v);
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += ",";
        out += print_local_coeffs(R.local(i), parts[i].v);
    }
    return out + "]";
}

std::string print_quaternion(const RingSpec& R, const Quaternion& a) {
    static const char* suffix[4] = {"", "i", "j", "k"};
    const RingElem* coords[4] = {&a.x1, &a.x2, &a.x3, &a.x4};
    const RingElem one = R.one();
    const RingElem zero = R.zero();
    std::string out;
    for (int b = 0; b < 4; ++b) {
        if (*coords[b] == zero) continue;
        if (!out.empty()) out += " + ";
        if (b > 0 && *coords[b] == one) {
            out += suffix[b];
        } else {
            out += print_ring_elem(R, *coords[b]);
            out += suffix[b];
        }
    }
    return out.empty() ? "0" : out;
}

std::string print_mat2(const FieldSpec& F, const Mat2& A) {
    return "[[" + print_field_elem(F, A.a) + "," + print_field_elem(F, A.b) + "],[" +
           print_field_elem(F, A.c) + "," + print_field_elem(F, A.d) + "]]";
}

}  // namespace exunits
