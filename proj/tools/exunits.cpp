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

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "exunits/common.hpp"
#include "exunits/count.hpp"
#include "exunits/gf.hpp"
#include "exunits/mat2.hpp"
#include "exunits/parse.hpp"
#include "exunits/quat.hpp"
#include "exunits/ring.hpp"
#include "exunits/verify.hpp"

namespace {

using nlohmann::ordered_json;
namespace ex = exunits;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitUnsupported = 4;
constexpr int kExitInternal = 70;

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// Matrix elements open with two brackets, quaternion tuples with one.
ex::ElemKind detect_kind(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t");
    if (i != std::string::npos && text[i] == '[') {
        std::size_t j = text.find_first_not_of(" \t", i + 1);
        if (j != std::string::npos && text[j] == '[') return ex::ElemKind::Mat2;
    }
    return ex::ElemKind::Quat;
}

std::string class_label(const ex::FieldSpec& F, const ex::ResidueClass& cls) {
    std::string s = ex::mat_class_name(cls.tag);
    if (cls.tag == ex::MatClassTag::ScalarOther || cls.tag == ex::MatClassTag::LambdaIdempotent) {
        s += "(lambda=" + ex::print_field_elem(F, cls.lambda) + ")";
    }
    return s;
}

std::string residue_class_string(const ex::RingSpec& R, const ex::Quaternion& c) {
    std::vector<ex::Quaternion> parts = ex::quat_split(R, c);
    std::string out;
    for (std::size_t i = 0; i < R.factors(); ++i) {
        ex::RingSpec Ri = R.factor_ring(i);
        const ex::FieldSpec& F = Ri.local(0).residue_field();
        ex::QuatRadicalView view = ex::q_radical_view(Ri, parts[i]);
        std::string piece;
        if (view.even) {
            piece = "s=" + ex::print_field_elem(F, view.scalar_residue);
        } else {
            ex::PsiMap psi(F);
            piece = class_label(F, ex::classify(F, psi.apply(view.coord_residue)));
        }
        if (!out.empty()) out += " x ";
        out += piece;
    }
    return out;
}

std::string result_text(const ex::PhiResult& res) {
    if (res.is_exact) return "exact " + res.lo.str();
    return "bounds [" + res.lo.str() + ", " + res.hi.str() + "]";
}

ordered_json result_json(const ex::PhiResult& res) {
    if (res.is_exact) return ordered_json{{"exact", res.lo.str()}};
    return ordered_json{{"bounds", ordered_json::array({res.lo.str(), res.hi.str()})}};
}

struct PhiOptions {
    std::string ring;
    std::string element;
    std::string method = "auto";
    std::string format = "json";
    std::string out;
    ex::u32 k = 2;
    unsigned jobs = 0;
};

struct TableOptions {
    std::string ring;
    std::string by = "class";
    std::string format = "text";
    std::string out;
    ex::u32 k = 2;
    bool verify = false;
    unsigned jobs = 0;
};

struct VerifyCliOptions {
    std::string suite = "all";
    std::string out;
    ex::u64 max_q = 27;
    ex::u64 max_order = 65536;
    unsigned jobs = 0;
};

// Returns the sink for command output, or null after reporting a failure.
std::ostream* open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty()) return &std::cout;
    file.open(path);
    if (!file) {
        std::cerr << "error: cannot open output file " << path << "\n";
        return nullptr;
    }
    return &file;
}

int run_phi(const PhiOptions& o) {
    ex::RingSpec R = ex::parse_ring_spec(o.ring);
    ex::Quaternion c = ex::parse_element(R, o.element, detect_kind(o.element));
    ex::Method method = o.method == "formula" ? ex::Method::Formula
                        : o.method == "oracle" ? ex::Method::Oracle
                                               : ex::Method::Auto;

    auto t0 = std::chrono::steady_clock::now();
    ex::PhiResult res = ex::phi_k_reduce(R, c, o.k, method, o.jobs);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    std::string rclass = residue_class_string(R, c);

    std::ofstream file;
    std::ostream* os = open_sink(o.out, file);
    if (os == nullptr) return kExitParse;

    if (o.format == "json") {
        ordered_json j;
        j["ring"] = ex::print_ring_spec(R);
        j["element"] = ex::print_quaternion(R, c);
        j["k"] = o.k;
        j["method"] = o.method;
        j["result"] = result_json(res);
        j["provenance"] = res.label();
        j["residue_class"] = rclass;
        j["elapsed_ms"] = elapsed;
        *os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        *os << "ring,element,k,method,exact,lo,hi,provenance,residue_class,elapsed_ms\n";
        *os << csv_quote(ex::print_ring_spec(R)) << "," << csv_quote(ex::print_quaternion(R, c))
            << "," << o.k << "," << o.method << "," << (res.is_exact ? res.lo.str() : "") << ","
            << res.lo.str() << "," << res.hi.str() << "," << csv_quote(res.label()) << ","
            << csv_quote(rclass) << "," << elapsed << "\n";
    } else {
        *os << "ring:          " << ex::print_ring_spec(R) << "\n"
            << "element:       " << ex::print_quaternion(R, c) << "\n"
            << "k:             " << o.k << "\n"
            << "method:        " << o.method << "\n"
            << "result:        " << result_text(res) << "\n"
            << "provenance:    " << res.label() << "\n"
            << "residue class: " << rclass << "\n"
            << "elapsed:       " << elapsed << " ms\n";
    }
    return kExitOk;
}

struct TableRow {
    std::string cls;
    std::string element;
    ex::PhiResult res = ex::PhiResult::exact(0, ex::Provenance::Oracle);
    ex::BigInt oracle = 0;
    bool checked = false;
    bool ok = true;
};

std::vector<ex::Mat2> odd_class_reps(const ex::FieldSpec& F) {
    const ex::FieldElem z = F.zero();
    const ex::FieldElem o = F.one();
    const ex::FieldElem two = F.from_int(2);
    return {
        ex::Mat2{z, z, z, z},          ex::Mat2{o, z, z, o},   ex::Mat2{two, z, z, two},
        ex::Mat2{z, o, F.neg(o), z},   ex::Mat2{o, z, z, z},   ex::Mat2{z, o, z, z},
        ex::Mat2{two, z, z, z},
    };
}

int run_table(const TableOptions& o) {
    ex::RingSpec R = ex::parse_ring_spec(o.ring);
    std::vector<TableRow> rows;

    auto t0 = std::chrono::steady_clock::now();
    if (o.by == "class") {
        if (R.factors() != 1) {
            throw ex::UnsupportedError("class tables need a single local ring factor");
        }
        const ex::LocalRingSpec& L = R.local(0);
        const ex::FieldSpec& F = L.residue_field();
        if (L.p() == 2) {
            for (ex::u64 s = 0; s < F.q(); ++s) {
                ex::FieldElem sbar = F.from_index(s);
                ex::Quaternion rep = ex::q_zero(R);
                rep.x1 = ex::RingElem{L.lift(sbar)};
                TableRow row;
                row.cls = "s=" + ex::print_field_elem(F, sbar);
                row.element = ex::print_quaternion(R, rep);
                row.res = ex::phi_k_even_quaternion(R, rep, o.k);
                if (o.verify) {
                    row.checked = true;
                    row.oracle = ex::phi_k_reduce(R, rep, o.k, ex::Method::Oracle, o.jobs).value();
                    row.ok = row.res.contains(row.oracle) && row.res.is_exact;
                }
                rows.push_back(std::move(row));
            }
        } else {
            ex::PsiMap psi(F);
            for (const ex::Mat2& C : odd_class_reps(F)) {
                std::array<ex::FieldElem, 4> coords = psi.invert(C);
                ex::Quaternion rep{ex::RingElem{L.lift(coords[0])}, ex::RingElem{L.lift(coords[1])},
                                   ex::RingElem{L.lift(coords[2])}, ex::RingElem{L.lift(coords[3])}};
                TableRow row;
                row.cls = class_label(F, ex::classify(F, C));
                row.element = ex::print_quaternion(R, rep);
                row.res = ex::phi_k_reduce(R, rep, o.k, ex::Method::Auto, o.jobs);
                if (o.verify) {
                    row.checked = true;
                    row.oracle = ex::phi_k_reduce(R, rep, o.k, ex::Method::Oracle, o.jobs).value();
                    row.ok = row.res.contains(row.oracle);
                }
                rows.push_back(std::move(row));
            }
        }
    } else {
        ex::Ambient A = ex::Ambient::quaternion(R);
        std::vector<ex::u64> table = ex::phi_k_table(A, o.k, o.jobs);
        rows.reserve(table.size());
        for (ex::u64 idx = 0; idx < table.size(); ++idx) {
            ex::Quaternion c = ex::quat_from_index(R, idx);
            TableRow row;
            row.cls = residue_class_string(R, c);
            row.element = ex::print_quaternion(R, c);
            row.res = ex::PhiResult::exact(table[idx], ex::Provenance::Oracle);
            if (o.verify) {
                ex::PhiResult claim = ex::phi_k_reduce(R, c, o.k, ex::Method::Formula, o.jobs);
                row.checked = true;
                row.oracle = table[idx];
                row.res = claim;
                row.ok = claim.contains(row.oracle) &&
                         (!claim.is_exact || claim.value() == row.oracle);
            }
            rows.push_back(std::move(row));
        }
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();

    std::ofstream file;
    std::ostream* os = open_sink(o.out, file);
    if (os == nullptr) return kExitParse;

    bool all_ok = true;
    for (const TableRow& row : rows) all_ok = all_ok && row.ok;

    if (o.format == "json") {
        ordered_json j;
        j["ring"] = ex::print_ring_spec(R);
        j["k"] = o.k;
        j["by"] = o.by;
        ordered_json arr = ordered_json::array();
        for (const TableRow& row : rows) {
            ordered_json r;
            r["class"] = row.cls;
            r["element"] = row.element;
            r["result"] = result_json(row.res);
            r["provenance"] = row.res.label();
            if (row.checked) {
                r["oracle"] = row.oracle.str();
                r["ok"] = row.ok;
            }
            arr.push_back(std::move(r));
        }
        j["rows"] = std::move(arr);
        j["elapsed_ms"] = elapsed;
        *os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        *os << "class,element,exact,lo,hi,provenance";
        if (o.verify) *os << ",oracle,ok";
        *os << "\n";
        for (const TableRow& row : rows) {
            *os << csv_quote(row.cls) << "," << csv_quote(row.element) << ","
                << (row.res.is_exact ? row.res.lo.str() : "") << "," << row.res.lo.str() << ","
                << row.res.hi.str() << "," << csv_quote(row.res.label());
            if (o.verify) *os << "," << row.oracle.str() << "," << (row.ok ? "yes" : "NO");
            *os << "\n";
        }
    } else {
        std::size_t wc = 5, we = 7, wr = 6;
        for (const TableRow& row : rows) {
            wc = std::max(wc, row.cls.size());
            we = std::max(we, row.element.size());
            wr = std::max(wr, result_text(row.res).size());
        }
        auto pad = [](const std::string& s, std::size_t w) {
            return s + std::string(w - s.size(), ' ');
        };
        *os << pad("class", wc) << "  " << pad("element", we) << "  " << pad("result", wr)
            << "  provenance";
        if (o.verify) *os << "  oracle  status";
        *os << "\n";
        for (const TableRow& row : rows) {
            *os << pad(row.cls, wc) << "  " << pad(row.element, we) << "  "
                << pad(result_text(row.res), wr) << "  " << row.res.label();
            if (row.checked) {
                *os << "  " << row.oracle.str() << "  " << (row.ok ? "ok" : "MISMATCH");
            }
            *os << "\n";
        }
        if (o.verify) {
            *os << (all_ok ? "all rows verified\n" : "verification found mismatches\n");
        }
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int run_verify(const VerifyCliOptions& o) {
    ex::VerifyOptions opts;
    opts.max_q = o.max_q;
    opts.max_hr_order = o.max_order;
    opts.jobs = o.jobs;
    std::vector<ex::CheckResult> checks = ex::run_suite(o.suite, opts);

    std::ofstream file;
    std::ostream* os = open_sink(o.out, file);
    if (os == nullptr) return kExitParse;

    std::size_t failures = 0;
    for (const ex::CheckResult& c : checks) {
        if (c.pass) {
            *os << "[PASS] " << c.suite << ": " << c.name << "\n";
        } else {
            ++failures;
            *os << "[FAIL] " << c.suite << ": " << c.name << " (expected " << c.expected
                << ", got " << c.actual << ")\n";
        }
    }
    *os << checks.size() << " checks, " << failures << " failures\n";
    return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("EXUNITS_SIZE_LIMIT")) {
        std::string text(env);
        ex::u64 cap = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
        if (ec != std::errc{} || ptr != text.data() + text.size() || cap == 0) {
            std::cerr << "error: EXUNITS_SIZE_LIMIT must be a positive integer\n";
            return kExitParse;
        }
        ex::limits().max_enumeration = cap;
    }

    CLI::App app{"exact counts of exceptional-unit sums in quaternion rings over finite "
                 "commutative rings"};
    app.require_subcommand(1);

    PhiOptions phi;
    CLI::App* phi_cmd = app.add_subcommand("phi", "count ordered k-tuples summing to one target");
    phi_cmd->add_option("--ring", phi.ring, "ring spec, e.g. Zn:9, GF:3^2, GR:2^2:2, Zn:3 x Zn:5")
        ->required();
    phi_cmd->add_option("--element", phi.element, "target element, e.g. 0, 1+2i, [[1,0],[0,1]]")
        ->required();
    phi_cmd->add_option("--k", phi.k, "tuple length")->check(CLI::Range(2u, 1000000u));
    phi_cmd->add_option("--method", phi.method, "auto, formula or oracle")
        ->check(CLI::IsMember({"auto", "formula", "oracle"}));
    phi_cmd->add_option("--format", phi.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    phi_cmd->add_option("--jobs", phi.jobs, "worker threads, 0 = all cores");
    phi_cmd->add_option("--out", phi.out, "write output to a file");

    TableOptions tab;
    CLI::App* tab_cmd = app.add_subcommand("table", "tabulate counts per class or per element");
    tab_cmd->add_option("--ring", tab.ring, "ring spec")->required();
    tab_cmd->add_option("--k", tab.k, "tuple length")->check(CLI::Range(2u, 1000000u));
    tab_cmd->add_option("--by", tab.by, "class or element")
        ->check(CLI::IsMember({"class", "element"}));
    tab_cmd->add_flag("--verify", tab.verify, "cross-check each row against the other route");
    tab_cmd->add_option("--format", tab.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    tab_cmd->add_option("--jobs", tab.jobs, "worker threads, 0 = all cores");
    tab_cmd->add_option("--out", tab.out, "write output to a file");

    VerifyCliOptions ver;
    CLI::App* ver_cmd = app.add_subcommand("verify", "run the formula-against-oracle suites");
    ver_cmd->add_option("--suite", ver.suite, "fields, even, odd, matrix, bounds or all")
        ->check(CLI::IsMember({"fields", "even", "odd", "matrix", "bounds", "all"}));
    ver_cmd->add_option("--max-q", ver.max_q, "largest field order exercised");
    ver_cmd->add_option("--max-order", ver.max_order, "largest |H(R)| enumerated");
    ver_cmd->add_option("--jobs", ver.jobs, "worker threads, 0 = all cores");
    ver_cmd->add_option("--out", ver.out, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (phi_cmd->parsed()) return run_phi(phi);
        if (tab_cmd->parsed()) return run_table(tab);
        return run_verify(ver);
    } catch (const ex::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ex::SizeLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeLimit;
    } catch (const ex::UnsupportedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
