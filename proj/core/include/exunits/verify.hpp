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

#include <string>
#include <vector>

#include "exunits/common.hpp"

namespace exunits {

// One verification check with printable evidence.
struct CheckResult {
    std::string suite;
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyOptions {
    u64 max_q = 27;            // largest field order exercised
    u64 max_hr_order = 65536;  // largest |H(R)| enumerated
    unsigned jobs = 0;         // worker threads, 0 = hardware concurrency
};

// Formula-against-oracle and structural-law suites. Suites: "fields" (field
// formula vs enumeration plus the binomial identity), "even" (characteristic
// 2 closed form, radical census, closure), "odd" (odd local reduction,
// product and radical rules), "matrix" (matrix class formulas, the
// quaternion-to-matrix embedding, similarity invariance), "bounds" (interval
// soundness and the invertible-class maximum), or "all". Deterministic:
// random samples use fixed seeds. Throws std::invalid_argument for unknown
// suite names.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

}  // namespace exunits
