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

#include "exunits/common.hpp"

namespace exunits {

Limits& limits() {
    static Limits instance;
    return instance;
}

BigInt bpow(const BigInt& base, u64 exp) {
    BigInt result = 1;
    BigInt b = base;
    while (exp != 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp != 0) b *= b;
    }
    return result;
}

BigInt binomial(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (u64 t = 0; t < k; ++t) {
        result *= BigInt(n - t);
        result /= BigInt(t + 1);
    }
    return result;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
    return (num + den - 1) / den;
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
    return num / den;
}

}  // namespace exunits
