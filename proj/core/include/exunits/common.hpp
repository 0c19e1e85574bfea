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
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace exunits {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using BigInt = boost::multiprecision::cpp_int;

// Base class for failures that map to dedicated CLI exit codes.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An operation would exceed a configured size cap.
class SizeLimitError : public Error {
  public:
    using Error::Error;
};

// The requested combination is outside the supported domain.
class UnsupportedError : public Error {
  public:
    using Error::Error;
};

// Malformed input text. position is a 0-based byte offset into the source.
class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

// Process-wide size caps. Mutated only during startup.
struct Limits {
    u64 max_field_order = u64{1} << 20;
    u64 max_enumeration = 10'000'000;
    u64 exact_fallback_max_q = 11;
};

Limits& limits();

// base^exp, exp >= 0.
BigInt bpow(const BigInt& base, u64 exp);

// Exact binomial coefficient. Zero outside 0 <= k <= n.
BigInt binomial(u64 n, u64 k);

// Ceiling and floor of num/den for num >= 0, den > 0.
BigInt ceil_div(const BigInt& num, const BigInt& den);
BigInt floor_div(const BigInt& num, const BigInt& den);

}  // namespace exunits
