// Copyright 2026 The mibs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIBS_BIGINT_HPP
#define MIBS_BIGINT_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mibs {

/// Exact group orders. |S_25| and friends do not fit 64 bits.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt &value) { return value.str(); }

/// Parses a non-negative decimal string; throws ParseError otherwise.
BigInt parse_decimal(const std::string &text);

BigInt factorial(unsigned n);

BigInt ipow(const BigInt &base, unsigned exponent);

/// log2 of a positive integer, accurate to double precision.
double log2_big(const BigInt &value);

}  // namespace mibs

#endif  // MIBS_BIGINT_HPP
