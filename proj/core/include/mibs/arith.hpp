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
#ifndef MIBS_ARITH_HPP
#define MIBS_ARITH_HPP

#include <cstdint>
#include <vector>

namespace mibs {

bool is_prime(std::uint64_t n);

/// Prime factors in ascending order, with multiplicity. Empty for n = 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Number of prime factors counted with multiplicity. Throws for n = 0.
unsigned omega(std::uint64_t n);

/// Number of 1s in the binary representation. Throws for n = 0.
unsigned binary_weight(std::uint64_t n);

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus);

/// Smallest generator of the multiplicative group mod the prime p.
std::uint64_t smallest_primitive_root(std::uint64_t p);

}  // namespace mibs

#endif  // MIBS_ARITH_HPP
