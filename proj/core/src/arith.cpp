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
#include "mibs/arith.hpp"

#include <bit>

#include "mibs/error.hpp"

namespace mibs {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  if (n == 0) throw DomainError("prime_factors: n must be positive");
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      out.push_back(q);
      n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned omega(std::uint64_t n) {
  if (n == 0) throw DomainError("omega: n must be positive");
  return static_cast<unsigned>(prime_factors(n).size());
}

unsigned binary_weight(std::uint64_t n) {
  if (n == 0) throw DomainError("binary_weight: n must be positive");
  return static_cast<unsigned>(std::popcount(n));
}

__extension__ using Wide = unsigned __int128;

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exponent,
                      std::uint64_t modulus) {
  Wide result = 1 % modulus;
  Wide b = base % modulus;
  while (exponent) {
    if (exponent & 1) result = result * b % modulus;
    b = b * b % modulus;
    exponent >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
  if (!is_prime(p)) {
    throw DomainError("smallest_primitive_root: " + std::to_string(p) +
                      " is not prime");
  }
  if (p == 2) return 1;
  auto factors = prime_factors(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generates = true;
    for (auto q : factors) {
      if (mod_pow(g, (p - 1) / q, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw DomainError("smallest_primitive_root: none found");
}

}  // namespace mibs
