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
#ifndef MIBS_WREATH_HPP
#define MIBS_WREATH_HPP

#include <cstdint>
#include <vector>

#include "mibs/certificate.hpp"
#include "mibs/group.hpp"
#include "mibs/permutation.hpp"

namespace mibs {

/// Entries a_1..a_k, each in [1, m].
using Tuple = std::vector<std::uint32_t>;

/**
 * M = S_m wr S_k in product action on the m^k tuples. u is (1 .. m) for odd
 * m and (1 .. m-1) for even m; U = <u>.
 */
struct WreathContext {
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  std::size_t degree = 0;  // m^k
  Permutation u;           // on {1..m}
  std::uint64_t u_order = 0;
  std::vector<Permutation> generators;
  PermutationGroup group;
};

WreathContext build_wreath(std::uint32_t m, std::uint32_t k);

/// point = 1 + sum_j (entries[j] - 1) * m^j.
Point tuple_to_point(const WreathContext &ctx, const Tuple &t);
Tuple point_to_tuple(const WreathContext &ctx, Point point);

/// (v_1, ..., v_k) w acting by a'_{i^w} = a_i^{v_i}.
Permutation embed_wreath_element(const WreathContext &ctx,
                                 const std::vector<Permutation> &v,
                                 const Permutation &w);

/// Number of coordinates where a and b differ.
std::size_t hamming(const Tuple &a, const Tuple &b);

/**
 * Applies u to the first coordinate of exactly the tuples whose i-th
 * coordinate is r (2 <= i <= k, 1 <= r <= m). Even.
 */
Permutation coordinate_cycle_conjugator(const WreathContext &ctx,
                                        std::uint32_t i, std::uint32_t r);

/**
 * (U x S_m^(i-2) x T_r x S_m^(k-i)) : W_i, where T_r fixes r in coordinate i
 * and W_i permutes the coordinates other than 1 and i.
 */
PermutationGroup predicted_stabilizer(const WreathContext &ctx, std::uint32_t i,
                                      std::uint32_t r);

BigInt predicted_stabilizer_order(const WreathContext &ctx);

/// M meets M^x exactly in the predicted stabiliser. Enumerates M.
bool verify_two_point_stabilizer(const WreathContext &ctx, std::uint32_t i,
                                 std::uint32_t r,
                                 std::uint64_t limit = kDefaultEnumerationLimit);

/// |U| (m-r)! (m!)^(k-i) (k-i)!: the running intersection after (i, r).
BigInt wreath_level_order(const WreathContext &ctx, std::uint32_t i,
                          std::uint32_t r);

/// Descending chain from M to 1 of length (m-1)(k-1) + 2. Only the
/// symmetric ambient is supported.
ChainCertificate wreath_chain(const WreathContext &ctx,
                              Ambient ambient = Ambient::symmetric);

}  // namespace mibs

#endif  // MIBS_WREATH_HPP
