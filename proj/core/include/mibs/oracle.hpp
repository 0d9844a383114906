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
#ifndef MIBS_ORACLE_HPP
#define MIBS_ORACLE_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "mibs/certificate.hpp"
#include "mibs/group.hpp"
#include "mibs/permutation.hpp"

namespace mibs {

struct Limits {
  std::uint64_t index = 20'000;  // t = |G : H|
  std::uint64_t enumeration = kDefaultEnumerationLimit;
  std::uint64_t memo = 1'000'000;
  unsigned threads = 1;
  bool prune = true;  // restrict moves to one point per orbit
};

/**
 * G acting on the right cosets of H. Point i (1-based) is the coset
 * H x_i; x_1 is the identity.
 */
class CosetAction {
 public:
  /// Throws LimitExceeded("index") if |G : H| > limit_t and Error("action not
  /// faithful") if H contains a nontrivial normal subgroup of G.
  static CosetAction build(PermutationGroup ambient, PermutationGroup subgroup,
                           std::uint64_t limit_t);

  const PermutationGroup &ambient() const noexcept { return ambient_; }
  const PermutationGroup &subgroup() const noexcept { return subgroup_; }
  std::size_t degree() const noexcept { return transversal_.size(); }
  const std::vector<Permutation> &transversal() const noexcept {
    return transversal_;
  }
  /// Action of the ambient generators on the points.
  const std::vector<Permutation> &generator_images() const noexcept {
    return generator_images_;
  }

  /// The point H g; throws DomainError if g is not in G.
  Point locate(const Permutation &g) const;

  /// The permutation of the points induced by g in G.
  Permutation act(const Permutation &g) const;

 private:
  PermutationGroup ambient_;
  PermutationGroup subgroup_;
  std::vector<Permutation> transversal_;
  std::vector<Permutation> generator_images_;
  std::unordered_map<Permutation, Point, PermutationHash> index_;
};

CosetAction build_coset_action(const PermutationGroup &ambient,
                               const PermutationGroup &subgroup,
                               std::uint64_t limit_t = Limits{}.index);

struct MibsResult {
  std::size_t value = 0;
  std::vector<Point> base;          // witness irredundant base, starts at 1
  std::vector<BigInt> orders;       // stabiliser orders along the base
  std::size_t states = 0;           // distinct subgroups visited
};

/// Maximum irredundant base size of G on the cosets of H, with a witness.
MibsResult compute_mibs(const CosetAction &action, const Limits &limits = {});

/// Certificate whose level j is the pointwise stabiliser of the first j+1
/// base points, each point given by its coset representative.
ChainCertificate witness_certificate(const CosetAction &action,
                                     const MibsResult &result, Ambient ambient,
                                     const SubgroupDescription &subgroup);

/// Orders of G_(p_1), G_(p_1, p_2), ... for the given points.
std::vector<BigInt> stabilizer_chain_orders(const CosetAction &action,
                                            std::span<const Point> points,
                                            const Limits &limits = {});

/**
 * Converts a chain certificate into an irredundant base: the points of the
 * conjugators in level order, with redundant points removed. Throws Error
 * if the certificate's levels are not strictly descending pointwise
 * stabilisers with the claimed orders.
 */
std::vector<Point> chain_to_base(const ChainCertificate &cert,
                                 const CosetAction &action,
                                 const Limits &limits = {});

}  // namespace mibs

#endif  // MIBS_ORACLE_HPP
