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

#ifndef MIBS_GROUP_HPP
#define MIBS_GROUP_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "mibs/bigint.hpp"
#include "mibs/permutation.hpp"

namespace mibs {

/// Default cap on the number of elements any enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationLimit = 2'000'000;

/**
 * A permutation group given by generators, with a base and strong generating
 * set computed by deterministic Schreier-Sims at construction.
 *
 * New base points are the smallest point moved by the element that forces
 * the new level, so the BSGS is a pure function of the generator sequence.
 * Instances are immutable.
 */
class PermutationGroup {
 public:
  PermutationGroup() = default;

  static PermutationGroup from_generators(std::vector<Permutation> generators,
                                          std::size_t degree);

  /// As above, with the base forced to start with `base_prefix`.
  static PermutationGroup from_generators(std::vector<Permutation> generators,
                                          std::size_t degree,
                                          std::span<const Point> base_prefix);

  static PermutationGroup trivial(std::size_t degree);
  static PermutationGroup symmetric(std::size_t degree);
  static PermutationGroup alternating(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation> &generators() const noexcept {
    return generators_;
  }

  /// Base points, 1-based.
  std::vector<Point> base() const;
  /// Fundamental orbit sizes along the base.
  std::vector<std::size_t> orbit_sizes() const;
  std::vector<Permutation> strong_generators() const;

  const BigInt &order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return levels_.empty(); }

  bool contains(const Permutation &p) const;

  /// Orbit of a point under the group, in breadth-first order.
  std::vector<Point> orbit(Point point) const;

  /// Calls `visit` once per element. Elements are produced as products of
  /// transversal elements, so the visiting order is deterministic.
  void for_each_element(
      const std::function<void(const Permutation &)> &visit) const;

  /// Uniformly random element.
  Permutation random_element(std::mt19937_64 &rng) const;

  /// The element of the right coset G y whose images of the base points are
  /// lexicographically least. Equal for y and y' iff G y = G y'.
  Permutation canonical_coset_representative(const Permutation &y) const;

 private:
  struct Level {
    Point base = 0;                       // zero-based
    std::vector<Permutation> generators;  // strong generators fixing earlier base points
    std::vector<Point> orbit;             // zero-based, BFS order
    std::vector<std::int32_t> slot;       // point -> index into orbit, or -1
    std::vector<Permutation> transversal;  // transversal[k] maps base to orbit[k]
    std::vector<Permutation> inverse_transversal;
  };

  friend class SubgroupAccumulator;

  void schreier_sims(std::size_t start_level);
  void rebuild_orbit(Level &level) const;
  void push_level(Point base);
  // Sifts `g` (zero-based table, modified in place) from `first` on.
  // Returns the index of the level where sifting stopped (levels_.size() on
  // success).
  std::size_t sift(std::vector<Point> &g, std::size_t first) const;
  void adjoin(const Permutation &g);
  void refresh_order();

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

/// Builds the subgroup generated by a stream of elements, adding an element
/// as a generator only when it is not already in the group built so far.
class SubgroupAccumulator {
 public:
  explicit SubgroupAccumulator(std::size_t degree);

  /// Returns true if `g` enlarged the group.
  bool add(const Permutation &g);
  const PermutationGroup &group() const noexcept { return group_; }
  PermutationGroup finish() && { return std::move(group_); }

 private:
  PermutationGroup group_;
};

struct GroupKey {
  BigInt order;
  std::array<std::uint8_t, 32> digest{};

  std::string digest_hex() const;
  friend bool operator==(const GroupKey &, const GroupKey &) = default;
};

struct GroupKeyHash {
  std::size_t operator()(const GroupKey &key) const noexcept;
};

PermutationGroup from_generators(std::vector<Permutation> generators,
                                 std::size_t degree);

const BigInt &order(const PermutationGroup &g);

bool contains(const PermutationGroup &g, const Permutation &p);

/// All elements; throws LimitExceeded("enumeration") if |G| > limit.
std::vector<Permutation> elements(const PermutationGroup &g,
                                  std::uint64_t limit = kDefaultEnumerationLimit);

PermutationGroup point_stabilizer(const PermutationGroup &g, Point point);

PermutationGroup conjugate_group(const PermutationGroup &g,
                                 const Permutation &x);

/// Exact intersection, by filtering the elements of the smaller group
/// through membership in the larger one.
PermutationGroup intersect(const PermutationGroup &a, const PermutationGroup &b,
                           std::uint64_t limit = kDefaultEnumerationLimit);

bool equals(const PermutationGroup &a, const PermutationGroup &b);
bool subgroup_of(const PermutationGroup &a, const PermutationGroup &b);

/// Order plus SHA-256 of the lexicographically sorted element tables.
GroupKey group_key(const PermutationGroup &g,
                   std::uint64_t limit = kDefaultEnumerationLimit);

/// Subgroup of `g` of elements satisfying `keep`; enumerates `g`.
PermutationGroup filter_subgroup(
    const PermutationGroup &g,
    const std::function<bool(const Permutation &)> &keep,
    std::uint64_t limit = kDefaultEnumerationLimit);

/// Throws LimitExceeded if |g| exceeds limit.
void require_enumerable(const PermutationGroup &g, std::uint64_t limit,
                        const std::string &what);

}  // namespace mibs

#endif  // MIBS_GROUP_HPP
