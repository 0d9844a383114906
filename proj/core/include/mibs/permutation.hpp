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

#ifndef MIBS_PERMUTATION_HPP
#define MIBS_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mibs {

/// Points are 1-based in every public interface.
using Point = std::uint32_t;

enum class Parity { even, odd };

/**
 * A bijection of {1, ..., n}.
 *
 * Permutations act on the right: for the product p * q the point i is sent
 * to (i^p)^q. Values are immutable once constructed and only permutations of
 * equal degree may be combined.
 */
class Permutation {
 public:
  /// Identity on zero points; mostly useful as a placeholder value.
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// `images[i - 1]` is the image of point i. Throws if not a bijection.
  static Permutation from_images(std::vector<Point> images);

  /// Builds the product of the given disjoint cycles.
  static Permutation from_cycles(const std::vector<std::vector<Point>> &cycles,
                                 std::size_t degree);

  /// Zero-based image table, not validated. Callers guarantee a bijection.
  static Permutation from_table_unchecked(std::vector<Point> table);

  std::size_t degree() const noexcept { return table_.size(); }

  /// Image of a 1-based point.
  Point operator()(Point point) const { return table_[point - 1] + 1; }

  /// Zero-based image table.
  std::span<const Point> table() const noexcept { return table_; }

  bool is_identity() const noexcept;

  /// Smallest point not fixed, if any.
  std::optional<Point> smallest_moved_point() const noexcept;

  /// Nontrivial cycles, each starting at its smallest point, ordered by that
  /// point.
  std::vector<std::vector<Point>> cycles() const;

  /// 1-based images, as stored in files and certificates.
  std::vector<Point> images() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.table_ <=> b.table_;
  }

 private:
  explicit Permutation(std::vector<Point> table) : table_(std::move(table)) {}

  std::vector<Point> table_;
};

/// i^(pq) = (i^p)^q.
Permutation compose(const Permutation &p, const Permutation &q);
inline Permutation operator*(const Permutation &p, const Permutation &q) {
  return compose(p, q);
}

Permutation inverse(const Permutation &p);

/// g^x = x^-1 g x.
Permutation conjugate(const Permutation &g, const Permutation &x);

/// g^e for any integer exponent.
Permutation power(const Permutation &g, long long exponent);

Parity parity(const Permutation &p);

/// Element order (lcm of cycle lengths).
std::uint64_t element_order(const Permutation &p);

/// Sorted multiset of all cycle lengths, fixed points included.
std::vector<std::size_t> cycle_type(const Permutation &p);

/// Parses disjoint cycles such as "(1 2 3)(4 5)". "()" is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

/// Canonical cycle notation; inverse of parse_cycles.
std::string print_cycles(const Permutation &p);

std::ostream &operator<<(std::ostream &os, const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

}  // namespace mibs

#endif  // MIBS_PERMUTATION_HPP
