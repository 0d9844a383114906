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

#include "mibs/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <memory>
#include <optional>

#include <openssl/evp.h>

#include "mibs/error.hpp"

namespace mibs {

// ---------------------------------------------------------------------------
// BigInt helpers

BigInt parse_decimal(const std::string &text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("not a decimal integer: '" + text + "'");
  }
  return BigInt(text);
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt ipow(const BigInt &base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

double log2_big(const BigInt &value) {
  if (value <= 0) throw DomainError("log2 of a non-positive integer");
  std::size_t bits = boost::multiprecision::msb(value) + 1;
  if (bits <= 60) return std::log2(value.convert_to<double>());
  // Keep the top 60 bits and account for the shift exactly.
  std::size_t shift = bits - 60;
  BigInt top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

// ---------------------------------------------------------------------------
// PermutationGroup

namespace {

void check_degrees(const std::vector<Permutation> &gens, std::size_t degree) {
  for (const auto &g : gens) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator " + print_cycles(g) + " has degree " +
                           std::to_string(g.degree()) + ", expected " +
                           std::to_string(degree));
    }
  }
}

bool table_is_identity(const std::vector<Point> &g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != i) return false;
  }
  return true;
}

}  // namespace

PermutationGroup PermutationGroup::from_generators(
    std::vector<Permutation> generators, std::size_t degree) {
  return from_generators(std::move(generators), degree, {});
}

PermutationGroup PermutationGroup::from_generators(
    std::vector<Permutation> generators, std::size_t degree,
    std::span<const Point> base_prefix) {
  check_degrees(generators, degree);
  PermutationGroup g;
  g.degree_ = degree;
  g.generators_ = std::move(generators);

  for (Point b : base_prefix) {
    if (b < 1 || b > degree) {
      throw DomainError("base point " + std::to_string(b) + " out of range");
    }
    g.push_level(b - 1);
  }

  std::vector<Permutation> strong;
  for (const auto &s : g.generators_) {
    if (s.is_identity()) continue;
    if (std::find(strong.begin(), strong.end(), s) != strong.end()) continue;
    strong.push_back(s);
  }
  for (const auto &s : strong) {
    bool moves_base = false;
    for (const auto &level : g.levels_) {
      if (s.table()[level.base] != level.base) {
        moves_base = true;
        break;
      }
    }
    if (!moves_base) g.push_level(*s.smallest_moved_point() - 1);
  }
  for (auto &level : g.levels_) {
    for (const auto &s : strong) {
      bool fixes_earlier = true;
      for (const auto &earlier : g.levels_) {
        if (&earlier == &level) break;
        if (s.table()[earlier.base] != earlier.base) {
          fixes_earlier = false;
          break;
        }
      }
      if (fixes_earlier) level.generators.push_back(s);
    }
    g.rebuild_orbit(level);
  }
  if (!g.levels_.empty()) g.schreier_sims(g.levels_.size() - 1);

  // Trailing prefix levels with trivial orbits carry no information.
  while (!g.levels_.empty() && g.levels_.back().orbit.size() == 1) {
    g.levels_.pop_back();
  }
  g.refresh_order();
  return g;
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  return from_generators({}, degree);
}

PermutationGroup PermutationGroup::symmetric(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 2) {
    gens.push_back(Permutation::from_cycles({{1, 2}}, degree));
    std::vector<Point> cycle(degree);
    for (std::size_t i = 0; i < degree; ++i) cycle[i] = static_cast<Point>(i + 1);
    gens.push_back(Permutation::from_cycles({cycle}, degree));
  }
  return from_generators(std::move(gens), degree);
}

PermutationGroup PermutationGroup::alternating(std::size_t degree) {
  std::vector<Permutation> gens;
  if (degree >= 3) {
    gens.push_back(Permutation::from_cycles({{1, 2, 3}}, degree));
    std::vector<Point> cycle;
    for (std::size_t i = (degree % 2 == 1) ? 1 : 2; i <= degree; ++i) {
      cycle.push_back(static_cast<Point>(i));
    }
    gens.push_back(Permutation::from_cycles({cycle}, degree));
  }
  return from_generators(std::move(gens), degree);
}

void PermutationGroup::push_level(Point base) {
  Level level;
  level.base = base;
  levels_.push_back(std::move(level));
  rebuild_orbit(levels_.back());
}

void PermutationGroup::rebuild_orbit(Level &level) const {
  level.orbit.assign(1, level.base);
  level.slot.assign(degree_, -1);
  level.slot[level.base] = 0;
  level.transversal.assign(1, Permutation::identity(degree_));
  level.inverse_transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point delta = level.orbit[k];
    for (const auto &s : level.generators) {
      Point image = s.table()[delta];
      if (level.slot[image] >= 0) continue;
      level.slot[image] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(image);
      Permutation rep = compose(level.transversal[k], s);
      level.inverse_transversal.push_back(inverse(rep));
      level.transversal.push_back(std::move(rep));
    }
  }
}

std::size_t PermutationGroup::sift(std::vector<Point> &g,
                                   std::size_t first) const {
  for (std::size_t j = first; j < levels_.size(); ++j) {
    const Level &level = levels_[j];
    std::int32_t k = level.slot[g[level.base]];
    if (k < 0) return j;
    if (k == 0) continue;
    auto inv = level.inverse_transversal[k].table();
    for (auto &image : g) image = inv[image];
  }
  return levels_.size();
}

void PermutationGroup::schreier_sims(std::size_t start_level) {
  // Holt's deterministic variant: levels above i form a complete BSGS of
  // their subgroup; every Schreier generator at level i must sift through.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start_level);
  std::vector<Point> h(degree_);

  // Returns the level to resume from if a new strong generator was found.
  auto scan_level = [&](std::size_t li) -> std::optional<std::size_t> {
    const Level &level = levels_[li];
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      for (const auto &gen : level.generators) {
        std::int32_t target = level.slot[gen.table()[level.orbit[k]]];
        // u_k * s * u_target^-1
        auto uk = level.transversal[k].table();
        auto st = gen.table();
        auto ut = level.inverse_transversal[target].table();
        for (std::size_t p = 0; p < degree_; ++p) h[p] = ut[st[uk[p]]];
        if (table_is_identity(h)) continue;
        std::size_t drop = sift(h, li + 1);
        if (drop == levels_.size() && table_is_identity(h)) continue;
        return drop;
      }
    }
    return std::nullopt;
  };

  while (i >= 0) {
    auto li = static_cast<std::size_t>(i);
    auto drop = scan_level(li);
    if (!drop) {
      --i;
      continue;
    }
    Permutation residue = Permutation::from_table_unchecked(h);
    if (*drop == levels_.size()) {
      Level fresh;
      fresh.base = *residue.smallest_moved_point() - 1;
      levels_.push_back(std::move(fresh));
    }
    for (std::size_t l = li + 1; l <= *drop; ++l) {
      levels_[l].generators.push_back(residue);
      rebuild_orbit(levels_[l]);
    }
    i = static_cast<std::ptrdiff_t>(*drop);
  }
}

void PermutationGroup::adjoin(const Permutation &g) {
  if (g.degree() != degree_) {
    throw DegreeMismatch("adjoin: degree mismatch");
  }
  std::vector<Point> h(g.table().begin(), g.table().end());
  std::size_t drop = sift(h, 0);
  if (drop == levels_.size() && table_is_identity(h)) return;

  // The residue fixes the base points of levels before `drop`, and together
  // with the old group it generates the same group as g.
  generators_.push_back(g);
  Permutation residue = Permutation::from_table_unchecked(h);
  if (drop == levels_.size()) {
    Level fresh;
    fresh.base = *residue.smallest_moved_point() - 1;
    levels_.push_back(std::move(fresh));
  }
  for (std::size_t l = 0; l <= drop; ++l) {
    levels_[l].generators.push_back(residue);
    rebuild_orbit(levels_[l]);
  }
  schreier_sims(drop);
  refresh_order();
}

void PermutationGroup::refresh_order() {
  order_ = 1;
  for (const auto &level : levels_) order_ *= level.orbit.size();
}

std::vector<Point> PermutationGroup::base() const {
  std::vector<Point> out;
  for (const auto &level : levels_) out.push_back(level.base + 1);
  return out;
}

std::vector<std::size_t> PermutationGroup::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto &level : levels_) out.push_back(level.orbit.size());
  return out;
}

std::vector<Permutation> PermutationGroup::strong_generators() const {
  std::vector<Permutation> out;
  for (const auto &level : levels_) {
    for (const auto &s : level.generators) {
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
  }
  return out;
}

bool PermutationGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_) {
    throw DegreeMismatch("contains: degree " + std::to_string(p.degree()) +
                         " vs group degree " + std::to_string(degree_));
  }
  std::vector<Point> h(p.table().begin(), p.table().end());
  return sift(h, 0) == levels_.size() && table_is_identity(h);
}

Permutation PermutationGroup::canonical_coset_representative(
    const Permutation &y) const {
  if (y.degree() != degree_) {
    throw DegreeMismatch("canonical_coset_representative: degree mismatch");
  }
  Permutation current = y;
  for (const auto &level : levels_) {
    auto table = current.table();
    std::size_t best = 0;
    for (std::size_t k = 1; k < level.orbit.size(); ++k) {
      if (table[level.orbit[k]] < table[level.orbit[best]]) best = k;
    }
    if (best != 0) current = compose(level.transversal[best], current);
  }
  return current;
}

std::vector<Point> PermutationGroup::orbit(Point point) const {
  if (point < 1 || point > degree_) {
    throw DomainError("point " + std::to_string(point) + " out of range");
  }
  std::vector<Point> out{point};
  std::vector<bool> seen(degree_, false);
  seen[point - 1] = true;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto &g : generators_) {
      Point image = g(out[k]);
      if (!seen[image - 1]) {
        seen[image - 1] = true;
        out.push_back(image);
      }
    }
  }
  return out;
}

void PermutationGroup::for_each_element(
    const std::function<void(const Permutation &)> &visit) const {
  if (levels_.empty()) {
    visit(Permutation::identity(degree_));
    return;
  }
  // Every element is v_last * ... * v_0 with v_j in the j-th transversal.
  std::vector<Permutation> suffix(levels_.size() + 1);
  suffix[0] = Permutation::identity(degree_);
  std::vector<std::size_t> index(levels_.size(), 0);
  std::size_t depth = 0;
  for (;;) {
    if (depth == levels_.size()) {
      visit(suffix[depth]);
      // Backtrack.
      for (;;) {
        if (depth == 0) return;
        --depth;
        if (++index[depth] < levels_[depth].transversal.size()) break;
        index[depth] = 0;
        if (depth == 0) return;
      }
    }
    suffix[depth + 1] = compose(levels_[depth].transversal[index[depth]],
                                suffix[depth]);
    ++depth;
  }
}

Permutation PermutationGroup::random_element(std::mt19937_64 &rng) const {
  Permutation result = Permutation::identity(degree_);
  for (const auto &level : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, level.transversal.size() - 1);
    result = compose(level.transversal[pick(rng)], result);
  }
  return result;
}

// ---------------------------------------------------------------------------
// SubgroupAccumulator

SubgroupAccumulator::SubgroupAccumulator(std::size_t degree)
    : group_(PermutationGroup::trivial(degree)) {}

bool SubgroupAccumulator::add(const Permutation &g) {
  if (group_.contains(g)) return false;
  group_.adjoin(g);
  return true;
}

// ---------------------------------------------------------------------------
// Free functions

std::string GroupKey::digest_hex() const {
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (auto byte : digest) {
    out += hex[byte >> 4U];
    out += hex[byte & 0xFU];
  }
  return out;
}

std::size_t GroupKeyHash::operator()(const GroupKey &key) const noexcept {
  std::size_t h;
  std::memcpy(&h, key.digest.data(), sizeof h);
  return h;
}

PermutationGroup from_generators(std::vector<Permutation> generators,
                                 std::size_t degree) {
  return PermutationGroup::from_generators(std::move(generators), degree);
}

const BigInt &order(const PermutationGroup &g) { return g.order(); }

bool contains(const PermutationGroup &g, const Permutation &p) {
  return g.contains(p);
}

void require_enumerable(const PermutationGroup &g, std::uint64_t limit,
                        const std::string &what) {
  if (g.order() > limit) {
    throw LimitExceeded("enumeration", what + ": group of order " +
                                           to_decimal(g.order()) +
                                           " exceeds enumeration limit " +
                                           std::to_string(limit));
  }
}

std::vector<Permutation> elements(const PermutationGroup &g,
                                  std::uint64_t limit) {
  require_enumerable(g, limit, "group too large");
  std::vector<Permutation> out;
  out.reserve(g.order().convert_to<std::size_t>());
  g.for_each_element([&](const Permutation &p) { out.push_back(p); });
  return out;
}

PermutationGroup point_stabilizer(const PermutationGroup &g, Point point) {
  if (point < 1 || point > g.degree()) {
    throw DomainError("point_stabilizer: point " + std::to_string(point) +
                      " out of range 1.." + std::to_string(g.degree()));
  }
  const Point prefix[] = {point};
  auto rebased = PermutationGroup::from_generators(g.generators(), g.degree(), prefix);
  std::vector<Permutation> fixing;
  for (const auto &s : rebased.strong_generators()) {
    if (s(point) == point) fixing.push_back(s);
  }
  return PermutationGroup::from_generators(std::move(fixing), g.degree());
}

PermutationGroup conjugate_group(const PermutationGroup &g,
                                 const Permutation &x) {
  if (x.degree() != g.degree()) {
    throw DegreeMismatch("conjugate_group: degree mismatch");
  }
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (const auto &s : g.generators()) gens.push_back(conjugate(s, x));
  return PermutationGroup::from_generators(std::move(gens), g.degree());
}

PermutationGroup filter_subgroup(
    const PermutationGroup &g,
    const std::function<bool(const Permutation &)> &keep,
    std::uint64_t limit) {
  require_enumerable(g, limit, "filter_subgroup");
  SubgroupAccumulator acc(g.degree());
  g.for_each_element([&](const Permutation &p) {
    if (keep(p)) acc.add(p);
  });
  return std::move(acc).finish();
}

PermutationGroup intersect(const PermutationGroup &a, const PermutationGroup &b,
                           std::uint64_t limit) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("intersect: degree mismatch");
  }
  const PermutationGroup &small = a.order() <= b.order() ? a : b;
  const PermutationGroup &large = a.order() <= b.order() ? b : a;
  if (small.order() > limit) {
    throw LimitExceeded("enumeration",
                        "intersection too large to enumerate: smaller group "
                        "has order " +
                            to_decimal(small.order()) + " > " +
                            std::to_string(limit));
  }
  return filter_subgroup(
      small, [&](const Permutation &p) { return large.contains(p); }, limit);
}

bool subgroup_of(const PermutationGroup &a, const PermutationGroup &b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("subgroup_of: degree mismatch");
  }
  if (a.order() > b.order()) return false;
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Permutation &g) { return b.contains(g); });
}

bool equals(const PermutationGroup &a, const PermutationGroup &b) {
  if (a.degree() != b.degree()) {
    throw DegreeMismatch("equals: degree mismatch");
  }
  return a.order() == b.order() && subgroup_of(a, b) && subgroup_of(b, a);
}

GroupKey group_key(const PermutationGroup &g, std::uint64_t limit) {
  auto elems = elements(g, limit);
  std::sort(elems.begin(), elems.end());

  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("group_key: SHA-256 unavailable");
  }
  std::vector<unsigned char> buffer;
  for (const auto &e : elems) {
    buffer.clear();
    for (Point image : e.table()) {
      for (int shift = 0; shift < 32; shift += 8) {
        buffer.push_back(static_cast<unsigned char>(image >> shift));
      }
    }
    EVP_DigestUpdate(ctx.get(), buffer.data(), buffer.size());
  }
  GroupKey key;
  key.order = g.order();
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), key.digest.data(), &length);
  return key;
}

}  // namespace mibs
