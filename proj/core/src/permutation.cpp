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

#include "mibs/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mibs/error.hpp"

namespace mibs {

namespace {

void require_same_degree(const Permutation &p, const Permutation &q,
                         const char *op) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch(std::string(op) + ": degree " +
                         std::to_string(p.degree()) + " vs " +
                         std::to_string(q.degree()));
  }
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> table(degree);
  std::iota(table.begin(), table.end(), Point{0});
  return Permutation(std::move(table));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  const std::size_t n = images.size();
  std::vector<bool> seen(n, false);
  for (auto &image : images) {
    if (image < 1 || image > n) {
      throw Error("image " + std::to_string(image) + " out of range 1.." +
                  std::to_string(n));
    }
    if (seen[image - 1]) {
      throw Error("image " + std::to_string(image) + " repeated");
    }
    seen[image - 1] = true;
    --image;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    const std::vector<std::vector<Point>> &cycles, std::size_t degree) {
  std::vector<Point> table(degree);
  std::iota(table.begin(), table.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto &cycle : cycles) {
    for (Point point : cycle) {
      if (point < 1 || point > degree) {
        throw Error("point " + std::to_string(point) + " out of range 1.." +
                    std::to_string(degree));
      }
      if (used[point - 1]) {
        throw Error("point " + std::to_string(point) + " repeated");
      }
      used[point - 1] = true;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      table[cycle[j] - 1] = cycle[(j + 1) % cycle.size()] - 1;
    }
  }
  return Permutation(std::move(table));
}

Permutation Permutation::from_table_unchecked(std::vector<Point> table) {
  return Permutation(std::move(table));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != i) return false;
  }
  return true;
}

std::optional<Point> Permutation::smallest_moved_point() const noexcept {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] != i) return static_cast<Point>(i + 1);
  }
  return std::nullopt;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(table_.size(), false);
  for (std::size_t start = 0; start < table_.size(); ++start) {
    if (seen[start] || table_[start] == start) continue;
    std::vector<Point> cycle;
    for (std::size_t i = start; !seen[i]; i = table_[i]) {
      seen[i] = true;
      cycle.push_back(static_cast<Point>(i + 1));
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<Point> Permutation::images() const {
  std::vector<Point> out(table_.begin(), table_.end());
  for (auto &image : out) ++image;
  return out;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  require_same_degree(p, q, "compose");
  auto pt = p.table();
  auto qt = q.table();
  std::vector<Point> table(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) table[i] = qt[pt[i]];
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation inverse(const Permutation &p) {
  auto pt = p.table();
  std::vector<Point> table(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i) {
    table[pt[i]] = static_cast<Point>(i);
  }
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation conjugate(const Permutation &g, const Permutation &x) {
  require_same_degree(g, x, "conjugate");
  // x^-1 g x sends i^x to (i^g)^x.
  auto gt = g.table();
  auto xt = x.table();
  std::vector<Point> table(gt.size());
  for (std::size_t i = 0; i < gt.size(); ++i) table[xt[i]] = xt[gt[i]];
  return Permutation::from_table_unchecked(std::move(table));
}

Permutation power(const Permutation &g, long long exponent) {
  Permutation base = exponent < 0 ? inverse(g) : g;
  unsigned long long e = exponent < 0
                             ? static_cast<unsigned long long>(-(exponent + 1)) + 1
                             : static_cast<unsigned long long>(exponent);
  Permutation result = Permutation::identity(g.degree());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

Parity parity(const Permutation &p) {
  std::size_t transpositions = 0;
  for (const auto &cycle : p.cycles()) transpositions += cycle.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::uint64_t element_order(const Permutation &p) {
  std::uint64_t order = 1;
  for (const auto &cycle : p.cycles()) {
    order = std::lcm(order, static_cast<std::uint64_t>(cycle.size()));
  }
  return order;
}

std::vector<std::size_t> cycle_type(const Permutation &p) {
  std::vector<std::size_t> lengths;
  std::size_t moved = 0;
  for (const auto &cycle : p.cycles()) {
    lengths.push_back(cycle.size());
    moved += cycle.size();
  }
  lengths.insert(lengths.end(), p.degree() - moved, 1);
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  auto fail = [&](std::string_view token, const std::string &why) -> void {
    throw ParseError("cycle notation: " + why + " at '" + std::string(token) +
                     "' in \"" + std::string(text) + "\"");
  };

  std::vector<std::vector<Point>> cycles;
  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };

  skip_space();
  if (pos == text.size()) fail(text, "empty input");
  bool identity_seen = false;
  while (pos < text.size()) {
    if (text[pos] != '(') fail(text.substr(pos, 1), "expected '('");
    ++pos;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) fail(text.substr(pos), "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t end = pos;
      while (end < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      std::string_view token = text.substr(pos, std::max<std::size_t>(end - pos, 1));
      if (end == pos) fail(token, "expected a point");
      unsigned long long value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + end, value);
      if (ec != std::errc{} || ptr != text.data() + end) {
        fail(token, "bad number");
      }
      if (value < 1 || value > degree) {
        fail(token, "point " + std::string(token) + " out of range 1.." +
                        std::to_string(degree));
      }
      if (used[value - 1]) fail(token, "point " + std::string(token) + " repeated");
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value));
      pos = end;
      if (pos < text.size() && text[pos] != ')' &&
          !std::isspace(static_cast<unsigned char>(text[pos]))) {
        fail(text.substr(pos, 1), "unexpected character");
      }
    }
    if (cycle.empty()) {
      if (!cycles.empty() || identity_seen) fail("()", "empty cycle");
      identity_seen = true;
    } else {
      if (identity_seen) fail(text, "identity '()' must stand alone");
      cycles.push_back(std::move(cycle));
    }
    skip_space();
  }
  return Permutation::from_cycles(cycles, degree);
}

std::string print_cycles(const Permutation &p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto &cycle : cycles) {
    out += '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(cycle[j]);
    }
    out += ')';
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) {
  return os << print_cycles(p);
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point image : p.table()) {
    h ^= image;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace mibs
