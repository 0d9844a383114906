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

// Test-only oracles that never touch the BSGS code paths.

#ifndef MIBS_TESTS_BRUTE_FORCE_HPP
#define MIBS_TESTS_BRUTE_FORCE_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "mibs/group.hpp"
#include "mibs/permutation.hpp"

namespace mibs::testing {

/// Raw image tables, composed by hand so the oracle shares nothing with
/// mibs::compose.
using Table = std::vector<std::uint32_t>;

inline Table raw_table(const Permutation &p) {
  return Table(p.table().begin(), p.table().end());
}

/// Closure of a generating set under multiplication.
inline std::set<Table> closure(const std::vector<Permutation> &gens,
                               std::size_t degree) {
  Table id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Table> seen{id};
  std::vector<Table> frontier{id};
  std::vector<Table> raw;
  for (const auto &g : gens) raw.push_back(raw_table(g));
  while (!frontier.empty()) {
    std::vector<Table> next;
    for (const auto &e : frontier) {
      for (const auto &g : raw) {
        Table product(degree);
        for (std::size_t i = 0; i < degree; ++i) product[i] = g[e[i]];
        if (seen.insert(product).second) next.push_back(std::move(product));
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

inline std::set<Table> intersection(const std::set<Table> &a,
                                    const std::set<Table> &b) {
  std::set<Table> out;
  for (const auto &t : a) {
    if (b.count(t)) out.insert(t);
  }
  return out;
}

inline std::set<Table> conjugate_set(const std::set<Table> &group,
                                     const Permutation &x) {
  Table fwd = raw_table(x);
  Table inv(fwd.size());
  for (std::size_t i = 0; i < fwd.size(); ++i) inv[fwd[i]] = static_cast<std::uint32_t>(i);
  std::set<Table> out;
  for (const auto &g : group) {
    Table c(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) c[i] = fwd[g[inv[i]]];
    out.insert(std::move(c));
  }
  return out;
}

inline std::set<Table> closure(const PermutationGroup &g) {
  return closure(g.generators(), g.degree());
}

}  // namespace mibs::testing

#endif  // MIBS_TESTS_BRUTE_FORCE_HPP
