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

#ifndef MIBS_CERTIFICATE_HPP
#define MIBS_CERTIFICATE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mibs/bigint.hpp"
#include "mibs/group.hpp"
#include "mibs/permutation.hpp"

namespace mibs {

/// The ambient group: full symmetric or alternating group on the points.
enum class Ambient { symmetric, alternating };

/// "S" or "A".
std::string ambient_tag(Ambient ambient);
Ambient parse_ambient(const std::string &tag);

/// Order of S_n or A_n.
BigInt ambient_order(Ambient ambient, std::size_t degree);

struct SubgroupDescription {
  std::string family = "explicit";  // agl | wreath | natural | explicit
  std::map<std::string, std::int64_t> params;
  std::vector<Permutation> generators;
};

struct CertificateLevel {
  std::vector<Permutation> conjugators;
  BigInt order;
};

/**
 * A strictly descending chain of subgroups, each given as the intersection
 * of the conjugates H^x over its conjugator set. Level 0 is H itself.
 * The chain G > level 0 > ... > level last = 1 has claimed_length steps.
 */
struct ChainCertificate {
  std::size_t degree = 0;
  Ambient ambient = Ambient::symmetric;
  SubgroupDescription subgroup;
  std::vector<CertificateLevel> levels;
  std::size_t claimed_length = 0;
};

/// Canonical JSON text (sorted keys, two-space indent, trailing newline).
std::string serialize_certificate(const ChainCertificate &cert);

/// Throws ParseError on malformed input.
ChainCertificate parse_certificate(const std::string &text);

struct LevelCheck {
  std::size_t index = 0;
  BigInt claimed;
  BigInt computed;
  bool order_matches = false;
  bool descends = false;  // proper subgroup of the previous level (or of G)
  bool passed() const { return order_matches && descends; }
};

struct VerificationReport {
  std::vector<LevelCheck> levels;
  bool level0_is_subgroup = false;  // level 0 equals H
  bool terminal_trivial = false;
  bool length_consistent = false;  // claimed_length == number of levels
  std::vector<std::string> problems;

  bool passed() const;
  /// Index of the first failing level, or -1.
  std::ptrdiff_t first_failure() const;
};

/// Recomputes every level from H by enumeration and membership, trusting
/// nothing but H's generators and the listed conjugators.
VerificationReport verify_certificate(
    const ChainCertificate &cert, const PermutationGroup &subgroup,
    std::uint64_t limit = kDefaultEnumerationLimit);

/// Conjugators with duplicates removed, first occurrence kept.
std::vector<Permutation> unique_conjugators(std::vector<Permutation> xs);

}  // namespace mibs

#endif  // MIBS_CERTIFICATE_HPP
