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
#ifndef MIBS_BOUNDS_HPP
#define MIBS_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mibs/bigint.hpp"
#include "mibs/certificate.hpp"

namespace mibs {

/// Comparisons of real quantities use this slack.
inline constexpr double kTolerance = 1e-9;

/// l(G / soc G): 1 for S_n, 0 for A_n. Throws for n < 5.
int epsilon(Ambient ambient, std::uint64_t n);

/// Length of the longest subgroup chain: floor((3n-3)/2) - b_n + (1 | 0).
/// Throws for n < 2.
std::int64_t length_sym(std::uint64_t n, Ambient ambient);

/// (3/2) n - 3 + eps, the linear ceiling on length_sym.
double length_sym_ceiling(std::uint64_t n, Ambient ambient);

/// Upper bound on mibs for primitive maximal subgroups of S_n / A_n, n >= 7:
/// (log n)^2 + log n + 1, or 3 sqrt(n) - 1 for large subgroups.
double primitive_upper_bound(std::uint64_t n, bool large);

struct AffineBounds {
  bool exact = false;      // d = 1: lower is the exact value
  std::int64_t lower = 0;
  double strict_upper = 0;  // d >= 2 only: mibs < strict_upper
  /// Largest integer below strict_upper (lower when exact).
  std::int64_t max_value() const;
};

/// For AGL(d, p) in S_{p^d} or A_{p^d}, p odd, p^d >= 7.
AffineBounds affine_bounds(std::uint32_t p, std::uint32_t d, Ambient ambient);

struct WreathBounds {
  std::int64_t lower = 0;
  double upper = 0;  // mibs <= upper
};

/// For S_m wr S_k in product action, m >= 5, k >= 2.
WreathBounds wreath_bounds(std::uint32_t m, std::uint32_t k, Ambient ambient);

/// Whether AGL(d, p) meets G in a maximal subgroup (p prime, p^d >= 7).
bool affine_is_maximal(std::uint32_t p, std::uint32_t d, Ambient ambient);

/// Whether S_m wr S_k meets G in a maximal subgroup (m >= 5, k >= 2).
bool wreath_is_maximal(std::uint32_t m, std::uint32_t k, Ambient ambient);

struct OrderCheck {
  double log2_order = 0;
  double log2_general_bound = 0;  // log2(50 n^sqrt(n))
  bool below_general = false;     // |H| < 50 n^sqrt(n)
  BigInt small_bound;             // n^(1 + floor(log n))
  bool below_small = false;       // |H| < small_bound
};

/// Order bounds for primitive subgroups of S_n, n >= 5.
OrderCheck primitive_order_check(std::uint64_t n, const BigInt &order);

struct AsymptoticConstants {
  double c5, c6, c7, c8;
};

/// Constants valid for n > 100 by the Stirling argument.
inline constexpr AsymptoticConstants kProofConstants{1.0, 2.11, 1.0 / 1.412, 1.0};
/// Constants from a full check of 7 <= n <= 100.
inline constexpr AsymptoticConstants kTableConstants{1.0, 4.03, 0.70, 1.53};

struct IndexDegreeCheck {
  AsymptoticConstants constants{};
  bool proof_mode = false;
  double log_t = 0;
  double log_log_t = 0;
  double log_n = 0;
  bool above_stirling = false;  // 0.672 n log n < log t
  bool below_order = false;     // log t < n log n
  bool degree_window = false;   // c5 log t / log log t < n < c6 log t / log log t
  bool log_window = false;      // c7 log log t < log n < c8 log log t
  bool passed() const {
    return above_stirling && below_order && degree_window && log_window;
  }
};

/// log2 of n!, by compensated summation.
double log2_factorial(std::uint64_t n);

/// Relates the index t = |G : H| to the degree n. Proof mode needs n > 100.
IndexDegreeCheck index_degree_check(std::uint64_t n, const BigInt &order,
                                    bool proof_mode,
                                    Ambient ambient = Ambient::symmetric);

/// Chain lengths of the 4-transitive Mathieu groups M11, M12, M23, M24.
inline constexpr std::array<std::pair<int, int>, 4> kMathieuLengths{
    {{11, 7}, {12, 8}, {23, 11}, {24, 14}}};

/// Constants c1..c4 of the index-form bounds (general; n > 100 for c1, c2).
inline constexpr std::array<double, 4> kIndexFormConstants{3.5, 6.1, 1.0, 0.097};
inline constexpr std::array<double, 2> kIndexFormConstantsLarge{1.2, 4.4};

/// Relational complexity is at most mibs + 1.
inline std::int64_t relational_complexity_bound(std::int64_t mibs) { return mibs + 1; }

// --- reports --------------------------------------------------------------

using ReportValue = std::variant<bool, std::int64_t, double, std::string>;

struct Comparison {
  std::string name;
  std::string relation;  // "<", "<=", "=="
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
};

struct BoundsQuery {
  std::uint64_t n = 0;  // 0: derive from the family
  Ambient ambient = Ambient::symmetric;
  std::string family;  // "", "agl", "wreath"
  std::map<std::string, std::int64_t> params;
  std::optional<BigInt> order;        // |H| when no family gives it
  std::optional<std::int64_t> mibs;   // a computed value to compare
  bool index_degree = false;
};

struct BoundsReport {
  std::vector<std::pair<std::string, ReportValue>> quantities;
  std::vector<Comparison> comparisons;
  bool all_hold() const;
};

/// Throws DomainError on parameters outside the formulas' ranges.
BoundsReport bounds_report(const BoundsQuery &query);

}  // namespace mibs

#endif  // MIBS_BOUNDS_HPP
