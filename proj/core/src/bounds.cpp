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
#include "mibs/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "mibs/arith.hpp"
#include "mibs/error.hpp"

namespace mibs {

namespace {

bool less(double a, double b) { return a < b - kTolerance; }
bool less_equal(double a, double b) { return a <= b + kTolerance; }

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (out > (std::uint64_t{1} << 40) / base) throw DomainError("degree too large");
    out *= base;
  }
  return out;
}

int quotient_length(Ambient ambient) { return ambient == Ambient::symmetric ? 1 : 0; }

}  // namespace

int epsilon(Ambient ambient, std::uint64_t n) {
  if (n < 5) throw DomainError("epsilon needs n >= 5");
  return quotient_length(ambient);
}

std::int64_t length_sym(std::uint64_t n, Ambient ambient) {
  if (n < 2) throw DomainError("length_sym needs n >= 2");
  return static_cast<std::int64_t>((3 * n - 3) / 2) -
         static_cast<std::int64_t>(binary_weight(n)) + quotient_length(ambient);
}

double length_sym_ceiling(std::uint64_t n, Ambient ambient) {
  return 1.5 * static_cast<double>(n) - 3.0 + quotient_length(ambient);
}

double primitive_upper_bound(std::uint64_t n, bool large) {
  if (n < 7) throw DomainError("bounds for primitive subgroups need n >= 7");
  const double log_n = std::log2(static_cast<double>(n));
  return large ? 3.0 * std::sqrt(static_cast<double>(n)) - 1.0
               : log_n * log_n + log_n + 1.0;
}

std::int64_t AffineBounds::max_value() const {
  if (exact) return lower;
  return static_cast<std::int64_t>(std::ceil(strict_upper - kTolerance)) - 1;
}

AffineBounds affine_bounds(std::uint32_t p, std::uint32_t d, Ambient ambient) {
  if (p % 2 == 0) throw DomainError("odd p required");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (d < 1) throw DomainError("dimension must be at least 1");
  const std::uint64_t n = checked_power(p, d);
  if (n < 7) throw DomainError("p^d must be at least 7");
  const int eps = epsilon(ambient, n);
  AffineBounds out;
  if (d == 1) {
    out.exact = true;
    out.lower = 1 + omega(p - 1) + eps;
    out.strict_upper = static_cast<double>(out.lower) + 1.0;
    return out;
  }
  const std::int64_t tri = static_cast<std::int64_t>(d) * (d + 1) / 2;
  out.lower = (p == 3 || p == 5) ? tri + d - 1 + eps
                                 : tri + static_cast<std::int64_t>(d) * omega(p - 1) - 1 + eps;
  out.strict_upper = static_cast<double>(tri) * (1.0 + std::log2(static_cast<double>(p))) + eps;
  return out;
}

WreathBounds wreath_bounds(std::uint32_t m, std::uint32_t k, Ambient ambient) {
  if (m < 5 || k < 2) throw DomainError("wreath bounds need m >= 5 and k >= 2");
  const std::uint64_t n = checked_power(m, k);
  WreathBounds out;
  out.lower = 1 + static_cast<std::int64_t>(m - 1) * (k - 1) + epsilon(ambient, n);
  out.upper = 1.5 * m * k - 0.5 * k - 1.0;
  return out;
}

bool affine_is_maximal(std::uint32_t p, std::uint32_t d, Ambient ambient) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (d < 1 || checked_power(p, d) < 7) throw DomainError("p^d must be at least 7");
  const bool sym = ambient == Ambient::symmetric;
  if (d >= 2 && p >= 3) return true;
  if (sym && d == 1 && p >= 7) return true;
  if (!sym && d >= 3 && p == 2) return true;
  if (!sym && d == 1 && (p == 13 || p == 19 || p >= 29)) return true;
  return false;
}

bool wreath_is_maximal(std::uint32_t m, std::uint32_t k, Ambient ambient) {
  if (m < 5 || k < 2) throw DomainError("wreath maximality needs m >= 5 and k >= 2");
  const bool sym = ambient == Ambient::symmetric;
  if (m % 2 == 1) return true;
  if (sym && m % 4 == 2 && k == 2) return true;
  if (!sym && m % 4 == 0 && k == 2) return true;
  if (!sym && m % 2 == 0 && k >= 3) return true;
  return false;
}

OrderCheck primitive_order_check(std::uint64_t n, const BigInt &order) {
  if (n < 5) throw DomainError("order bounds need n >= 5");
  OrderCheck out;
  out.log2_order = log2_big(order);
  const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (root * root == n) {
    BigInt bound = 50 * ipow(BigInt(n), static_cast<unsigned>(root));
    out.log2_general_bound = log2_big(bound);
    out.below_general = order < bound;
  } else {
    out.log2_general_bound = std::log2(50.0) + std::sqrt(static_cast<double>(n)) *
                                                   std::log2(static_cast<double>(n));
    out.below_general = less(out.log2_order, out.log2_general_bound);
  }
  const auto floor_log = static_cast<unsigned>(std::bit_width(n) - 1);
  out.small_bound = ipow(BigInt(n), 1 + floor_log);
  out.below_small = order < out.small_bound;
  return out;
}

double log2_factorial(std::uint64_t n) {
  double sum = 0.0;
  double carry = 0.0;
  for (std::uint64_t i = 2; i <= n; ++i) {
    double y = std::log2(static_cast<double>(i)) - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  return sum;
}

IndexDegreeCheck index_degree_check(std::uint64_t n, const BigInt &order,
                                    bool proof_mode, Ambient ambient) {
  if (proof_mode && n <= 100) {
    throw DomainError("the Stirling-argument constants need n > 100");
  }
  if (n < 7) throw DomainError("index-degree check needs n >= 7");
  IndexDegreeCheck out;
  out.proof_mode = proof_mode;
  out.constants = proof_mode ? kProofConstants : kTableConstants;
  const double log_g = log2_factorial(n) - (ambient == Ambient::alternating ? 1.0 : 0.0);
  out.log_t = log_g - log2_big(order);
  if (out.log_t <= 1.0) throw DomainError("index too small for the check");
  out.log_log_t = std::log2(out.log_t);
  out.log_n = std::log2(static_cast<double>(n));
  const double nd = static_cast<double>(n);
  const auto &c = out.constants;
  out.above_stirling = less(0.672 * nd * out.log_n, out.log_t);
  out.below_order = less(out.log_t, nd * out.log_n);
  const double ratio = out.log_t / out.log_log_t;
  out.degree_window = less(c.c5 * ratio, nd) && less(nd, c.c6 * ratio);
  out.log_window = less(c.c7 * out.log_log_t, out.log_n) && less(out.log_n, c.c8 * out.log_log_t);
  return out;
}

bool BoundsReport::all_hold() const {
  return std::all_of(comparisons.begin(), comparisons.end(),
                     [](const Comparison &c) { return c.holds; });
}

BoundsReport bounds_report(const BoundsQuery &query) {
  BoundsReport report;
  auto put = [&](std::string name, ReportValue value) {
    report.quantities.emplace_back(std::move(name), std::move(value));
  };
  auto compare = [&](std::string name, double lhs, std::string relation, double rhs) {
    bool holds = relation == "<"    ? less(lhs, rhs)
                 : relation == "<=" ? less_equal(lhs, rhs)
                                    : std::abs(lhs - rhs) <= kTolerance;
    report.comparisons.push_back({std::move(name), std::move(relation), lhs, rhs, holds});
  };
  auto param = [&](const char *name) -> std::uint32_t {
    auto it = query.params.find(name);
    if (it == query.params.end()) throw DomainError(std::string("missing parameter --") + name);
    if (it->second < 1 || it->second > 1'000'000) {
      throw DomainError(std::string("parameter ") + name + " out of range");
    }
    return static_cast<std::uint32_t>(it->second);
  };

  std::uint64_t n = query.n;
  std::optional<BigInt> order = query.order;
  const bool sym = query.ambient == Ambient::symmetric;
  std::uint32_t p = 0, d = 0, m = 0, k = 0;
  if (query.family == "agl") {
    p = param("p");
    d = param("d");
    if (p % 2 == 0) throw DomainError("odd p required");
    const std::uint64_t degree = checked_power(p, d);
    if (n != 0 && n != degree) throw DomainError("--n must equal p^d");
    n = degree;
  } else if (query.family == "wreath") {
    m = param("m");
    k = param("k");
    const std::uint64_t degree = checked_power(m, k);
    if (n != 0 && n != degree) throw DomainError("--n must equal m^k");
    n = degree;
  } else if (!query.family.empty()) {
    throw DomainError("unknown family '" + query.family + "'");
  }
  if (n < 7) throw DomainError("bounds for primitive subgroups need n >= 7");

  put("n", static_cast<std::int64_t>(n));
  put("ambient", ambient_tag(query.ambient));
  put("binary_weight", static_cast<std::int64_t>(binary_weight(n)));
  put("epsilon", static_cast<std::int64_t>(epsilon(query.ambient, n)));
  put("length", length_sym(n, query.ambient));
  put("length_ceiling", length_sym_ceiling(n, query.ambient));
  compare("length <= (3/2)n - 3 + eps", static_cast<double>(length_sym(n, query.ambient)),
          "<=", length_sym_ceiling(n, query.ambient));

  const bool large = query.family == "wreath";
  const double upper = primitive_upper_bound(n, large);
  put("primitive_upper_bound", upper);
  put("primitive_upper_bound_form", std::string(large ? "3 sqrt(n) - 1" : "(log n)^2 + log n + 1"));

  if (query.family == "agl") {
    auto bounds = affine_bounds(p, d, query.ambient);
    put("p", static_cast<std::int64_t>(p));
    put("d", static_cast<std::int64_t>(d));
    put("omega(p-1)", static_cast<std::int64_t>(omega(p - 1)));
    put("maximal", affine_is_maximal(p, d, query.ambient));
    if (bounds.exact) {
      put("mibs_exact", bounds.lower);
    } else {
      put("mibs_lower", bounds.lower);
      put("mibs_strict_upper", bounds.strict_upper);
      put("mibs_max", bounds.max_value());
    }
    BigInt full = ipow(BigInt(p), d);
    BigInt q = full, pi = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
      full *= q - pi;
      pi *= p;
    }
    order = sym ? full : full / 2;
    if (query.mibs) {
      const auto v = static_cast<double>(*query.mibs);
      if (bounds.exact) {
        compare("mibs == exact value", v, "==", static_cast<double>(bounds.lower));
      } else {
        compare("lower <= mibs", static_cast<double>(bounds.lower), "<=", v);
        compare("mibs < strict upper", v, "<", bounds.strict_upper);
      }
    }
  } else if (query.family == "wreath") {
    auto bounds = wreath_bounds(m, k, query.ambient);
    put("m", static_cast<std::int64_t>(m));
    put("k", static_cast<std::int64_t>(k));
    put("maximal", wreath_is_maximal(m, k, query.ambient));
    put("mibs_lower", bounds.lower);
    put("mibs_upper", bounds.upper);
    BigInt full = ipow(factorial(m), k) * factorial(k);
    // M lies in A_n exactly when m = 0 mod 4 and k = 2, or m even and k >= 3.
    const bool inside_alternating = m % 2 == 0 && (k >= 3 || m % 4 == 0);
    order = sym || inside_alternating ? full : full / 2;
    if (query.mibs) {
      const auto v = static_cast<double>(*query.mibs);
      compare("lower <= mibs", static_cast<double>(bounds.lower), "<=", v);
      compare("mibs <= upper", v, "<=", bounds.upper);
    }
  }

  if (query.mibs) {
    const auto v = static_cast<double>(*query.mibs);
    compare("mibs < primitive upper bound", v, "<", upper);
    compare("mibs <= length", v, "<=", static_cast<double>(length_sym(n, query.ambient)));
    put("relational_complexity_bound", relational_complexity_bound(*query.mibs));
  }

  if (order) {
    put("order", to_decimal(*order));
    auto check = primitive_order_check(n, *order);
    put("log2_order", check.log2_order);
    put("log2_50_n_sqrt_n", check.log2_general_bound);
    compare("|H| < 50 n^sqrt(n)", check.log2_order, "<", check.log2_general_bound);
    put("n_pow_1_plus_floor_log_n", to_decimal(check.small_bound));
    put("order_below_n_pow_1_plus_floor_log_n", check.below_small);
  }

  if (query.index_degree) {
    if (!order) throw DomainError("the index-degree check needs --order-h or a family");
    std::vector<std::pair<std::string, IndexDegreeCheck>> checks;
    if (n > 100) checks.emplace_back("proof", index_degree_check(n, *order, true, query.ambient));
    checks.emplace_back("table", index_degree_check(n, *order, false, query.ambient));
    put("table_constants_scope", std::string("partial: checked on the families given only"));
    put("log2_t", checks.back().second.log_t);
    put("log2_log2_t", checks.back().second.log_log_t);
    for (const auto &[label, c] : checks) {
      const double nd = static_cast<double>(n);
      const double ratio = c.log_t / c.log_log_t;
      compare(label + ": 0.672 n log n < log t", 0.672 * nd * c.log_n, "<", c.log_t);
      compare(label + ": log t < n log n", c.log_t, "<", nd * c.log_n);
      compare(label + ": c5 log t / log log t < n", c.constants.c5 * ratio, "<", nd);
      compare(label + ": n < c6 log t / log log t", nd, "<", c.constants.c6 * ratio);
      compare(label + ": c7 log log t < log n", c.constants.c7 * c.log_log_t, "<", c.log_n);
      compare(label + ": log n < c8 log log t", c.log_n, "<", c.constants.c8 * c.log_log_t);
    }
  }
  return report;
}

}  // namespace mibs
