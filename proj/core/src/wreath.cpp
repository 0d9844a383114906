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
#include "mibs/wreath.hpp"

#include <numeric>
#include <string>

#include "mibs/error.hpp"

namespace mibs {

namespace {

constexpr std::size_t kMaxWreathDegree = std::size_t{1} << 22;

// Generators of Sym(points) as permutations of degree n.
std::vector<Permutation> symmetric_generators(const std::vector<Point> &points,
                                              std::size_t n) {
  if (points.size() < 2) return {};
  std::vector<Permutation> gens{
      Permutation::from_cycles({{points[0], points[1]}}, n)};
  if (points.size() > 2) gens.push_back(Permutation::from_cycles({points}, n));
  return gens;
}

std::vector<Point> range_points(std::uint32_t first, std::uint32_t last) {
  std::vector<Point> out;
  for (std::uint32_t q = first; q <= last; ++q) out.push_back(q);
  return out;
}

void check_coordinate(const WreathContext &ctx, std::uint32_t i, std::uint32_t r) {
  if (i < 2 || i > ctx.k) throw DomainError("coordinate must lie in 2..k");
  if (r < 1 || r > ctx.m) throw DomainError("value must lie in 1..m");
}

}  // namespace

WreathContext build_wreath(std::uint32_t m, std::uint32_t k) {
  if (m < 2 || k < 1) throw DomainError("wreath product needs m >= 2 and k >= 1");
  std::size_t degree = 1;
  for (std::uint32_t j = 0; j < k; ++j) {
    degree *= m;
    if (degree > kMaxWreathDegree) {
      throw DomainError("m^k too large to act on explicitly");
    }
  }
  WreathContext ctx;
  ctx.m = m;
  ctx.k = k;
  ctx.degree = degree;
  ctx.u = Permutation::from_cycles({range_points(1, m % 2 ? m : m - 1)}, m);
  ctx.u_order = element_order(ctx.u);

  const auto id_m = Permutation::identity(m);
  const auto id_k = Permutation::identity(k);
  for (const auto &g : symmetric_generators(range_points(1, m), m)) {
    std::vector<Permutation> v(k, id_m);
    v[0] = g;
    ctx.generators.push_back(embed_wreath_element(ctx, v, id_k));
  }
  for (const auto &w : symmetric_generators(range_points(1, k), k)) {
    ctx.generators.push_back(embed_wreath_element(ctx, std::vector(k, id_m), w));
  }
  ctx.group = PermutationGroup::from_generators(ctx.generators, degree);
  if (ctx.group.order() != ipow(factorial(m), k) * factorial(k)) {
    throw Error("build_wreath: group order disagrees with (m!)^k k!");
  }
  return ctx;
}

Point tuple_to_point(const WreathContext &ctx, const Tuple &t) {
  if (t.size() != ctx.k) throw DegreeMismatch("tuple has wrong length");
  std::size_t point = 0;
  for (std::size_t j = ctx.k; j-- > 0;) {
    if (t[j] < 1 || t[j] > ctx.m) throw DomainError("tuple entry out of range");
    point = point * ctx.m + (t[j] - 1);
  }
  return static_cast<Point>(point + 1);
}

Tuple point_to_tuple(const WreathContext &ctx, Point point) {
  if (point < 1 || point > ctx.degree) throw DomainError("point out of range");
  Tuple t(ctx.k);
  std::size_t rest = point - 1;
  for (std::uint32_t j = 0; j < ctx.k; ++j) {
    t[j] = static_cast<std::uint32_t>(rest % ctx.m) + 1;
    rest /= ctx.m;
  }
  return t;
}

Permutation embed_wreath_element(const WreathContext &ctx,
                                 const std::vector<Permutation> &v,
                                 const Permutation &w) {
  if (v.size() != ctx.k || w.degree() != ctx.k) {
    throw DegreeMismatch("wreath element has the wrong number of coordinates");
  }
  for (const auto &vi : v) {
    if (vi.degree() != ctx.m) throw DegreeMismatch("coordinate permutation degree");
  }
  std::vector<Point> images(ctx.degree);
  Tuple image(ctx.k);
  for (Point pt = 1; pt <= ctx.degree; ++pt) {
    Tuple a = point_to_tuple(ctx, pt);
    for (std::uint32_t i = 0; i < ctx.k; ++i) image[w(i + 1) - 1] = v[i](a[i]);
    images[pt - 1] = tuple_to_point(ctx, image);
  }
  return Permutation::from_images(std::move(images));
}

std::size_t hamming(const Tuple &a, const Tuple &b) {
  if (a.size() != b.size()) throw DegreeMismatch("hamming: tuple lengths differ");
  std::size_t distance = 0;
  for (std::size_t j = 0; j < a.size(); ++j) distance += a[j] != b[j];
  return distance;
}

Permutation coordinate_cycle_conjugator(const WreathContext &ctx,
                                        std::uint32_t i, std::uint32_t r) {
  check_coordinate(ctx, i, r);
  std::vector<Point> images(ctx.degree);
  for (Point pt = 1; pt <= ctx.degree; ++pt) {
    Tuple a = point_to_tuple(ctx, pt);
    if (a[1] == r) a[0] = ctx.u(a[0]);
    images[pt - 1] = tuple_to_point(ctx, a);
  }
  auto x = Permutation::from_images(std::move(images));
  if (i == 2) return x;
  auto swap = embed_wreath_element(
      ctx, std::vector(ctx.k, Permutation::identity(ctx.m)),
      Permutation::from_cycles({{2, i}}, ctx.k));
  return conjugate(x, swap);
}

PermutationGroup predicted_stabilizer(const WreathContext &ctx, std::uint32_t i,
                                      std::uint32_t r) {
  check_coordinate(ctx, i, r);
  const auto id_m = Permutation::identity(ctx.m);
  const auto id_k = Permutation::identity(ctx.k);
  std::vector<Permutation> gens;
  auto on_coordinate = [&](std::uint32_t j, const Permutation &g) {
    std::vector<Permutation> v(ctx.k, id_m);
    v[j - 1] = g;
    gens.push_back(embed_wreath_element(ctx, v, id_k));
  };
  on_coordinate(1, ctx.u);
  std::vector<Point> others;
  for (Point q = 1; q <= ctx.m; ++q) {
    if (q != r) others.push_back(q);
  }
  for (const auto &g : symmetric_generators(others, ctx.m)) on_coordinate(i, g);
  std::vector<Point> free_coordinates;
  for (std::uint32_t j = 2; j <= ctx.k; ++j) {
    if (j == i) continue;
    free_coordinates.push_back(j);
    for (const auto &g : symmetric_generators(range_points(1, ctx.m), ctx.m)) {
      on_coordinate(j, g);
    }
  }
  for (const auto &w : symmetric_generators(free_coordinates, ctx.k)) {
    gens.push_back(embed_wreath_element(ctx, std::vector(ctx.k, id_m), w));
  }
  return PermutationGroup::from_generators(gens, ctx.degree);
}

BigInt predicted_stabilizer_order(const WreathContext &ctx) {
  return BigInt(ctx.u_order) * factorial(ctx.m - 1) *
         ipow(factorial(ctx.m), ctx.k - 2) * factorial(ctx.k - 2);
}

bool verify_two_point_stabilizer(const WreathContext &ctx, std::uint32_t i,
                                 std::uint32_t r, std::uint64_t limit) {
  auto x = coordinate_cycle_conjugator(ctx, i, r);
  auto meet = intersect(ctx.group, conjugate_group(ctx.group, x), limit);
  return equals(meet, predicted_stabilizer(ctx, i, r));
}

BigInt wreath_level_order(const WreathContext &ctx, std::uint32_t i,
                          std::uint32_t r) {
  check_coordinate(ctx, i, r);
  return BigInt(ctx.u_order) * factorial(ctx.m - r) *
         ipow(factorial(ctx.m), ctx.k - i) * factorial(ctx.k - i);
}

ChainCertificate wreath_chain(const WreathContext &ctx, Ambient ambient) {
  if (ambient != Ambient::symmetric) {
    throw DomainError("alternating-ambient certificates are not constructed");
  }
  if (ctx.m < 5 || ctx.k < 2) throw DomainError("wreath chain needs m >= 5 and k >= 2");

  ChainCertificate cert;
  cert.degree = ctx.degree;
  cert.ambient = ambient;
  cert.subgroup.family = "wreath";
  cert.subgroup.params = {{"k", ctx.k}, {"m", ctx.m}};
  cert.subgroup.generators = ctx.generators;

  std::vector<Permutation> xs{Permutation::identity(ctx.degree)};
  cert.levels.push_back({xs, ctx.group.order()});
  for (std::uint32_t i = 2; i <= ctx.k; ++i) {
    for (std::uint32_t r = 1; r < ctx.m; ++r) {
      xs.push_back(coordinate_cycle_conjugator(ctx, i, r));
      cert.levels.push_back({xs, wreath_level_order(ctx, i, r)});
    }
  }
  xs.push_back(Permutation::from_cycles({{1, 2}}, ctx.degree));
  cert.levels.push_back({xs, BigInt(1)});
  cert.claimed_length = cert.levels.size();
  return cert;
}

}  // namespace mibs
