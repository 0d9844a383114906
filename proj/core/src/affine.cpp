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
#include "mibs/affine.hpp"

#include <algorithm>
#include <string>

#include "mibs/arith.hpp"
#include "mibs/error.hpp"

namespace mibs {

namespace {

constexpr std::size_t kMaxAffineDegree = std::size_t{1} << 22;

BigInt agl_order(std::uint32_t p, std::uint32_t d) {
  BigInt q = ipow(BigInt(p), d);
  BigInt order = q;
  BigInt pi = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    order *= q - pi;
    pi *= p;
  }
  return order;
}

Matrix elementary(std::uint32_t d, std::uint32_t row, std::uint32_t col) {
  Matrix m = identity_matrix(d);
  m[row][col] = 1;
  return m;
}

FieldVector basis_vector(std::uint32_t d, std::uint32_t index) {
  FieldVector v(d, 0);
  v[index] = 1;
  return v;
}

// Indicator over points (0-based) of span(basis), plus its size.
std::vector<bool> span_indicator(const AffineContext &ctx,
                                 const std::vector<FieldVector> &basis,
                                 std::size_t &size) {
  std::vector<bool> in_span(ctx.degree, false);
  std::vector<std::uint32_t> coeffs(basis.size(), 0);
  while (true) {
    FieldVector v(ctx.d, 0);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[b].size() != ctx.d) {
        throw DegreeMismatch("subspace basis vector has wrong dimension");
      }
      for (std::uint32_t c = 0; c < ctx.d; ++c) {
        v[c] = (v[c] + coeffs[b] * (basis[b][c] % ctx.p)) % ctx.p;
      }
    }
    in_span[vector_to_point(ctx, v) - 1] = true;
    std::size_t b = 0;
    while (b < coeffs.size() && ++coeffs[b] == ctx.p) coeffs[b++] = 0;
    if (b == coeffs.size()) break;
  }
  size = static_cast<std::size_t>(std::count(in_span.begin(), in_span.end(), true));
  return in_span;
}

}  // namespace

Matrix identity_matrix(std::uint32_t d) {
  Matrix m(d, std::vector<std::uint32_t>(d, 0));
  for (std::uint32_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

std::uint32_t determinant(Matrix m, std::uint32_t p) {
  const std::size_t d = m.size();
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t pivot = col;
    while (pivot < d && m[pivot][col] % p == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = (p - det % p) % p;
    }
    det = det * (m[col][col] % p) % p;
    std::uint64_t inv = mod_pow(m[col][col] % p, p - 2, p);
    for (std::size_t r = col + 1; r < d; ++r) {
      std::uint64_t factor = (m[r][col] % p) * inv % p;
      for (std::size_t c = col; c < d; ++c) {
        m[r][c] = static_cast<std::uint32_t>(
            (m[r][c] % p + p - factor * (m[col][c] % p) % p) % p);
      }
    }
  }
  return static_cast<std::uint32_t>(det);
}

Point vector_to_point(const AffineContext &ctx, const FieldVector &v) {
  if (v.size() != ctx.d) throw DegreeMismatch("vector has wrong dimension");
  std::size_t point = 0;
  for (std::size_t j = ctx.d; j-- > 0;) {
    if (v[j] >= ctx.p) throw DomainError("coordinate out of range");
    point = point * ctx.p + v[j];
  }
  return static_cast<Point>(point + 1);
}

FieldVector point_to_vector(const AffineContext &ctx, Point point) {
  if (point < 1 || point > ctx.degree) throw DomainError("point out of range");
  FieldVector v(ctx.d);
  std::size_t rest = point - 1;
  for (std::uint32_t j = 0; j < ctx.d; ++j) {
    v[j] = static_cast<std::uint32_t>(rest % ctx.p);
    rest /= ctx.p;
  }
  return v;
}

Permutation affine_to_permutation(const AffineMap &f, const AffineContext &ctx) {
  if (f.matrix.size() != ctx.d || f.translation.size() != ctx.d) {
    throw DegreeMismatch("affine map has wrong dimension");
  }
  for (const auto &row : f.matrix) {
    if (row.size() != ctx.d) throw DegreeMismatch("matrix is not square");
  }
  if (determinant(f.matrix, ctx.p) == 0) {
    throw DomainError("affine map has a singular matrix");
  }
  std::vector<Point> images(ctx.degree);
  FieldVector image(ctx.d);
  for (Point pt = 1; pt <= ctx.degree; ++pt) {
    FieldVector v = point_to_vector(ctx, pt);
    for (std::uint32_t c = 0; c < ctx.d; ++c) {
      std::uint64_t sum = f.translation[c] % ctx.p;
      for (std::uint32_t r = 0; r < ctx.d; ++r) {
        sum += static_cast<std::uint64_t>(v[r]) * (f.matrix[r][c] % ctx.p);
      }
      image[c] = static_cast<std::uint32_t>(sum % ctx.p);
    }
    images[pt - 1] = vector_to_point(ctx, image);
  }
  return Permutation::from_images(std::move(images));
}

Permutation linear_to_permutation(const Matrix &m, const AffineContext &ctx) {
  return affine_to_permutation({m, FieldVector(ctx.d, 0)}, ctx);
}

AffineContext build_agl(std::uint32_t p, std::uint32_t d) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (d == 0) throw DomainError("dimension must be at least 1");
  std::size_t degree = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    degree *= p;
    if (degree > kMaxAffineDegree) {
      throw DomainError("p^d too large to act on explicitly");
    }
  }

  AffineContext ctx;
  ctx.p = p;
  ctx.d = d;
  ctx.degree = degree;
  ctx.mu = static_cast<std::uint32_t>(smallest_primitive_root(p));

  std::vector<Permutation> linear;
  for (std::uint32_t r = 0; r < d; ++r) {
    for (std::uint32_t c = 0; c < d; ++c) {
      if (r != c) linear.push_back(linear_to_permutation(elementary(d, r, c), ctx));
    }
  }
  Matrix scale = identity_matrix(d);
  scale[0][0] = ctx.mu;
  if (ctx.mu != 1) linear.push_back(linear_to_permutation(scale, ctx));

  ctx.generators = linear;
  for (std::uint32_t j = 0; j < d; ++j) {
    ctx.generators.push_back(
        affine_to_permutation({identity_matrix(d), basis_vector(d, j)}, ctx));
  }
  ctx.linear = PermutationGroup::from_generators(linear, degree);
  ctx.group = PermutationGroup::from_generators(ctx.generators, degree);
  if (ctx.group.order() != agl_order(p, d)) {
    throw Error("build_agl: group order disagrees with |AGL(d, p)|");
  }

  for (std::uint32_t i = 0; i < d; ++i) {
    Matrix g = identity_matrix(d);
    g[i][i] = ctx.mu;
    ctx.diagonal_generators.push_back(linear_to_permutation(g, ctx));
  }
  ctx.diagonal = PermutationGroup::from_generators(ctx.diagonal_generators, degree);
  return ctx;
}

Permutation scalar_inverting_conjugator(const AffineContext &ctx) {
  if (ctx.d != 1) throw DomainError("scalar_inverting_conjugator needs d = 1");
  if (ctx.p < 7) throw DomainError("scalar_inverting_conjugator needs p >= 7");
  const std::uint32_t p = ctx.p;
  const std::uint32_t mu_inv = static_cast<std::uint32_t>(mod_pow(ctx.mu, p - 2, p));
  std::vector<std::vector<Point>> cycles;
  for (std::uint32_t j = 0; j <= (p - 3) / 2; ++j) {
    auto a = static_cast<std::uint32_t>(mod_pow(ctx.mu, j, p));
    auto b = static_cast<std::uint32_t>(mod_pow(mu_inv, j + 1, p));
    cycles.push_back({vector_to_point(ctx, {a}), vector_to_point(ctx, {b})});
  }
  return Permutation::from_cycles(cycles, ctx.degree);
}

Permutation subspace_scaling_conjugator(const AffineContext &ctx,
                                        const std::vector<FieldVector> &basis,
                                        std::uint32_t lambda) {
  lambda %= ctx.p;
  if (lambda == 0 || lambda == 1) {
    throw DomainError("scaling factor must differ from 0 and 1");
  }
  std::size_t size = 0;
  auto in_span = span_indicator(ctx, basis, size);
  if (size == 1 || size == ctx.degree) {
    throw DomainError("subspace must be proper and nontrivial");
  }
  std::vector<Point> images(ctx.degree);
  for (Point pt = 1; pt <= ctx.degree; ++pt) {
    images[pt - 1] = pt;
    if (!in_span[pt - 1]) continue;
    FieldVector v = point_to_vector(ctx, pt);
    for (auto &c : v) c = static_cast<std::uint32_t>(std::uint64_t{c} * lambda % ctx.p);
    images[pt - 1] = vector_to_point(ctx, v);
  }
  return Permutation::from_images(std::move(images));
}

PermutationGroup subspace_stabilizer(const AffineContext &ctx,
                                     const std::vector<FieldVector> &basis) {
  std::size_t size = 0;
  auto in_span = span_indicator(ctx, basis, size);
  std::vector<Point> basis_points;
  for (const auto &b : basis) basis_points.push_back(vector_to_point(ctx, b));
  return filter_subgroup(ctx.linear, [&](const Permutation &g) {
    return std::all_of(basis_points.begin(), basis_points.end(),
                       [&](Point pt) { return in_span[g(pt) - 1]; });
  });
}

std::vector<SubspaceStep> subspace_chain(const AffineContext &ctx) {
  if (ctx.d < 2) throw DomainError("subspace_chain needs d >= 2");
  const std::uint32_t d = ctx.d;
  std::vector<SubspaceStep> steps;
  for (std::uint32_t i = 1; i <= d; ++i) {
    for (std::uint32_t j = i; j <= d; ++j) {
      if (i == 1 && j == d) continue;
      SubspaceStep step;
      step.i = i;
      step.j = j;
      std::vector<FieldVector> basis;
      for (std::uint32_t b = i; b <= j; ++b) basis.push_back(basis_vector(d, b - 1));
      step.stabilizer = subspace_stabilizer(ctx, basis);
      step.conjugator = subspace_scaling_conjugator(ctx, basis, ctx.mu);
      Matrix witness = i == 1 ? elementary(d, j - 1, j) : elementary(d, j - 1, i - 2);
      step.witness = linear_to_permutation(witness, ctx);
      steps.push_back(std::move(step));
    }
  }
  return steps;
}

Permutation cyclic_reduction_conjugator(std::uint32_t k, std::uint32_t a,
                                        std::uint32_t m) {
  if (k < 2 || a == 0 || k % a != 0) {
    throw DomainError("cyclic reduction needs a dividing k");
  }
  if (k == 4 && a == 2) throw DomainError("excluded case (k, a) = (4, 2)");
  if (m <= k) throw DomainError("cyclic reduction needs m > k");
  if (a == 1) return Permutation::identity(m);
  if (a == k) return Permutation::from_cycles({{1, m}}, m);
  std::vector<std::vector<Point>> cycles;
  for (std::uint32_t start = 1; start <= k; start += a) {
    std::vector<Point> cycle;
    for (std::uint32_t q = start; q < start + a; ++q) cycle.push_back(q);
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(cycles, m);
}

Permutation diagonal_reduction_conjugator(const AffineContext &ctx,
                                          std::uint32_t i, std::uint32_t a) {
  if (i < 1 || i > ctx.d) throw DomainError("coordinate out of range");
  const std::uint32_t p = ctx.p;
  if (p < 3) throw DomainError("diagonal reduction needs odd p");
  Permutation x = cyclic_reduction_conjugator(p - 1, a, p);

  // label(c): mu^(j-1) -> j, 0 -> p.
  std::vector<std::uint32_t> label(p), value(p + 1);
  label[0] = p;
  value[p] = 0;
  std::uint64_t power = 1;
  for (std::uint32_t j = 1; j < p; ++j) {
    label[power] = j;
    value[j] = static_cast<std::uint32_t>(power);
    power = power * ctx.mu % p;
  }
  std::vector<Point> images(ctx.degree);
  for (Point pt = 1; pt <= ctx.degree; ++pt) {
    FieldVector v = point_to_vector(ctx, pt);
    v[i - 1] = value[x(label[v[i - 1]])];
    images[pt - 1] = vector_to_point(ctx, v);
  }
  return Permutation::from_images(std::move(images));
}

std::vector<std::uint32_t> divisor_sequence(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError("divisor_sequence needs an odd prime");
  if (p == 3 || p == 5) return {p - 1};
  std::vector<std::uint32_t> out;
  std::uint32_t product = 1;
  for (auto q : prime_factors(p - 1)) {
    product *= static_cast<std::uint32_t>(q);
    out.push_back(product);
  }
  return out;
}

std::vector<DiagonalStep> diagonal_chain(const AffineContext &ctx) {
  std::vector<DiagonalStep> steps;
  const auto divisors = divisor_sequence(ctx.p);
  for (std::uint32_t i = 1; i <= ctx.d; ++i) {
    for (auto a : divisors) {
      DiagonalStep step;
      step.coordinate = i;
      step.divisor = a;
      step.conjugator = diagonal_reduction_conjugator(ctx, i, a);
      step.expected_order = BigInt((ctx.p - 1) / a) * ipow(BigInt(ctx.p - 1), ctx.d - i);
      steps.push_back(std::move(step));
    }
  }
  return steps;
}

std::vector<std::vector<Permutation>> diagonal_conjugator_sets(
    const AffineContext &ctx) {
  std::vector<std::vector<Permutation>> sets;
  std::vector<Permutation> current{Permutation::identity(ctx.degree)};
  for (auto &step : diagonal_chain(ctx)) {
    current.push_back(step.conjugator);
    sets.push_back(current);
  }
  return sets;
}

ChainCertificate affine_chain(const AffineContext &ctx, Ambient ambient) {
  if (ambient != Ambient::symmetric) {
    throw DomainError("alternating-ambient certificates are not constructed");
  }
  if (ctx.p % 2 == 0) throw DomainError("odd p required");
  if (ctx.degree < 7) throw DomainError("p^d must be at least 7");

  ChainCertificate cert;
  cert.degree = ctx.degree;
  cert.ambient = ambient;
  cert.subgroup.family = "agl";
  cert.subgroup.params = {{"d", ctx.d}, {"p", ctx.p}};
  cert.subgroup.generators = ctx.generators;

  const auto identity = Permutation::identity(ctx.degree);
  std::vector<Permutation> xs{identity};
  cert.levels.push_back({xs, ctx.group.order()});

  if (ctx.d == 1) {
    xs.push_back(scalar_inverting_conjugator(ctx));
    cert.levels.push_back({xs, BigInt(ctx.p - 1)});
  } else {
    PermutationGroup running;
    bool first = true;
    for (auto &step : subspace_chain(ctx)) {
      running = first ? step.stabilizer : intersect(running, step.stabilizer);
      first = false;
      xs.push_back(step.conjugator);
      cert.levels.push_back({xs, running.order()});
    }
    if (!equals(running, ctx.diagonal)) {
      throw Error("affine_chain: subspace stabilisers do not meet in T");
    }
  }

  const auto steps = diagonal_chain(ctx);
  const auto ys = diagonal_conjugator_sets(ctx);
  for (std::size_t s = 0; s < ys.size(); ++s) {
    std::vector<Permutation> zs;
    for (const auto &x : xs) {
      for (const auto &y : ys[s]) zs.push_back(compose(x, y));
    }
    cert.levels.push_back({unique_conjugators(std::move(zs)), steps[s].expected_order});
  }
  cert.claimed_length = cert.levels.size();
  return cert;
}

}  // namespace mibs
