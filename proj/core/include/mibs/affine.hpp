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
#ifndef MIBS_AFFINE_HPP
#define MIBS_AFFINE_HPP

#include <cstdint>
#include <vector>

#include "mibs/certificate.hpp"
#include "mibs/group.hpp"
#include "mibs/permutation.hpp"

namespace mibs {

/// Coordinates of a vector in F_p^d, each in [0, p).
using FieldVector = std::vector<std::uint32_t>;

/// d x d matrix over F_p, row-major. Vectors are rows: v -> v * matrix.
using Matrix = std::vector<std::vector<std::uint32_t>>;

/// v -> v * matrix + translation.
struct AffineMap {
  Matrix matrix;
  FieldVector translation;
};

/**
 * The affine group AGL(d, p) acting on the p^d vectors of F_p^d, together
 * with its linear part and the diagonal subgroup T = <g_1, ..., g_d>, where
 * g_i multiplies coordinate i by mu.
 */
struct AffineContext {
  std::uint32_t p = 0;
  std::uint32_t d = 0;
  std::size_t degree = 0;  // p^d
  std::uint32_t mu = 0;    // smallest primitive root mod p
  std::vector<Permutation> generators;
  PermutationGroup group;
  PermutationGroup linear;
  std::vector<Permutation> diagonal_generators;
  PermutationGroup diagonal;
};

AffineContext build_agl(std::uint32_t p, std::uint32_t d);

/// point = 1 + sum_j coords[j] * p^j.
Point vector_to_point(const AffineContext &ctx, const FieldVector &v);
FieldVector point_to_vector(const AffineContext &ctx, Point point);

Matrix identity_matrix(std::uint32_t d);

/// Determinant mod p.
std::uint32_t determinant(Matrix m, std::uint32_t p);

/// Throws DomainError for singular matrices.
Permutation affine_to_permutation(const AffineMap &f, const AffineContext &ctx);
Permutation linear_to_permutation(const Matrix &m, const AffineContext &ctx);

/**
 * For d = 1: the involution swapping mu^j and mu^-(j+1) for
 * j = 0, ..., (p-3)/2. Its conjugate of H meets H exactly in T.
 */
Permutation scalar_inverting_conjugator(const AffineContext &ctx);

/**
 * Multiplies every vector of the subspace W = span(basis) by lambda and
 * fixes everything else. H meets its conjugate in the stabiliser of W in
 * GL(V).
 */
Permutation subspace_scaling_conjugator(const AffineContext &ctx,
                                        const std::vector<FieldVector> &basis,
                                        std::uint32_t lambda);

/// Elements of GL(V) mapping span(basis) onto itself.
PermutationGroup subspace_stabilizer(const AffineContext &ctx,
                                     const std::vector<FieldVector> &basis);

struct SubspaceStep {
  std::uint32_t i = 0;  // W = span(b_i, ..., b_j)
  std::uint32_t j = 0;
  PermutationGroup stabilizer;  // filtered from GL(V)
  Permutation witness;          // in the previous running intersection, not in stabilizer
  Permutation conjugator;       // H meets H^conjugator in stabilizer
};

/// The d(d+1)/2 - 1 subspaces span(b_i..b_j), i <= j, (i, j) != (1, d), in
/// lexicographic order. Running intersections descend strictly to T.
std::vector<SubspaceStep> subspace_chain(const AffineContext &ctx);

/**
 * s = (1 2 ... k) on m > k points. Returns x with <s> meeting <s>^x in
 * <s^a>: the identity for a = 1, (1 m) for a = k, otherwise the product of
 * the cycles (1 .. a)(a+1 .. 2a)... Throws for a not dividing k and for
 * (k, a) = (4, 2).
 */
Permutation cyclic_reduction_conjugator(std::uint32_t k, std::uint32_t a,
                                        std::uint32_t m);

/**
 * The cyclic reduction on the line <b_i>, where the nonzero multiples
 * mu^(j-1) b_i are labelled j and 0 is labelled p; other coordinates are
 * untouched. T meets T^x in <g_1, .., g_i^a, .., g_d>.
 */
Permutation diagonal_reduction_conjugator(const AffineContext &ctx,
                                          std::uint32_t i, std::uint32_t a);

/// Per-coordinate divisors of p - 1: just p - 1 for p in {3, 5}, otherwise
/// cumulative products of the ascending prime factorisation.
std::vector<std::uint32_t> divisor_sequence(std::uint32_t p);

struct DiagonalStep {
  std::uint32_t coordinate = 0;
  std::uint32_t divisor = 0;
  Permutation conjugator;
  BigInt expected_order;  // of T meet all conjugates so far
};

std::vector<DiagonalStep> diagonal_chain(const AffineContext &ctx);

/// Y_1, ..., Y_l: the identity plus the conjugators of the first i steps.
std::vector<std::vector<Permutation>> diagonal_conjugator_sets(
    const AffineContext &ctx);

/// Descending chain from H to 1. Only the symmetric ambient is supported.
ChainCertificate affine_chain(const AffineContext &ctx,
                              Ambient ambient = Ambient::symmetric);

}  // namespace mibs

#endif  // MIBS_AFFINE_HPP
