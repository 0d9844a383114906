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
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "mibs/action_spec.hpp"
#include "mibs/affine.hpp"
#include "mibs/arith.hpp"
#include "mibs/bounds.hpp"
#include "mibs/error.hpp"
#include "mibs/oracle.hpp"
#include "mibs/wreath.hpp"
#include "support/brute_force.hpp"

namespace mibs {
namespace {

// Longest strictly descending chain of pointwise stabilisers, straight from
// the element list of the permutation group on the coset points.
class ReferenceOracle {
 public:
  explicit ReferenceOracle(const CosetAction &action) : t_(action.degree()) {
    auto all = testing::closure(action.generator_images(), t_);
    elements_.assign(all.begin(), all.end());
  }

  std::size_t mibs() {
    return depth(std::vector<bool>(elements_.size(), true));
  }

 private:
  std::size_t depth(const std::vector<bool> &set) {
    if (std::count(set.begin(), set.end(), true) == 1) return 0;
    if (auto it = memo_.find(set); it != memo_.end()) return it->second;
    std::size_t best = 0;
    for (std::size_t p = 0; p < t_; ++p) {
      std::vector<bool> next(set.size());
      bool smaller = false;
      for (std::size_t e = 0; e < set.size(); ++e) {
        next[e] = set[e] && elements_[e][p] == p;
        smaller |= set[e] && !next[e];
      }
      if (smaller) best = std::max(best, 1 + depth(next));
    }
    memo_[set] = best;
    return best;
  }

  std::size_t t_;
  std::vector<testing::Table> elements_;
  std::map<std::vector<bool>, std::size_t> memo_;
};

Permutation random_perm(std::mt19937_64 &rng, std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i + 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

ResolvedAction natural(Ambient ambient, std::int64_t n) {
  ActionSpec spec;
  spec.ambient = ambient;
  spec.params = {{"n", n}};
  return resolve_action(spec);
}

ResolvedAction agl(Ambient ambient, std::int64_t p, std::int64_t d) {
  ActionSpec spec;
  spec.ambient = ambient;
  spec.family = "agl";
  spec.params = {{"p", p}, {"d", d}};
  return resolve_action(spec);
}

CosetAction action_of(const ResolvedAction &r) {
  return build_coset_action(r.ambient_group, r.subgroup);
}

TEST(CosetAction, PointStabilizerIsNatural) {
  auto s4 = PermutationGroup::symmetric(4);
  auto action = build_coset_action(s4, point_stabilizer(s4, 4));
  EXPECT_EQ(action.degree(), 4u);
  EXPECT_TRUE(action.transversal().front().is_identity());
  EXPECT_EQ(from_generators(action.generator_images(), 4).order(), 24);
}

TEST(CosetAction, AffineLineInSeven) {
  auto action = action_of(agl(Ambient::symmetric, 7, 1));
  EXPECT_EQ(action.degree(), 120u);
  EXPECT_EQ(BigInt(action.degree()) * action.subgroup().order(), action.ambient().order());
  for (std::size_t i = 0; i < action.degree(); ++i) {
    EXPECT_EQ(action.locate(action.transversal()[i]), i + 1);
  }
}

TEST(CosetAction, ActIsAHomomorphism) {
  std::mt19937_64 rng(3);
  auto action = action_of(agl(Ambient::symmetric, 7, 1));
  for (int trial = 0; trial < 30; ++trial) {
    auto g = action.ambient().random_element(rng);
    auto h = action.ambient().random_element(rng);
    EXPECT_EQ(action.act(compose(g, h)), compose(action.act(g), action.act(h)));
    // H x_i g = H x_(i^g)
    for (Point i : {1u, 17u, 120u}) {
      EXPECT_EQ(action.locate(compose(action.transversal()[i - 1], g)), action.act(g)(i));
    }
  }
}

TEST(CosetAction, NormalSubgroupIsRejected) {
  auto s4 = PermutationGroup::symmetric(4);
  auto klein = from_generators({parse_cycles("(1 2)(3 4)", 4), parse_cycles("(1 3)(2 4)", 4)}, 4);
  EXPECT_THROW(build_coset_action(s4, klein), Error);
}

TEST(CosetAction, IndexLimit) {
  auto r = agl(Ambient::symmetric, 7, 1);
  try {
    build_coset_action(r.ambient_group, r.subgroup, 100);
    FAIL() << "expected a limit refusal";
  } catch (const LimitExceeded &e) {
    EXPECT_EQ(e.limit(), "index");
  }
}

TEST(CosetAction, ForeignGenerator) {
  auto a5 = PermutationGroup::alternating(5);
  auto h = from_generators({parse_cycles("(1 2)", 5)}, 5);
  EXPECT_THROW(build_coset_action(a5, h), DomainError);
}

TEST(Mibs, TwoPoints) {
  auto action = action_of(natural(Ambient::symmetric, 2));
  EXPECT_EQ(compute_mibs(action).value, 1u);
}

TEST(Mibs, NaturalActions) {
  for (std::int64_t n = 3; n <= 7; ++n) {
    auto s = compute_mibs(action_of(natural(Ambient::symmetric, n)));
    EXPECT_EQ(s.value, static_cast<std::size_t>(n - 1)) << "S" << n;
    if (n >= 4) {
      auto a = compute_mibs(action_of(natural(Ambient::alternating, n)));
      EXPECT_EQ(a.value, static_cast<std::size_t>(n - 2)) << "A" << n;
    }
  }
}

TEST(Mibs, AgreesWithReference) {
  for (std::int64_t n = 3; n <= 6; ++n) {
    for (auto ambient : {Ambient::symmetric, Ambient::alternating}) {
      if (ambient == Ambient::alternating && n < 4) continue;
      auto action = action_of(natural(ambient, n));
      ReferenceOracle ref(action);
      EXPECT_EQ(compute_mibs(action).value, ref.mibs()) << n;
    }
  }
  auto line = action_of(agl(Ambient::symmetric, 5, 1));
  ReferenceOracle ref(line);
  EXPECT_EQ(compute_mibs(line).value, ref.mibs());
}

TEST(Mibs, RandomSubgroupsAgreeWithReference) {
  std::mt19937_64 rng(2026);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 25; ++trial) {
    const std::size_t n = trial % 2 ? 5 : 6;
    auto ambient = trial % 3 == 0 ? PermutationGroup::alternating(n)
                                  : PermutationGroup::symmetric(n);
    std::vector<Permutation> gens;
    const int count = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) {
      auto g = random_perm(rng, n);
      if (ambient.contains(g)) gens.push_back(g);
    }
    auto h = from_generators(gens, n);
    if (h.order() * 2 > ambient.order() / 6) continue;  // too big or not core-free
    std::optional<CosetAction> action;
    try {
      action.emplace(build_coset_action(ambient, h));
    } catch (const Error &) {
      continue;
    }
    if (action->degree() > 360) continue;
    ReferenceOracle ref(*action);
    auto result = compute_mibs(*action);
    EXPECT_EQ(result.value, ref.mibs()) << "trial " << trial;
    // mibs <= 1 + Omega(|H|)
    EXPECT_LE(result.value, 1 + omega(static_cast<std::uint64_t>(h.order())));
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(Mibs, AffineLineInSeven) {
  auto s = compute_mibs(action_of(agl(Ambient::symmetric, 7, 1)));
  auto a = compute_mibs(action_of(agl(Ambient::alternating, 7, 1)));
  EXPECT_EQ(s.value, 4u);
  EXPECT_EQ(a.value, 3u);
  EXPECT_LE(s.value, a.value + 1);
  EXPECT_LE(a.value, s.value);
}

TEST(Mibs, PruningThreadsAndDeterminism) {
  for (auto r : {natural(Ambient::symmetric, 6), natural(Ambient::alternating, 6),
                 agl(Ambient::symmetric, 7, 1), agl(Ambient::alternating, 7, 1)}) {
    auto action = action_of(r);
    auto pruned = compute_mibs(action);
    Limits no_prune;
    no_prune.prune = false;
    EXPECT_EQ(compute_mibs(action, no_prune).value, pruned.value);
    Limits threaded;
    threaded.threads = 4;
    auto t = compute_mibs(action, threaded);
    EXPECT_EQ(t.value, pruned.value);
    EXPECT_EQ(t.base, pruned.base);
    auto again = compute_mibs(action);
    EXPECT_EQ(again.base, pruned.base);
    EXPECT_EQ(again.orders, pruned.orders);
  }
}

TEST(Mibs, WitnessBaseIsIrredundant) {
  auto action = action_of(agl(Ambient::symmetric, 7, 1));
  auto result = compute_mibs(action);
  ASSERT_EQ(result.base.size(), result.value);
  EXPECT_EQ(result.base.front(), 1u);
  auto orders = stabilizer_chain_orders(action, result.base);
  EXPECT_EQ(orders, result.orders);
  for (std::size_t i = 1; i < orders.size(); ++i) EXPECT_LT(orders[i], orders[i - 1]);
  EXPECT_EQ(orders.back(), 1);
}

TEST(Mibs, Limits) {
  auto action = action_of(agl(Ambient::symmetric, 7, 1));
  Limits tiny_memo;
  tiny_memo.memo = 2;
  try {
    compute_mibs(action, tiny_memo);
    FAIL() << "expected a memo refusal";
  } catch (const LimitExceeded &e) {
    EXPECT_EQ(e.limit(), "memo");
  }
  Limits tiny_enum;
  tiny_enum.enumeration = 10;
  try {
    compute_mibs(action, tiny_enum);
    FAIL() << "expected an enumeration refusal";
  } catch (const LimitExceeded &e) {
    EXPECT_EQ(e.limit(), "enumeration");
  }
}

TEST(Mibs, AffinePlaneOverThree) {
  auto r = agl(Ambient::symmetric, 3, 2);
  auto action = action_of(r);
  auto result = compute_mibs(action);
  auto bounds = affine_bounds(3, 2, Ambient::symmetric);
  EXPECT_GE(static_cast<std::int64_t>(result.value), bounds.lower);
  EXPECT_LT(static_cast<double>(result.value), bounds.strict_upper);
  EXPECT_LE(static_cast<std::int64_t>(result.value), length_sym(9, Ambient::symmetric));
  auto cert = affine_chain(build_agl(3, 2));
  EXPECT_GE(result.value, cert.claimed_length);
}

TEST(WitnessCertificate, Verifies) {
  for (auto r : {natural(Ambient::symmetric, 5), agl(Ambient::symmetric, 7, 1),
                 agl(Ambient::alternating, 7, 1)}) {
    auto action = action_of(r);
    auto result = compute_mibs(action);
    auto cert = witness_certificate(action, result, r.ambient, r.description);
    EXPECT_EQ(cert.claimed_length, result.value);
    auto report = verify_certificate(cert, r.subgroup);
    EXPECT_TRUE(report.passed());
    auto base = chain_to_base(cert, action);
    EXPECT_GE(base.size(), cert.claimed_length);
    auto round = parse_certificate(serialize_certificate(cert));
    EXPECT_EQ(serialize_certificate(round), serialize_certificate(cert));
  }
}

TEST(ChainToBase, NaturalThree) {
  auto r = natural(Ambient::symmetric, 3);
  auto action = action_of(r);
  auto cert = witness_certificate(action, compute_mibs(action), r.ambient, r.description);
  auto base = chain_to_base(cert, action);
  EXPECT_EQ(base.size(), 2u);
}

TEST(ChainToBase, AffineCertificate) {
  auto r = agl(Ambient::symmetric, 7, 1);
  auto action = action_of(r);
  auto cert = affine_chain(build_agl(7, 1));
  ASSERT_EQ(cert.degree, action.ambient().degree());
  // The affine certificate lives on the 7 points; lift it onto the coset
  // action only through the point count, so use the witness instead.
  auto witness = witness_certificate(action, compute_mibs(action), r.ambient, r.description);
  auto base = chain_to_base(witness, action);
  ASSERT_EQ(base.size(), 4u);
  auto orders = stabilizer_chain_orders(action, base);
  for (std::size_t i = 1; i < orders.size(); ++i) EXPECT_LT(orders[i], orders[i - 1]);
}

TEST(ChainToBase, DuplicatedLevelRejected) {
  auto r = agl(Ambient::symmetric, 7, 1);
  auto action = action_of(r);
  auto cert = witness_certificate(action, compute_mibs(action), r.ambient, r.description);
  cert.levels.insert(cert.levels.begin() + 1, cert.levels[1]);
  cert.claimed_length = cert.levels.size();
  EXPECT_THROW(chain_to_base(cert, action), Error);
  EXPECT_FALSE(verify_certificate(cert, r.subgroup).passed());
}

TEST(VerifyCertificate, DeletedConjugatorFails) {
  // Each wreath level adds exactly one conjugator.
  auto ctx = build_wreath(5, 2);
  auto cert = wreath_chain(ctx);
  const auto last = cert.levels.size() - 1;
  ASSERT_EQ(cert.levels[last].conjugators.size(), cert.levels[last - 1].conjugators.size() + 1);
  cert.levels[last].conjugators.pop_back();
  auto report = verify_certificate(cert, ctx.group);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(report.terminal_trivial);
  EXPECT_EQ(report.first_failure(), static_cast<std::ptrdiff_t>(last));
}

TEST(VerifyCertificate, LastLevelReducedToPreviousFails) {
  auto ctx = build_agl(3, 2);
  auto cert = affine_chain(ctx);
  const auto last = cert.levels.size() - 1;
  cert.levels[last].conjugators = cert.levels[last - 1].conjugators;
  auto report = verify_certificate(cert, ctx.group);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.first_failure(), static_cast<std::ptrdiff_t>(last));
}

TEST(VerifyCertificate, TamperedOrderFails) {
  auto ctx = build_agl(7, 1);
  auto cert = affine_chain(ctx);
  cert.levels[2].order += 1;
  auto report = verify_certificate(cert, ctx.group);
  EXPECT_FALSE(report.passed());
  EXPECT_EQ(report.first_failure(), 2);
}

}  // namespace
}  // namespace mibs
