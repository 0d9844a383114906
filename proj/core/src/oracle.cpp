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
#include "mibs/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "mibs/error.hpp"

namespace mibs {

// ---------------------------------------------------------------------------
// CosetAction

CosetAction CosetAction::build(PermutationGroup ambient,
                               PermutationGroup subgroup,
                               std::uint64_t limit_t) {
  if (ambient.degree() != subgroup.degree()) {
    throw DegreeMismatch("ambient and subgroup act on different degrees");
  }
  for (const auto &h : subgroup.generators()) {
    if (!ambient.contains(h)) {
      throw DomainError("subgroup generator " + print_cycles(h) +
                        " is not in the ambient group");
    }
  }
  const BigInt t = ambient.order() / subgroup.order();
  if (t > limit_t) {
    throw LimitExceeded("index", "index |G:H| = " + to_decimal(t) +
                                     " exceeds the limit " +
                                     std::to_string(limit_t));
  }

  CosetAction action;
  action.ambient_ = std::move(ambient);
  action.subgroup_ = std::move(subgroup);
  const auto &gens = action.ambient_.generators();
  const std::size_t degree = action.ambient_.degree();
  const auto count = t.convert_to<std::size_t>();

  std::vector<std::vector<Point>> images(gens.size());
  auto identity = Permutation::identity(degree);
  action.index_.emplace(action.subgroup_.canonical_coset_representative(identity), 1);
  action.transversal_.push_back(identity);
  for (std::size_t k = 0; k < action.transversal_.size(); ++k) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = compose(action.transversal_[k], gens[s]);
      auto [it, inserted] = action.index_.emplace(
          action.subgroup_.canonical_coset_representative(y),
          static_cast<Point>(action.transversal_.size() + 1));
      if (inserted) action.transversal_.push_back(std::move(y));
      images[s].push_back(it->second);
    }
  }
  if (action.transversal_.size() != count) {
    throw Error("coset enumeration found " +
                std::to_string(action.transversal_.size()) +
                " cosets, expected " + std::to_string(count));
  }
  for (auto &img : images) {
    action.generator_images_.push_back(Permutation::from_images(std::move(img)));
  }

  // The kernel of the action is the intersection of all H^x_i.
  const auto &h = action.subgroup_;
  PermutationGroup kernel = h;
  for (std::size_t i = 1; i < count && !kernel.is_trivial(); ++i) {
    const auto &x = action.transversal_[i];
    const auto x_inv = inverse(x);
    kernel = filter_subgroup(kernel, [&](const Permutation &k) {
      return h.contains(compose(compose(x, k), x_inv));
    });
  }
  if (!kernel.is_trivial()) throw Error("action not faithful");
  return action;
}

CosetAction build_coset_action(const PermutationGroup &ambient,
                               const PermutationGroup &subgroup,
                               std::uint64_t limit_t) {
  return CosetAction::build(ambient, subgroup, limit_t);
}

Point CosetAction::locate(const Permutation &g) const {
  auto it = index_.find(subgroup_.canonical_coset_representative(g));
  if (it == index_.end()) {
    throw DomainError("element " + print_cycles(g) + " is not in the ambient group");
  }
  return it->second;
}

Permutation CosetAction::act(const Permutation &g) const {
  std::vector<Point> images(transversal_.size());
  for (std::size_t i = 0; i < transversal_.size(); ++i) {
    images[i] = locate(compose(transversal_[i], g));
  }
  return Permutation::from_images(std::move(images));
}

// ---------------------------------------------------------------------------
// Search over subgroups of H, each a set of enumerated elements.

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits &bits) const noexcept {
    return boost::hash_range(bits.begin(), bits.end());
  }
};

std::size_t popcount(const Bits &bits) {
  std::size_t n = 0;
  for (auto w : bits) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

// Elements of H as permutations of the t points, with one bitset per point
// marking the elements that fix it.
class ElementTable {
 public:
  ElementTable(const CosetAction &action, const Limits &limits)
      : t_(action.degree()) {
    const auto &h = action.subgroup();
    require_enumerable(h, limits.enumeration, "subgroup");
    size_ = h.order().convert_to<std::size_t>();
    const BigInt cells = BigInt(size_) * t_;
    if (cells > BigInt(limits.enumeration) * 16) {
      throw LimitExceeded("enumeration",
                          "|H| * t = " + to_decimal(cells) +
                              " exceeds 16 times the enumeration limit");
    }
    words_ = (size_ + 63) / 64;

    std::vector<std::vector<Point>> gens;
    for (const auto &g : h.generators()) {
      auto img = action.act(g).images();
      for (auto &q : img) --q;
      gens.push_back(std::move(img));
    }
    tables_.reserve(size_ * t_);
    for (std::size_t i = 0; i < t_; ++i) tables_.push_back(static_cast<Point>(i));

    auto hash = [this](std::size_t e) {
      return boost::hash_range(tables_.begin() + e * t_, tables_.begin() + (e + 1) * t_);
    };
    auto eq = [this](std::size_t a, std::size_t b) {
      return std::equal(tables_.begin() + a * t_, tables_.begin() + (a + 1) * t_,
                        tables_.begin() + b * t_);
    };
    std::unordered_set<std::size_t, decltype(hash), decltype(eq)> seen(
        size_ * 2, hash, eq);
    seen.insert(0);
    std::vector<Point> scratch(t_);
    for (std::size_t e = 0; e < size_ && e * t_ < tables_.size(); ++e) {
      for (const auto &g : gens) {
        for (std::size_t i = 0; i < t_; ++i) scratch[i] = g[tables_[e * t_ + i]];
        std::size_t candidate = tables_.size() / t_;
        tables_.insert(tables_.end(), scratch.begin(), scratch.end());
        if (!seen.insert(candidate).second) tables_.resize(candidate * t_);
      }
    }
    if (tables_.size() != size_ * t_) {
      throw Error("subgroup closure found " + std::to_string(tables_.size() / t_) +
                  " elements, expected " + std::to_string(size_));
    }

    fix_.assign(t_ * words_, 0);
    for (std::size_t e = 0; e < size_; ++e) {
      for (std::size_t i = 0; i < t_; ++i) {
        if (tables_[e * t_ + i] == i) fix_[i * words_ + e / 64] |= std::uint64_t{1} << (e % 64);
      }
    }
  }

  std::size_t degree() const { return t_; }
  std::size_t size() const { return size_; }

  Bits all() const {
    Bits b(words_, ~std::uint64_t{0});
    if (size_ % 64) b.back() = (std::uint64_t{1} << (size_ % 64)) - 1;
    return b;
  }

  // Elements of c fixing point i (0-based).
  Bits meet(const Bits &c, std::size_t i) const {
    Bits out(c);
    const auto *f = &fix_[i * words_];
    for (std::size_t w = 0; w < words_; ++w) out[w] &= f[w];
    return out;
  }

  bool moves(const Bits &c, std::size_t i) const {
    const auto *f = &fix_[i * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      if (c[w] & ~f[w]) return true;
    }
    return false;
  }

  // Points moved by c, one per orbit of c when prune is set; ascending.
  std::vector<std::size_t> moves_of(const Bits &c, bool prune) const {
    std::vector<std::size_t> out;
    if (!prune) {
      for (std::size_t i = 0; i < t_; ++i) {
        if (moves(c, i)) out.push_back(i);
      }
      return out;
    }
    std::vector<std::size_t> members;
    for (std::size_t w = 0; w < words_; ++w) {
      for (auto bits = c[w]; bits; bits &= bits - 1) {
        members.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      }
    }
    std::vector<bool> seen(t_, false);
    for (std::size_t i = 0; i < t_; ++i) {
      if (seen[i]) continue;
      for (auto e : members) seen[tables_[e * t_ + i]] = true;
      if (moves(c, i)) out.push_back(i);
    }
    return out;
  }

 private:
  std::size_t t_;
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<Point> tables_;
  std::vector<std::uint64_t> fix_;
};

class Search {
 public:
  Search(const ElementTable &table, const Limits &limits)
      : table_(table), limits_(limits) {}

  std::size_t depth(const Bits &c) {
    if (popcount(c) <= 1) return 0;
    {
      std::lock_guard lock(mutex_);
      auto it = memo_.find(c);
      if (it != memo_.end()) return it->second;
    }
    std::size_t best = 0;
    for (auto i : table_.moves_of(c, limits_.prune)) {
      best = std::max(best, depth(table_.meet(c, i)));
    }
    store(c, best + 1);
    return best + 1;
  }

  std::size_t root_depth(const Bits &root) {
    if (popcount(root) <= 1) return 0;
    auto moves = table_.moves_of(root, limits_.prune);
    std::vector<std::size_t> results(moves.size(), 0);
    const unsigned threads =
        std::max(1u, std::min<unsigned>(limits_.threads, static_cast<unsigned>(moves.size())));
    if (threads == 1) {
      for (std::size_t k = 0; k < moves.size(); ++k) {
        results[k] = depth(table_.meet(root, moves[k]));
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
          for (std::size_t k; (k = next++) < moves.size();) {
            try {
              results[k] = depth(table_.meet(root, moves[k]));
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
              next = moves.size();
            }
          }
        });
      }
      for (auto &th : pool) th.join();
      if (failure) std::rethrow_exception(failure);
    }
    std::size_t best = 1 + *std::max_element(results.begin(), results.end());
    store(root, best);
    return best;
  }

  std::size_t states() {
    std::lock_guard lock(mutex_);
    return memo_.size();
  }

 private:
  void store(const Bits &c, std::size_t value) {
    std::lock_guard lock(mutex_);
    if (memo_.size() >= limits_.memo && !memo_.contains(c)) {
      throw LimitExceeded("memo", "search visited more than " +
                                      std::to_string(limits_.memo) + " subgroups");
    }
    memo_.emplace(c, value);
  }

  const ElementTable &table_;
  const Limits &limits_;
  std::mutex mutex_;
  std::unordered_map<Bits, std::size_t, BitsHash> memo_;
};

// Points mapped so that the anchor becomes point 1 (0-based results).
std::vector<std::size_t> normalise(const CosetAction &action, Point anchor,
                                   std::span<const Point> points) {
  const auto anchor_inv = inverse(action.transversal().at(anchor - 1));
  std::vector<std::size_t> out;
  for (Point p : points) {
    if (p < 1 || p > action.degree()) {
      throw DomainError("point " + std::to_string(p) + " out of range");
    }
    out.push_back(action.locate(compose(action.transversal()[p - 1], anchor_inv)) - 1);
  }
  return out;
}

}  // namespace

MibsResult compute_mibs(const CosetAction &action, const Limits &limits) {
  ElementTable table(action, limits);
  Search search(table, limits);
  const Bits root = table.all();

  MibsResult result;
  result.value = 1 + search.root_depth(root);

  Bits c = root;
  result.base.push_back(1);
  result.orders.push_back(BigInt(popcount(c)));
  std::size_t remaining = result.value - 1;
  while (remaining > 0) {
    for (auto i : table.moves_of(c, limits.prune)) {
      Bits child = table.meet(c, i);
      if (search.depth(child) == remaining - 1) {
        c = std::move(child);
        result.base.push_back(static_cast<Point>(i + 1));
        result.orders.push_back(BigInt(popcount(c)));
        break;
      }
    }
    --remaining;
  }
  result.states = search.states();
  return result;
}

ChainCertificate witness_certificate(const CosetAction &action,
                                     const MibsResult &result, Ambient ambient,
                                     const SubgroupDescription &subgroup) {
  ChainCertificate cert;
  cert.degree = action.ambient().degree();
  cert.ambient = ambient;
  cert.subgroup = subgroup;
  std::vector<Permutation> xs;
  for (std::size_t j = 0; j < result.base.size(); ++j) {
    xs.push_back(action.transversal()[result.base[j] - 1]);
    cert.levels.push_back({xs, result.orders[j]});
  }
  cert.claimed_length = cert.levels.size();
  return cert;
}

std::vector<BigInt> stabilizer_chain_orders(const CosetAction &action,
                                            std::span<const Point> points,
                                            const Limits &limits) {
  if (points.empty()) return {};
  ElementTable table(action, limits);
  Bits c = table.all();
  std::vector<BigInt> orders;
  for (auto i : normalise(action, points.front(), points)) {
    c = table.meet(c, i);
    orders.push_back(BigInt(popcount(c)));
  }
  return orders;
}

std::vector<Point> chain_to_base(const ChainCertificate &cert,
                                 const CosetAction &action,
                                 const Limits &limits) {
  if (cert.degree != action.ambient().degree()) {
    throw DegreeMismatch("certificate degree differs from the action's degree");
  }
  if (cert.levels.empty() || cert.levels.front().conjugators.empty()) {
    throw Error("certificate has no levels");
  }

  // Points of each level's conjugators, first occurrences in level order.
  std::vector<Point> sequence;
  std::vector<std::size_t> level_end;
  for (const auto &level : cert.levels) {
    for (const auto &x : level.conjugators) {
      Point p = action.locate(x);
      if (std::find(sequence.begin(), sequence.end(), p) == sequence.end()) {
        sequence.push_back(p);
      }
    }
    level_end.push_back(sequence.size());
  }

  ElementTable table(action, limits);
  const auto mapped = normalise(action, sequence.front(), sequence);
  Bits c = table.all();
  std::size_t previous = 0;
  std::size_t at = 0;
  for (std::size_t j = 0; j < cert.levels.size(); ++j) {
    for (; at < level_end[j]; ++at) c = table.meet(c, mapped[at]);
    const std::size_t order = popcount(c);
    if (j > 0 && order >= previous) {
      throw Error("certificate is not strictly descending at level " + std::to_string(j));
    }
    if (BigInt(order) != cert.levels[j].order) {
      throw Error("level " + std::to_string(j) + " has order " + std::to_string(order) +
                  ", certificate claims " + to_decimal(cert.levels[j].order));
    }
    previous = order;
  }
  if (previous != 1) throw Error("certificate does not end at the trivial group");

  std::vector<Point> base;
  c = table.all();
  std::size_t current = popcount(c) + 1;  // the first point always descends from G
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    Bits next = table.meet(c, mapped[k]);
    std::size_t order = popcount(next);
    if (order < current) {
      base.push_back(sequence[k]);
      current = order;
      c = std::move(next);
    }
  }
  if (base.size() < cert.claimed_length) {
    throw Error("irredundant base is shorter than the claimed length");
  }
  return base;
}

}  // namespace mibs
