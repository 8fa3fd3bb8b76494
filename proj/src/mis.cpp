// Copyright 2026 The infoex Authors
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

#include "infoex/mis.hpp"

#include <algorithm>
#include <bit>

#include "infoex/errors.hpp"

namespace infoex {

namespace {

using Word = std::uint64_t;

class BitSet {
 public:
  explicit BitSet(std::size_t words) : w_(words, 0) {}

  void set(std::uint32_t v) { w_[v >> 6] |= Word{1} << (v & 63); }
  void reset(std::uint32_t v) { w_[v >> 6] &= ~(Word{1} << (v & 63)); }
  bool empty() const {
    for (auto x : w_) {
      if (x) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  std::size_t count_and(std::span<const Word> other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(std::popcount(w_[i] & other[i]));
    return c;
  }
  void and_with(std::span<const Word> other) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other[i];
  }
  void and_not(std::span<const Word> other) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~other[i];
  }
  // Lowest set bit, or -1.
  std::int64_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return static_cast<std::int64_t>(i * 64 + std::countr_zero(w_[i]));
    }
    return -1;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      Word x = w_[i];
      while (x) {
        f(static_cast<std::uint32_t>(i * 64 + std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

 private:
  std::vector<Word> w_;
};

class BranchAndBound {
 public:
  explicit BranchAndBound(const SenderGraph& g) : g_(g) {}

  void run(std::vector<SeqId> incumbent) {
    best_ = std::move(incumbent);
    BitSet all(g_.words_per_row());
    for (SeqId v = 0; v < g_.vertex_count(); ++v) all.set(v);
    std::vector<SeqId> current;
    search(all, current);
  }

  const std::vector<SeqId>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // Upper bound on the independence number of G[candidates]: the number of
  // cliques in a greedy clique cover.
  std::size_t clique_cover_bound(const BitSet& candidates) const {
    BitSet rest = candidates;
    std::size_t cliques = 0;
    for (std::int64_t u = rest.first(); u >= 0; u = rest.first()) {
      rest.reset(static_cast<std::uint32_t>(u));
      BitSet extend = rest;
      extend.and_with(g_.row(static_cast<SeqId>(u)));
      for (std::int64_t w = extend.first(); w >= 0; w = extend.first()) {
        rest.reset(static_cast<std::uint32_t>(w));
        extend.reset(static_cast<std::uint32_t>(w));
        extend.and_with(g_.row(static_cast<SeqId>(w)));
      }
      ++cliques;
    }
    return cliques;
  }

  void search(const BitSet& candidates, std::vector<SeqId>& current) {
    ++nodes_;
    if (candidates.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + candidates.count() <= best_.size()) return;
    if (current.size() + clique_cover_bound(candidates) <= best_.size()) return;

    std::int64_t pivot = -1;
    std::size_t pivot_degree = 0;
    candidates.for_each([&](std::uint32_t v) {
      std::size_t d = candidates.count_and(g_.row(v));
      if (pivot < 0 || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });

    if (pivot_degree == 0) {
      std::size_t before = current.size();
      candidates.for_each([&](std::uint32_t v) { current.push_back(v); });
      if (current.size() > best_.size()) best_ = current;
      current.resize(before);
      return;
    }

    const auto v = static_cast<SeqId>(pivot);
    BitSet with = candidates;
    with.reset(v);
    with.and_not(g_.row(v));
    current.push_back(v);
    search(with, current);
    current.pop_back();

    BitSet without = candidates;
    without.reset(v);
    search(without, current);
  }

  const SenderGraph& g_;
  std::vector<SeqId> best_;
  std::uint64_t nodes_ = 0;
};

std::vector<SeqId> greedy_min_degree(const SenderGraph& g) {
  BitSet remaining(g.words_per_row());
  for (SeqId v = 0; v < g.vertex_count(); ++v) remaining.set(v);
  std::vector<SeqId> chosen;
  while (!remaining.empty()) {
    std::int64_t pick = -1;
    std::size_t best_degree = 0;
    remaining.for_each([&](std::uint32_t v) {
      std::size_t d = remaining.count_and(g.row(v));
      if (pick < 0 || d < best_degree) {
        pick = v;
        best_degree = d;
      }
    });
    const auto v = static_cast<SeqId>(pick);
    chosen.push_back(v);
    remaining.reset(v);
    remaining.and_not(g.row(v));
  }
  return chosen;
}

}  // namespace

bool is_independent(const SenderGraph& graph, const std::vector<SeqId>& members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] == members[j] || graph.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

IndependentSetResult max_independent_set(const SenderGraph& graph, MisMode mode, const Budgets& budgets) {
  IndependentSetResult result;
  std::vector<SeqId> greedy = greedy_min_degree(graph);
  if (mode == MisMode::kGreedy) {
    result.members = std::move(greedy);
  } else {
    if (graph.vertex_count() > budgets.mis) {
      throw BudgetExceeded("mis", budgets.mis, graph.vertex_count());
    }
    BranchAndBound bnb(graph);
    bnb.run(std::move(greedy));
    result.members = bnb.best();
    result.nodes = bnb.nodes();
    result.certified = true;
  }
  std::sort(result.members.begin(), result.members.end());
  result.size = result.members.size();
  return result;
}

}  // namespace infoex
