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

#include "infoex/subset_search.hpp"

#include <algorithm>
#include <bit>

#include "infoex/errors.hpp"

namespace infoex {

namespace {

using Mask = std::uint64_t;

// Keeps the `cap` lexicographically least maximizers of the best value seen.
class Incumbent {
 public:
  explicit Incumbent(std::size_t cap) : cap_(cap) {}

  void offer(std::int64_t value, Mask mask) {
    if (value < best_) return;
    if (value > best_) {
      best_ = value;
      masks_.clear();
    }
    auto pos = std::lower_bound(masks_.begin(), masks_.end(), mask, mask_lex_less);
    if (static_cast<std::size_t>(pos - masks_.begin()) >= cap_) return;
    masks_.insert(pos, mask);
    if (masks_.size() > cap_) masks_.pop_back();
  }

  void merge(const Incumbent& other) {
    for (Mask m : other.masks_) offer(other.best_, m);
    if (other.masks_.empty() && other.best_ > best_) best_ = other.best_;
  }

  std::int64_t best() const { return best_; }
  const std::vector<Mask>& masks() const { return masks_; }

 private:
  std::size_t cap_;
  std::int64_t best_ = -1;
  std::vector<Mask> masks_;
};

struct Evaluation {
  std::int64_t value;
  bool has_dead;  // some member lies in no partition
};

Evaluation evaluate(const SubsetProblem& p, Mask mask) {
  std::int64_t value = 0;
  bool dead = false;
  const std::size_t types = p.weights.size();
  for (Mask rest = mask; rest; rest &= rest - 1) {
    const auto x = static_cast<unsigned>(std::countr_zero(rest));
    bool alive = false;
    for (std::size_t t = 0; t < types; ++t) {
      if ((p.blockers[t][x] & mask) == 0) {
        value += p.weights[t];
        alive = true;
      }
    }
    dead = dead || !alive;
  }
  return {value, dead};
}

struct Task {
  Mask seed;
  unsigned last;
  bool subtree;  // false: evaluate the seed only
};

class Walker {
 public:
  Walker(const SubsetProblem& p, bool prune, std::size_t cap) : p_(p), prune_(prune), inc_(cap) {}

  void run(const Task& task) {
    if (!visit(task.seed)) return;
    if (task.subtree) descend(task.seed, task.last);
  }

  const Incumbent& incumbent() const { return inc_; }
  std::uint64_t examined() const { return examined_; }
  std::uint64_t pruned() const { return pruned_; }

 private:
  // Returns false when the subtree rooted at mask is cut.
  bool visit(Mask mask) {
    Evaluation e = evaluate(p_, mask);
    if (prune_ && e.has_dead) {
      ++pruned_;
      return false;
    }
    ++examined_;
    inc_.offer(e.value, mask);
    return true;
  }

  void descend(Mask mask, unsigned last) {
    for (unsigned v = last + 1; v < p_.size; ++v) {
      Mask child = mask | (Mask{1} << v);
      if (visit(child)) descend(child, v);
    }
  }

  const SubsetProblem& p_;
  bool prune_;
  Incumbent inc_;
  std::uint64_t examined_ = 0;
  std::uint64_t pruned_ = 0;
};

}  // namespace

bool mask_lex_less(Mask a, Mask b) {
  if (a == b) return false;
  const Mask diff = a ^ b;
  const int d = std::countr_zero(diff);
  const Mask above = d == 63 ? 0 : ~((Mask{1} << (d + 1)) - 1);
  if ((a >> d) & 1u) return (b & above) != 0;
  return (a & above) == 0;
}

std::vector<SeqId> mask_members(Mask mask) {
  std::vector<SeqId> out;
  for (; mask; mask &= mask - 1) out.push_back(static_cast<SeqId>(std::countr_zero(mask)));
  return out;
}

SubsetProblem make_subset_problem(const SequenceScorer& scorer) {
  const auto& model = scorer.model();
  const std::uint32_t size = scorer.space().size();
  if (size > 64) throw BudgetExceeded("subset", 64, size);
  SubsetProblem p;
  p.size = size;
  p.scale = model.prior_scale();
  for (TypeId t : model.type_ids()) {
    std::vector<Mask> blockers(size, 0);
    for (SeqId x = 0; x < size; ++x) {
      for (SeqId y = 0; y < size; ++y) {
        if (scorer.tempts(t, y, x)) blockers[x] |= Mask{1} << y;
      }
    }
    p.blockers.push_back(std::move(blockers));
    p.weights.push_back(model.prior_weight(t));
  }
  return p;
}

std::int64_t scaled_objective(const SubsetProblem& problem, Mask mask) {
  return evaluate(problem, mask).value;
}

SubsetSearchResult search_subsets(const SubsetProblem& problem, bool prune, std::size_t cap) {
  std::vector<Task> tasks;
  for (unsigned a = 0; a < problem.size; ++a) {
    tasks.push_back({Mask{1} << a, a, false});
    for (unsigned b = a + 1; b < problem.size; ++b) {
      tasks.push_back({(Mask{1} << a) | (Mask{1} << b), b, true});
    }
  }

  std::vector<Incumbent> found(tasks.size(), Incumbent(cap));
  std::vector<std::uint64_t> examined(tasks.size(), 0), pruned(tasks.size(), 0);
  const auto count = static_cast<std::int64_t>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    Walker walker(problem, prune, cap);
    walker.run(tasks[static_cast<std::size_t>(i)]);
    found[static_cast<std::size_t>(i)] = walker.incumbent();
    examined[static_cast<std::size_t>(i)] = walker.examined();
    pruned[static_cast<std::size_t>(i)] = walker.pruned();
  }

  Incumbent total(cap);
  SubsetSearchResult result;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    total.merge(found[i]);
    result.examined += examined[i];
    result.pruned += pruned[i];
  }
  result.best = total.best();
  result.maximizers = total.masks();
  return result;
}

SubsetSearchResult search_subsets_serial(const SubsetProblem& problem, std::size_t cap) {
  Incumbent inc(cap);
  SubsetSearchResult result;
  const Mask end = problem.size == 64 ? ~Mask{0} : (Mask{1} << problem.size) - 1;
  for (Mask mask = 1;; ++mask) {
    inc.offer(scaled_objective(problem, mask), mask);
    ++result.examined;
    if (mask == end) break;
  }
  result.best = inc.best();
  result.maximizers = inc.masks();
  return result;
}

}  // namespace infoex
