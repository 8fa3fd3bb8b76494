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

#include <algorithm>
#include <optional>
#include <random>

#include "infoex/equilibrium.hpp"
#include "infoex/errors.hpp"

namespace infoex {

namespace {

// Questionnaire under construction with, per type, the number of members
// that tempt each member away from the truth. A member is in the type's
// partition iff its count is zero.
class LocalState {
 public:
  explicit LocalState(const SequenceScorer& scorer)
      : scorer_(scorer),
        types_(scorer.model().type_ids()),
        in_(scorer.space().size(), 0),
        blocked_(types_.size(), std::vector<std::uint32_t>(scorer.space().size(), 0)) {
    for (TypeId t : types_) weight_.push_back(scorer.model().prior_weight(t));
  }

  std::int64_t value() const { return value_; }
  const std::vector<SeqId>& members() const { return members_; }
  bool contains(SeqId x) const { return in_[x] != 0; }
  std::size_t size() const { return members_.size(); }

  std::int64_t gain_add(SeqId c) const {
    std::int64_t gain = 0;
    for (std::size_t k = 0; k < types_.size(); ++k) {
      const TypeId t = types_[k];
      bool c_alive = true;
      std::int64_t lost = 0;
      for (SeqId x : members_) {
        if (c_alive && scorer_.tempts(t, x, c)) c_alive = false;
        if (blocked_[k][x] == 0 && scorer_.tempts(t, c, x)) ++lost;
      }
      gain += weight_[k] * ((c_alive ? 1 : 0) - lost);
    }
    return gain;
  }

  std::int64_t gain_remove(SeqId c) const {
    std::int64_t gain = 0;
    for (std::size_t k = 0; k < types_.size(); ++k) {
      const TypeId t = types_[k];
      std::int64_t freed = 0;
      for (SeqId x : members_) {
        if (x != c && blocked_[k][x] == 1 && scorer_.tempts(t, c, x)) ++freed;
      }
      gain += weight_[k] * (freed - (blocked_[k][c] == 0 ? 1 : 0));
    }
    return gain;
  }

  void add(SeqId c) {
    value_ += gain_add(c);
    for (std::size_t k = 0; k < types_.size(); ++k) {
      const TypeId t = types_[k];
      std::uint32_t count = 0;
      for (SeqId x : members_) {
        if (scorer_.tempts(t, c, x)) ++blocked_[k][x];
        if (scorer_.tempts(t, x, c)) ++count;
      }
      blocked_[k][c] = count;
    }
    in_[c] = 1;
    members_.insert(std::upper_bound(members_.begin(), members_.end(), c), c);
  }

  void remove(SeqId c) {
    value_ += gain_remove(c);
    members_.erase(std::find(members_.begin(), members_.end(), c));
    in_[c] = 0;
    for (std::size_t k = 0; k < types_.size(); ++k) {
      const TypeId t = types_[k];
      for (SeqId x : members_) {
        if (scorer_.tempts(t, c, x)) --blocked_[k][x];
      }
      blocked_[k][c] = 0;
    }
  }

 private:
  const SequenceScorer& scorer_;
  std::vector<TypeId> types_;
  std::vector<std::int64_t> weight_;
  std::vector<char> in_;
  std::vector<std::vector<std::uint32_t>> blocked_;
  std::vector<SeqId> members_;
  std::int64_t value_ = 0;
};

struct RunResult {
  std::int64_t value;
  std::vector<SeqId> members;
  std::uint64_t moves;
};

void grow(LocalState& state, std::uint32_t size, std::mt19937_64& rng, const HeuristicOptions& options,
          std::uint64_t& moves) {
  std::size_t zero_streak = 0;
  std::vector<SeqId> ties;
  while (state.size() < size) {
    std::int64_t best = 0;
    ties.clear();
    for (SeqId c = 0; c < size; ++c) {
      if (state.contains(c)) continue;
      std::int64_t g = state.gain_add(c);
      if (ties.empty() || g > best) {
        best = g;
        ties.assign(1, c);
      } else if (g == best) {
        ties.push_back(c);
      }
    }
    if (best < 0) break;
    if (best == 0) {
      if (zero_streak >= options.patience) break;
      ++zero_streak;
    } else {
      zero_streak = 0;
    }
    state.add(ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)]);
    ++moves;
  }
}

/// Greedy growth from start, or the whole space when start is empty, then
/// local search to a local optimum.
RunResult run_once(const SequenceScorer& scorer, std::optional<SeqId> start, std::mt19937_64& rng,
                   const HeuristicOptions& options) {
  const std::uint32_t size = scorer.space().size();
  LocalState state(scorer);
  std::uint64_t moves = 0;
  if (start) {
    state.add(*start);
    grow(state, size, rng, options, moves);
  } else {
    for (SeqId x = 0; x < size; ++x) state.add(x);
  }

  // Local search, best strict improvement first; ties go to the first move
  // in (drop, add, swap) order and ascending ids.
  while (true) {
    enum class Kind { kNone, kDrop, kAdd, kSwap } kind = Kind::kNone;
    std::int64_t best = 0;
    SeqId out = 0, in = 0;
    const std::vector<SeqId> members = state.members();
    if (members.size() > 1) {
      for (SeqId c : members) {
        std::int64_t g = state.gain_remove(c);
        if (g > best) {
          best = g;
          kind = Kind::kDrop;
          out = c;
        }
      }
    }
    for (SeqId c = 0; c < size; ++c) {
      if (state.contains(c)) continue;
      std::int64_t g = state.gain_add(c);
      if (g > best) {
        best = g;
        kind = Kind::kAdd;
        in = c;
      }
    }
    for (SeqId c : members) {
      const std::int64_t drop = state.gain_remove(c);
      state.remove(c);
      for (SeqId d = 0; d < size; ++d) {
        if (d == c || state.contains(d)) continue;
        std::int64_t g = drop + state.gain_add(d);
        if (g > best) {
          best = g;
          kind = Kind::kSwap;
          out = c;
          in = d;
        }
      }
      state.add(c);
    }
    if (kind == Kind::kNone) break;
    if (kind == Kind::kDrop || kind == Kind::kSwap) state.remove(out);
    if (kind == Kind::kAdd || kind == Kind::kSwap) state.add(in);
    ++moves;
  }
  return {state.value(), state.members(), moves};
}

}  // namespace

EquilibriumResult solve_heuristic(const Model& model, std::size_t n, std::uint64_t seed,
                                  const Budgets& budgets, const HeuristicOptions& options) {
  SequenceSpace space(model, n, budgets);
  SequenceScorer scorer(model, space);
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
  std::vector<RunResult> runs(restarts);
  const auto count = static_cast<std::int64_t>(restarts);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t r = 0; r < count; ++r) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(r)};
    std::mt19937_64 rng(seq);
    // Run 0 grows from the lexicographically smallest sequence, run 1
    // descends from the whole space, the rest grow from seeded random points.
    std::optional<SeqId> start;
    if (r == 0) {
      start = 0;
    } else if (r > 1) {
      start = std::uniform_int_distribution<SeqId>(0, space.size() - 1)(rng);
    }
    runs[static_cast<std::size_t>(r)] = run_once(scorer, start, rng, options);
  }

  const RunResult* best = &runs.front();
  std::uint64_t moves = 0;
  for (const auto& run : runs) {
    moves += run.moves;
    if (run.value > best->value || (run.value == best->value && lex_less(run.members, best->members))) {
      best = &run;
    }
  }

  EquilibriumResult result;
  result.n = n;
  result.mode = SearchMode::kHeuristic;
  result.certified = false;
  result.optimum = Rational(best->value, model.prior_scale());
  result.maximizers = {best->members};
  result.representative = best->members;
  result.stats.subsets_examined = restarts;
  result.stats.moves = moves;
  return result;
}

}  // namespace infoex
