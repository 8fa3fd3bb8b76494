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

#include "infoex/equilibrium.hpp"

#include <algorithm>

#include "infoex/errors.hpp"
#include "infoex/subset_search.hpp"

namespace infoex {

namespace {

std::vector<SeqId> normalized(std::span<const SeqId> members) {
  std::vector<SeqId> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

// ---- strategies -----------------------------------------------------------

ReceiverStrategy::ReceiverStrategy(std::size_t horizon, std::vector<SeqId> map)
    : horizon_(horizon), map_(std::move(map)) {
  if (map_.empty()) throw InvalidArgument("strategy over an empty domain");
  in_image_.assign(map_.size(), 0);
  for (SeqId z : map_) {
    if (z >= map_.size()) throw InvalidArgument("strategy maps outside X^n");
    in_image_[z] = 1;
  }
  for (SeqId z = 0; z < map_.size(); ++z) {
    if (in_image_[z]) image_.push_back(z);
  }
}

SeqId ReceiverStrategy::least_preimage(SeqId z) const {
  for (SeqId y = 0; y < map_.size(); ++y) {
    if (map_[y] == z) return y;
  }
  throw InvalidArgument("sequence is not in the strategy image");
}

ReceiverStrategy canonical_strategy(const SequenceSpace& space, std::span<const SeqId> members,
                                    SeqId fallback) {
  if (members.empty()) throw InvalidArgument("questionnaire must be non-empty");
  std::vector<char> member(space.size(), 0);
  for (SeqId x : members) {
    if (x >= space.size()) throw InvalidArgument("questionnaire member outside X^n");
    member[x] = 1;
  }
  if (fallback >= space.size() || !member[fallback]) {
    throw InvalidArgument("fallback must be a questionnaire member");
  }
  std::vector<SeqId> map(space.size());
  for (SeqId y = 0; y < space.size(); ++y) map[y] = member[y] ? y : fallback;
  ReceiverStrategy g(space.horizon(), std::move(map));
  g.fallback_ = fallback;
  return g;
}

ReceiverStrategy canonical_strategy(const SequenceSpace& space, std::span<const SeqId> members) {
  if (members.empty()) throw InvalidArgument("questionnaire must be non-empty");
  return canonical_strategy(space, members, *std::min_element(members.begin(), members.end()));
}

ReceiverStrategy identity_strategy(const SequenceSpace& space) {
  std::vector<SeqId> map(space.size());
  for (SeqId y = 0; y < space.size(); ++y) map[y] = y;
  return ReceiverStrategy(space.horizon(), std::move(map));
}

// ---- partitions and objective --------------------------------------------

std::vector<SeqId> lambda_partition(const SequenceScorer& scorer, std::span<const SeqId> members,
                                    TypeId t) {
  if (members.empty()) throw InvalidArgument("questionnaire must be non-empty");
  std::vector<SeqId> set = normalized(members);
  for (SeqId x : set) {
    if (x >= scorer.space().size()) throw InvalidArgument("questionnaire member outside X^n");
  }
  if (classify_type(scorer.model(), t) == HonestyClass::kHonest) return set;
  std::vector<SeqId> out;
  for (SeqId x : set) {
    bool strict_best = std::none_of(set.begin(), set.end(), [&](SeqId y) { return scorer.tempts(t, y, x); });
    if (strict_best) out.push_back(x);
  }
  return out;
}

Rational receiver_objective(const SequenceScorer& scorer, std::span<const SeqId> members) {
  const auto& model = scorer.model();
  Rational total;
  for (TypeId t : model.type_ids()) {
    auto part = lambda_partition(scorer, members, t);
    total += model.prior(t) * Rational(static_cast<std::int64_t>(part.size()));
  }
  return total;
}

namespace {

struct SequenceIds {
  SequenceSpace space;
  std::vector<SeqId> ids;
};

SequenceIds to_ids(const Model& model, std::span<const Sequence> members) {
  if (members.empty()) throw InvalidArgument("questionnaire must be non-empty");
  const std::size_t n = members.front().length();
  for (const auto& s : members) {
    if (s.length() != n) throw InvalidArgument("questionnaire members differ in length");
  }
  SequenceIds out{SequenceSpace(model, n), {}};
  for (const auto& s : members) out.ids.push_back(out.space.encode(s));
  return out;
}

}  // namespace

std::vector<Sequence> lambda_partition(const Model& model, std::span<const Sequence> members, TypeId t) {
  auto ids = to_ids(model, members);
  SequenceScorer scorer(model, ids.space);
  std::vector<Sequence> out;
  for (SeqId x : lambda_partition(scorer, ids.ids, t)) out.push_back(ids.space.decode(x));
  return out;
}

Rational receiver_objective(const Model& model, std::span<const Sequence> members) {
  auto ids = to_ids(model, members);
  SequenceScorer scorer(model, ids.space);
  return receiver_objective(scorer, ids.ids);
}

Questionnaire make_questionnaire(const SequenceScorer& scorer, std::span<const SeqId> members) {
  Questionnaire q;
  q.n = scorer.space().horizon();
  q.members = normalized(members);
  const auto& model = scorer.model();
  for (TypeId t : model.type_ids()) {
    q.partitions.push_back(lambda_partition(scorer, q.members, t));
    q.objective += model.prior(t) * Rational(static_cast<std::int64_t>(q.partitions.back().size()));
  }
  return q;
}

std::vector<SeqId> reduce_closure(const SequenceScorer& scorer, std::span<const SeqId> members) {
  if (members.empty()) throw InvalidArgument("questionnaire must be non-empty");
  std::vector<SeqId> current = normalized(members);
  while (true) {
    std::vector<SeqId> next;
    for (TypeId t : scorer.model().type_ids()) {
      auto part = lambda_partition(scorer, current, t);
      next.insert(next.end(), part.begin(), part.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next.empty() || next == current) return current;
    current = std::move(next);
  }
}

bool lex_less(std::span<const SeqId> a, std::span<const SeqId> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---- exact search ---------------------------------------------------------

EquilibriumResult solve_exact(const Model& model, std::size_t n, const Budgets& budgets,
                              const ExactOptions& options) {
  SequenceSpace space(model, n, budgets);
  const std::uint64_t limit = std::min<std::uint64_t>(budgets.subset, 64);
  if (space.size() > limit) throw BudgetExceeded("subset", limit, space.size());
  SequenceScorer scorer(model, space);
  SubsetProblem problem = make_subset_problem(scorer);
  SubsetSearchResult found = search_subsets(problem, options.prune, std::max<std::size_t>(options.report_cap, 1));

  EquilibriumResult result;
  result.n = n;
  result.mode = SearchMode::kExact;
  result.certified = true;
  result.optimum = Rational(found.best, problem.scale);
  for (auto mask : found.maximizers) result.maximizers.push_back(mask_members(mask));
  result.representative = result.maximizers.front();
  result.stats.subsets_examined = found.examined;
  result.stats.subtrees_pruned = found.pruned;
  return result;
}

}  // namespace infoex
