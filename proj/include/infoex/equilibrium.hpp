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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "infoex/model.hpp"
#include "infoex/strategy.hpp"

namespace infoex {

/// The questionnaire I^n with its per-type strict-best subsets and the
/// receiver objective sum_t P(t) |I_t|.
struct Questionnaire {
  std::size_t n = 0;
  std::vector<SeqId> members;                  // ascending
  std::vector<std::vector<SeqId>> partitions;  // [type], ascending
  Rational objective;
};

/// {x in I : U_n(x,x,t) > U_n(y,x,t) for all y in I, y != x}. A singleton is
/// always its own partition. Honest types return I unchanged. Throws
/// InvalidArgument on an empty I.
std::vector<SeqId> lambda_partition(const SequenceScorer& scorer, std::span<const SeqId> members,
                                    TypeId t);
std::vector<Sequence> lambda_partition(const Model& model, std::span<const Sequence> members,
                                       TypeId t);

/// sum_t P(t) * |lambda_partition(I, t)|, exact.
Rational receiver_objective(const SequenceScorer& scorer, std::span<const SeqId> members);
Rational receiver_objective(const Model& model, std::span<const Sequence> members);

Questionnaire make_questionnaire(const SequenceScorer& scorer, std::span<const SeqId> members);

/// Repeatedly replaces I by the union of its partitions until a fixpoint,
/// stopping at the last non-empty iterate. Removing members that no type
/// recovers never lowers the objective.
std::vector<SeqId> reduce_closure(const SequenceScorer& scorer, std::span<const SeqId> members);

enum class SearchMode { kExact, kHeuristic };

struct SearchStats {
  std::uint64_t subsets_examined = 0;
  std::uint64_t subtrees_pruned = 0;
  std::uint64_t moves = 0;  // heuristic local-search moves applied
};

struct EquilibriumResult {
  std::size_t n = 0;
  Rational optimum;
  /// Maximizers found, lexicographically ascending, at most the report cap.
  std::vector<std::vector<SeqId>> maximizers;
  /// The designated equilibrium questionnaire (lexicographically least).
  std::vector<SeqId> representative;
  SearchMode mode = SearchMode::kExact;
  bool certified = false;
  SearchStats stats;
};

struct ExactOptions {
  /// Skip every subset containing a member no type recovers (and all its
  /// supersets). Such a subset is dominated by a strictly smaller one.
  bool prune = true;
  std::size_t report_cap = 16;
};

/// Maximizes the receiver objective over all non-empty I within X^n.
/// Throws BudgetExceeded("subset") when |X|^n > budgets.subset.
EquilibriumResult solve_exact(const Model& model, std::size_t n, const Budgets& budgets = {},
                              const ExactOptions& options = {});

struct HeuristicOptions {
  /// Zero-gain additions allowed in a row during greedy growth.
  std::size_t patience = 8;
  /// Independent greedy+local-search runs from seeded start points.
  std::size_t restarts = 8;
};

/// Greedy growth then 1-add/1-drop/1-swap local search to local optimality.
/// Deterministic for a given seed. Never certified.
EquilibriumResult solve_heuristic(const Model& model, std::size_t n, std::uint64_t seed,
                                  const Budgets& budgets = {}, const HeuristicOptions& options = {});

/// Lexicographic order on ascending id lists.
bool lex_less(std::span<const SeqId> a, std::span<const SeqId> b);

}  // namespace infoex
