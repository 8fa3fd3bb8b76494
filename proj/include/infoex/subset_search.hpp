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
#include <vector>

#include "infoex/model.hpp"

namespace infoex {

/// Bitmask form of the questionnaire objective on a small sequence space
/// (at most 64 sequences). blockers[t][x] holds every y != x that type t
/// weakly prefers over truthful x, so x is in the t-partition of I exactly
/// when (blockers[t][x] & I) == 0.
struct SubsetProblem {
  std::uint32_t size = 0;
  std::vector<std::vector<std::uint64_t>> blockers;  // [type][x]
  std::vector<std::int64_t> weights;                 // P(t) * scale
  std::int64_t scale = 1;
};

SubsetProblem make_subset_problem(const SequenceScorer& scorer);

/// Objective of mask times problem.scale.
std::int64_t scaled_objective(const SubsetProblem& problem, std::uint64_t mask);

struct SubsetSearchResult {
  std::int64_t best = -1;               // scaled objective
  std::vector<std::uint64_t> maximizers;  // lexicographically least first, capped
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
};

/// Depth-first enumeration of all non-empty subsets, split into prefix tasks
/// run with OpenMP. The result does not depend on scheduling.
SubsetSearchResult search_subsets(const SubsetProblem& problem, bool prune, std::size_t cap);

/// Serial reference: every mask from 1 to 2^size - 1 in turn, no pruning.
SubsetSearchResult search_subsets_serial(const SubsetProblem& problem, std::size_t cap);

/// Lexicographic order of masks read as ascending member lists.
bool mask_lex_less(std::uint64_t a, std::uint64_t b);

std::vector<SeqId> mask_members(std::uint64_t mask);

}  // namespace infoex
