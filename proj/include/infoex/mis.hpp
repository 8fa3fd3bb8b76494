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

#include "infoex/graph.hpp"

namespace infoex {

enum class MisMode { kExact, kGreedy };

struct IndependentSetResult {
  std::vector<SeqId> members;  // ascending
  std::size_t size = 0;
  /// True when size is the independence number of the graph.
  bool certified = false;
  /// Branch-and-bound nodes visited (0 for greedy).
  std::uint64_t nodes = 0;
};

/// Exact mode: branch and bound, branching on the highest-degree candidate
/// (lowest id on ties), bounded by a greedy clique cover of the candidates.
/// Deterministic. Throws BudgetExceeded("mis") above budgets.mis vertices.
///
/// Greedy mode: repeatedly takes the minimum-degree remaining vertex (lowest
/// id on ties). Returns a maximal independent set, never certified.
IndependentSetResult max_independent_set(const SenderGraph& graph, MisMode mode,
                                         const Budgets& budgets = {});

/// True iff no two members are adjacent.
bool is_independent(const SenderGraph& graph, const std::vector<SeqId>& members);

}  // namespace infoex
