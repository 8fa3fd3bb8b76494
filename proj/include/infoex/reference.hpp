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
#include "infoex/model.hpp"

// Serial, deliberately naive implementations. They share no code with the
// optimized kernels beyond the model itself and are kept as oracles for the
// test suite and as the baseline in the benchmark.
namespace infoex::reference {

/// Sender graph from exact rational averaged utilities, one pair at a time.
SenderGraph build_sender_graph(const Model& model, TypeId t, std::size_t n);

/// Independence number by enumerating every vertex subset (at most 24
/// vertices).
std::uint64_t brute_force_alpha(const SenderGraph& graph);

struct BruteForceOptimum {
  Rational optimum;
  std::vector<std::vector<SeqId>> maximizers;  // all of them, lexicographic
  std::uint64_t subsets = 0;
};

/// Maximum of the receiver objective over every non-empty subset of X^n,
/// evaluated straight from the strict-best definition with rational
/// utilities. No pruning, no bitmasks beyond subset enumeration.
BruteForceOptimum max_objective(const Model& model, std::size_t n);

/// Strict-best subset of members for type t from rational utilities.
std::vector<SeqId> lambda_partition(const Model& model, std::size_t n, const std::vector<SeqId>& members,
                                    TypeId t);

}  // namespace infoex::reference
