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
#include <string>
#include <vector>

#include "infoex/model.hpp"

namespace infoex {

/// Undirected graph over the lexicographically indexed sequences of X^n,
/// stored as a dense symmetric bit matrix.
class SenderGraph {
 public:
  SenderGraph(std::size_t horizon, std::uint32_t vertex_count, std::string provenance);

  std::size_t horizon() const noexcept { return horizon_; }
  std::uint32_t vertex_count() const noexcept { return vertex_count_; }
  const std::string& provenance() const noexcept { return provenance_; }

  bool adjacent(SeqId u, SeqId v) const noexcept {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  /// Adds {u, v}; self-loops are rejected with InvalidArgument.
  void add_edge(SeqId u, SeqId v);

  std::size_t words_per_row() const noexcept { return words_; }
  std::span<const std::uint64_t> row(SeqId v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  std::uint32_t degree(SeqId v) const noexcept;
  std::uint64_t edge_count() const noexcept;

  friend bool operator==(const SenderGraph& a, const SenderGraph& b) {
    return a.horizon_ == b.horizon_ && a.vertex_count_ == b.vertex_count_ && a.bits_ == b.bits_;
  }

 private:
  friend SenderGraph build_sender_graph(const Model&, TypeId, std::size_t, const Budgets&);
  friend SenderGraph union_graph(std::span<const SenderGraph>);

  std::uint64_t* mutable_row(SeqId v) noexcept {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }

  std::size_t horizon_;
  std::uint32_t vertex_count_;
  std::string provenance_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// G_t^n: x ~ y iff U_n(x,x,t) <= U_n(y,x,t) or U_n(y,y,t) <= U_n(x,y,t),
/// evaluated on exact summed utilities (not as a product of G_t^1). Rows are
/// filled in parallel. Throws BudgetExceeded for "enumeration" or
/// "dense-graph".
SenderGraph build_sender_graph(const Model& model, TypeId t, std::size_t n,
                               const Budgets& budgets = {});

/// Edge-set union. Throws InvalidArgument on an empty list or mismatched
/// horizons / vertex counts.
SenderGraph union_graph(std::span<const SenderGraph> graphs);

/// Union of G_t^n over every type of the model.
SenderGraph build_union_graph(const Model& model, std::size_t n, const Budgets& budgets = {});

/// Deterministic DOT text; nodes and edges in lexicographic order, nodes
/// labeled by their sequence labels.
std::string export_dot(const SenderGraph& graph, const Model& model);

}  // namespace infoex
