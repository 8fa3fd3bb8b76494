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

#include "infoex/graph.hpp"

#include <bit>
#include <sstream>

#include "infoex/errors.hpp"

namespace infoex {

SenderGraph::SenderGraph(std::size_t horizon, std::uint32_t vertex_count, std::string provenance)
    : horizon_(horizon),
      vertex_count_(vertex_count),
      provenance_(std::move(provenance)),
      words_((vertex_count + 63) / 64),
      bits_(static_cast<std::size_t>(vertex_count) * words_, 0) {}

void SenderGraph::add_edge(SeqId u, SeqId v) {
  if (u == v) throw InvalidArgument("self-loops are not allowed");
  if (u >= vertex_count_ || v >= vertex_count_) throw InvalidArgument("vertex out of range");
  mutable_row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
  mutable_row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

std::uint32_t SenderGraph::degree(SeqId v) const noexcept {
  std::uint32_t d = 0;
  for (auto w : row(v)) d += static_cast<std::uint32_t>(std::popcount(w));
  return d;
}

std::uint64_t SenderGraph::edge_count() const noexcept {
  std::uint64_t total = 0;
  for (auto w : bits_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total / 2;
}

SenderGraph build_sender_graph(const Model& model, TypeId t, std::size_t n, const Budgets& budgets) {
  if (index_of(t) >= model.type_count()) throw InvalidArgument("type id out of range");
  SequenceSpace space(model, n, budgets);
  if (space.size() > budgets.dense_graph) {
    throw BudgetExceeded("dense-graph", budgets.dense_graph, space.size());
  }
  SequenceScorer scorer(model, space);
  SenderGraph graph(n, space.size(), model.type_label(t));
  const auto size = static_cast<std::int64_t>(space.size());

  // Each thread owns whole rows; the edge test is symmetric so row x alone
  // determines every bit it holds.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t xi = 0; xi < size; ++xi) {
    const auto x = static_cast<SeqId>(xi);
    std::uint64_t* row = graph.mutable_row(x);
    for (SeqId y = 0; y < space.size(); ++y) {
      if (y != x && (scorer.tempts(t, y, x) || scorer.tempts(t, x, y))) {
        row[y >> 6] |= std::uint64_t{1} << (y & 63);
      }
    }
  }
  return graph;
}

SenderGraph union_graph(std::span<const SenderGraph> graphs) {
  if (graphs.empty()) throw InvalidArgument("union of an empty graph list");
  const auto& first = graphs.front();
  for (const auto& g : graphs) {
    if (g.horizon() != first.horizon() || g.vertex_count() != first.vertex_count()) {
      throw InvalidArgument("union of graphs with mismatched horizons");
    }
  }
  SenderGraph out(first.horizon(), first.vertex_count(), "union");
  for (const auto& g : graphs) {
    for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] |= g.bits_[i];
  }
  return out;
}

SenderGraph build_union_graph(const Model& model, std::size_t n, const Budgets& budgets) {
  std::vector<SenderGraph> graphs;
  for (TypeId t : model.type_ids()) graphs.push_back(build_sender_graph(model, t, n, budgets));
  return union_graph(graphs);
}

std::string export_dot(const SenderGraph& graph, const Model& model) {
  SequenceSpace space(model.alphabet_size(), graph.horizon(), graph.vertex_count());
  if (space.size() != graph.vertex_count()) {
    throw InvalidArgument("graph does not belong to this model's sequence space");
  }
  std::ostringstream out;
  out << "graph \"" << graph.provenance() << "_n" << graph.horizon() << "\" {\n";
  for (SeqId v = 0; v < graph.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << sequence_label(model, space, v) << "\"];\n";
  }
  for (SeqId u = 0; u < graph.vertex_count(); ++u) {
    for (SeqId v = u + 1; v < graph.vertex_count(); ++v) {
      if (graph.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace infoex
