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

#include "infoex/reference.hpp"

#include <algorithm>

#include "infoex/errors.hpp"

namespace infoex::reference {

namespace {

std::vector<Sequence> all_sequences(const Model& model, std::size_t n) {
  return enumerate_sequences(model, n);
}

}  // namespace

SenderGraph build_sender_graph(const Model& model, TypeId t, std::size_t n) {
  auto seqs = all_sequences(model, n);
  SenderGraph graph(n, static_cast<std::uint32_t>(seqs.size()), model.type_label(t));
  for (SeqId x = 0; x < seqs.size(); ++x) {
    for (SeqId y = x + 1; y < seqs.size(); ++y) {
      const bool x_as_y = sequence_utility(model, t, seqs[x], seqs[x]) <= sequence_utility(model, t, seqs[y], seqs[x]);
      const bool y_as_x = sequence_utility(model, t, seqs[y], seqs[y]) <= sequence_utility(model, t, seqs[x], seqs[y]);
      if (x_as_y || y_as_x) graph.add_edge(x, y);
    }
  }
  return graph;
}

std::uint64_t brute_force_alpha(const SenderGraph& graph) {
  const std::uint32_t v = graph.vertex_count();
  if (v > 24) throw BudgetExceeded("brute-force-mis", 24, v);
  std::uint64_t best = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << v); ++mask) {
    const auto size = static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (size <= best) continue;
    bool independent = true;
    for (std::uint32_t a = 0; a < v && independent; ++a) {
      if (!((mask >> a) & 1u)) continue;
      for (std::uint32_t b = a + 1; b < v; ++b) {
        if (((mask >> b) & 1u) && graph.adjacent(a, b)) {
          independent = false;
          break;
        }
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<SeqId> lambda_partition(const Model& model, std::size_t n, const std::vector<SeqId>& members,
                                    TypeId t) {
  SequenceSpace space(model, n);
  std::vector<SeqId> out;
  for (SeqId x : members) {
    const Sequence sx = space.decode(x);
    const Rational truthful = sequence_utility(model, t, sx, sx);
    bool strict = true;
    for (SeqId y : members) {
      if (y != x && !(truthful > sequence_utility(model, t, space.decode(y), sx))) {
        strict = false;
        break;
      }
    }
    if (strict) out.push_back(x);
  }
  return out;
}

BruteForceOptimum max_objective(const Model& model, std::size_t n) {
  SequenceSpace space(model, n);
  if (space.size() > 24) throw BudgetExceeded("brute-force-subset", 24, space.size());
  BruteForceOptimum out;
  bool first = true;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << space.size()); ++mask) {
    std::vector<SeqId> members;
    for (SeqId x = 0; x < space.size(); ++x) {
      if ((mask >> x) & 1u) members.push_back(x);
    }
    Rational value;
    for (TypeId t : model.type_ids()) {
      value += model.prior(t) *
               Rational(static_cast<std::int64_t>(lambda_partition(model, n, members, t).size()));
    }
    ++out.subsets;
    if (first || value > out.optimum) {
      first = false;
      out.optimum = value;
      out.maximizers.clear();
    }
    if (value == out.optimum) out.maximizers.push_back(std::move(members));
  }
  std::sort(out.maximizers.begin(), out.maximizers.end());
  return out;
}

}  // namespace infoex::reference
