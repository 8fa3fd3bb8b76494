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

#include "infoex/gameplay.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "infoex/errors.hpp"

namespace infoex {

namespace {

void check_compatible(const SequenceScorer& scorer, const ReceiverStrategy& g) {
  if (g.horizon() != scorer.space().horizon() || g.domain_size() != scorer.space().size()) {
    throw InvalidArgument("strategy horizon does not match the sequence space");
  }
}

// Ascending argmax set of U_n(z, truth, t) over the image.
std::vector<SeqId> argmax_outcomes(const SequenceScorer& scorer, const ReceiverStrategy& g, TypeId t,
                                   SeqId truth, std::int64_t* best_score) {
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
  std::vector<SeqId> out;
  for (SeqId z : g.image()) {
    const std::int64_t s = scorer.score(t, z, truth);
    if (s > best) {
      best = s;
      out.assign(1, z);
    } else if (s == best) {
      out.push_back(z);
    }
  }
  if (best_score) *best_score = best;
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

BestReportOutcome best_reports(const SequenceScorer& scorer, const ReceiverStrategy& g, TypeId t,
                               SeqId truth) {
  check_compatible(scorer, g);
  if (truth >= scorer.space().size()) throw InvalidArgument("truth outside X^n");
  BestReportOutcome out;
  out.truth = truth;
  std::int64_t best = 0;
  out.outcomes = argmax_outcomes(scorer, g, t, truth, &best);
  const auto& model = scorer.model();
  out.utility = Rational(best, model.utility_scale(t)) /
                Rational(static_cast<std::int64_t>(scorer.space().horizon()));
  return out;
}

std::vector<SeqId> robust_recovery_set(const SequenceScorer& scorer, const ReceiverStrategy& g, TypeId t) {
  check_compatible(scorer, g);
  const std::uint32_t size = scorer.space().size();
  std::vector<char> robust(size, 0);
  const auto count = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto x = static_cast<SeqId>(i);
    if (!g.in_image(x)) continue;
    auto outcomes = argmax_outcomes(scorer, g, t, x, nullptr);
    robust[x] = outcomes.size() == 1 && outcomes.front() == x;
  }
  std::vector<SeqId> out;
  for (SeqId x = 0; x < size; ++x) {
    if (robust[x]) out.push_back(x);
  }
  return out;
}

std::vector<SeqId> optimistic_recovery_set(const SequenceScorer& scorer, const ReceiverStrategy& g,
                                           TypeId t) {
  check_compatible(scorer, g);
  std::vector<SeqId> out;
  for (SeqId x : g.image()) {
    auto outcomes = argmax_outcomes(scorer, g, t, x, nullptr);
    if (std::find(outcomes.begin(), outcomes.end(), x) != outcomes.end()) out.push_back(x);
  }
  return out;
}

Rational dstar(const SequenceScorer& scorer, const ReceiverStrategy& g) {
  const auto& model = scorer.model();
  Rational total;
  for (TypeId t : model.type_ids()) {
    total += model.prior(t) *
             Rational(static_cast<std::int64_t>(robust_recovery_set(scorer, g, t).size()));
  }
  return total;
}

RecoveryReport recovery_report(const SequenceScorer& scorer, const ReceiverStrategy& g) {
  check_compatible(scorer, g);
  const auto& model = scorer.model();
  // Preimage counts: a best response picks, per truth, any y whose g(y) is
  // an argmax outcome.
  std::vector<std::uint64_t> preimages(scorer.space().size(), 0);
  for (SeqId y = 0; y < g.domain_size(); ++y) ++preimages[g(y)];

  RecoveryReport report;
  for (TypeId t : model.type_ids()) {
    report.robust.push_back(robust_recovery_set(scorer, g, t));
    report.dstar += model.prior(t) * Rational(static_cast<std::int64_t>(report.robust.back().size()));
    std::uint64_t total = 1;
    bool saturated = false;
    for (SeqId x = 0; x < scorer.space().size() && !saturated; ++x) {
      std::uint64_t choices = 0;
      for (SeqId z : argmax_outcomes(scorer, g, t, x, nullptr)) choices += preimages[z];
      if (total > std::numeric_limits<std::uint64_t>::max() / choices) {
        saturated = true;
      } else {
        total *= choices;
      }
    }
    report.best_response_count.push_back(saturated ? std::numeric_limits<std::uint64_t>::max() : total);
  }
  return report;
}

SessionOutcome simulate(const SequenceScorer& scorer, const ReceiverStrategy& g, TypeId t, SeqId truth,
                        const TieRule& rule) {
  auto best = best_reports(scorer, g, t, truth);
  const auto& outcomes = best.outcomes;
  SeqId decoded = outcomes.front();
  switch (rule.policy) {
    case TiePolicy::kAdversarial:
      for (SeqId z : outcomes) {
        if (z != truth) {
          decoded = z;
          break;
        }
      }
      break;
    case TiePolicy::kLexicographic:
      break;
    case TiePolicy::kRandom: {
      std::mt19937_64 rng(splitmix64(rule.seed ^ splitmix64(truth)));
      decoded = outcomes[std::uniform_int_distribution<std::size_t>(0, outcomes.size() - 1)(rng)];
      break;
    }
  }
  return {g.least_preimage(decoded), decoded, decoded == truth};
}

}  // namespace infoex
