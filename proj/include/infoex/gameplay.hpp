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
#include "infoex/strategy.hpp"

namespace infoex {

// Brute-force sender behaviour against a committed receiver strategy. The
// best-response set is a product of per-truth argmax sets, so it is never
// materialized; every quantity below is computed truth by truth.

struct BestReportOutcome {
  SeqId truth = 0;
  /// {g(y) : y is a best report for truth}, ascending. Never empty.
  std::vector<SeqId> outcomes;
  /// max over z in image(g) of U_n(z, truth, t).
  Rational utility;
};

/// Exhaustive argmax of U_n(z, truth, t) over z in image(g).
BestReportOutcome best_reports(const SequenceScorer& scorer, const ReceiverStrategy& g, TypeId t,
                               SeqId truth);

/// Truths recovered under every best response of type t: those whose argmax
/// set is exactly {truth}. Equals the minimum of |D(g, s)| over best
/// responses s.
std::vector<SeqId> robust_recovery_set(const SequenceScorer& scorer, const ReceiverStrategy& g,
                                       TypeId t);

/// Diagnostic only: truths recovered by at least one best response (the
/// optimistic counterpart; it plays no role in the receiver's objective).
std::vector<SeqId> optimistic_recovery_set(const SequenceScorer& scorer, const ReceiverStrategy& g,
                                           TypeId t);

/// sum_t P(t) * |robust_recovery_set(g, t)|.
Rational dstar(const SequenceScorer& scorer, const ReceiverStrategy& g);

struct RecoveryReport {
  std::vector<std::vector<SeqId>> robust;  // [type]
  /// Number of best responses per type, saturated at UINT64_MAX.
  std::vector<std::uint64_t> best_response_count;
  Rational dstar;
};

RecoveryReport recovery_report(const SequenceScorer& scorer, const ReceiverStrategy& g);

enum class TiePolicy { kAdversarial, kLexicographic, kRandom };

struct TieRule {
  TiePolicy policy = TiePolicy::kAdversarial;
  std::uint64_t seed = 0;  // kRandom only
};

struct SessionOutcome {
  SeqId reported = 0;  // least preimage of decoded under g
  SeqId decoded = 0;
  bool recovered = false;
};

/// One session: the sender picks a best report according to the tie rule.
/// Adversarial picks the least outcome different from the truth when one
/// exists. Random draws from a stream derived from (seed, truth) only.
SessionOutcome simulate(const SequenceScorer& scorer, const ReceiverStrategy& g, TypeId t,
                        SeqId truth, const TieRule& rule);

}  // namespace infoex
