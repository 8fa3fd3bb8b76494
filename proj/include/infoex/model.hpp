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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "infoex/rational.hpp"

namespace infoex {

using SymbolId = std::uint32_t;

/// Dense index of a sequence in the lexicographic enumeration of X^n. This is
/// the vertex id of every sender graph and the element id of questionnaires.
using SeqId = std::uint32_t;

/// Index into the model's type set.
enum class TypeId : std::uint32_t {};

constexpr std::uint32_t index_of(TypeId t) noexcept { return static_cast<std::uint32_t>(t); }
constexpr TypeId type_id(std::uint32_t i) noexcept { return static_cast<TypeId>(i); }

struct Sequence {
  std::vector<SymbolId> letters;

  std::size_t length() const noexcept { return letters.size(); }
  friend auto operator<=>(const Sequence&, const Sequence&) = default;
};

/// Computation limits. Defaults are the documented desk-scale limits.
struct Budgets {
  /// Max |X|^n materialized as sequences.
  std::uint64_t enumeration = 1'000'000;
  /// Max vertex count for certified (exact) maximum independent set.
  std::uint64_t mis = 512;
  /// Max |X|^n for exhaustive questionnaire search (2^subset subsets).
  std::uint64_t subset = 20;
  /// Max vertex count for a dense adjacency matrix.
  std::uint64_t dense_graph = 1u << 15;
};

enum class HonestyClass { kHonest, kOther };

/// The screening game: alphabet, sender types, prior over types and
/// per-type single-letter utility U(report, truth, type). Immutable once
/// constructed; the constructor validates every invariant and throws
/// ModelError on violation.
class Model {
 public:
  using Table = std::vector<std::vector<Rational>>;  // [report][truth]

  Model(std::vector<std::string> alphabet, std::vector<std::string> types,
        std::vector<Rational> prior, std::vector<Table> utility);

  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::size_t type_count() const noexcept { return types_.size(); }
  std::vector<TypeId> type_ids() const;

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string>& type_labels() const noexcept { return types_; }
  const std::string& symbol_label(SymbolId s) const { return alphabet_.at(s); }
  const std::string& type_label(TypeId t) const { return types_.at(index_of(t)); }

  std::optional<TypeId> find_type(std::string_view label) const;
  std::optional<SymbolId> find_symbol(std::string_view label) const;

  const Rational& prior(TypeId t) const { return prior_.at(index_of(t)); }
  const Table& table(TypeId t) const { return utility_.at(index_of(t)); }
  const Rational& utility(TypeId t, SymbolId report, SymbolId truth) const {
    return utility_.at(index_of(t)).at(report).at(truth);
  }

  /// U(report, truth, t) multiplied by the per-type common denominator.
  /// Ordering between utilities of the same type is preserved exactly.
  std::int64_t scaled_utility(TypeId t, SymbolId report, SymbolId truth) const {
    return scaled_[index_of(t)][report * alphabet_.size() + truth];
  }
  std::int64_t utility_scale(TypeId t) const { return utility_scale_[index_of(t)]; }
  /// Largest |scaled_utility| over the table of t.
  std::int64_t scaled_magnitude(TypeId t) const { return magnitude_[index_of(t)]; }

  /// P(t) * prior_scale(), an exact non-negative integer.
  std::int64_t prior_weight(TypeId t) const { return prior_weight_[index_of(t)]; }
  std::int64_t prior_scale() const noexcept { return prior_scale_; }

  bool labels_are_single_chars() const noexcept { return single_char_labels_; }

  friend bool operator==(const Model& a, const Model& b) {
    return a.alphabet_ == b.alphabet_ && a.types_ == b.types_ && a.prior_ == b.prior_ &&
           a.utility_ == b.utility_;
  }

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> types_;
  std::vector<Rational> prior_;
  std::vector<Table> utility_;

  std::vector<std::vector<std::int64_t>> scaled_;
  std::vector<std::int64_t> utility_scale_;
  std::vector<std::int64_t> magnitude_;
  std::vector<std::int64_t> prior_weight_;
  std::int64_t prior_scale_ = 1;
  bool single_char_labels_ = true;
};

/// Lexicographic indexing of X^n. Sequence id = sum letters[i] * k^(n-1-i).
class SequenceSpace {
 public:
  /// Throws BudgetExceeded("enumeration") when k^n exceeds the budget.
  SequenceSpace(std::size_t alphabet_size, std::size_t n,
                std::uint64_t enumeration_budget = Budgets{}.enumeration);
  SequenceSpace(const Model& model, std::size_t n, const Budgets& budgets = {})
      : SequenceSpace(model.alphabet_size(), n, budgets.enumeration) {}

  std::size_t horizon() const noexcept { return n_; }
  std::size_t alphabet_size() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return size_; }

  Sequence decode(SeqId id) const;
  SeqId encode(const Sequence& seq) const;
  SymbolId letter(SeqId id, std::size_t position) const;

 private:
  std::size_t k_;
  std::size_t n_;
  std::uint32_t size_;
  std::vector<std::uint32_t> place_;  // k^(n-1-i)
};

/// Exact summed-utility comparisons on X^n for every type. Scores are
/// n * U_n scaled by the type's common denominator, so comparing scores of
/// one type is comparing averaged utilities.
class SequenceScorer {
 public:
  SequenceScorer(const Model& model, const SequenceSpace& space);

  const Model& model() const noexcept { return *model_; }
  const SequenceSpace& space() const noexcept { return *space_; }

  std::int64_t score(TypeId t, SeqId reported, SeqId truth) const;
  std::int64_t truthful_score(TypeId t, SeqId truth) const {
    return diagonal_[index_of(t)][truth];
  }
  /// y != x and U_n(x,x,t) <= U_n(y,x,t): type t weakly prefers reporting
  /// truth x as y.
  bool tempts(TypeId t, SeqId y, SeqId x) const {
    return y != x && truthful_score(t, x) <= score(t, y, x);
  }

 private:
  const Model* model_;
  const SequenceSpace* space_;
  std::vector<std::uint8_t> digits_;  // size() * n, row-major
  std::vector<std::vector<std::int64_t>> diagonal_;
};

/// (1/n) * sum_i U(reported_i, truth_i, t), exact. Throws InvalidArgument on
/// length mismatch, empty sequences or out-of-range letters.
Rational sequence_utility(const Model& model, TypeId t, const Sequence& reported,
                          const Sequence& truth);

/// Honest iff U(x,x,t) > U(x',x,t) for every column x and every x' != x.
HonestyClass classify_type(const Model& model, TypeId t);

/// All |X|^n sequences in lexicographic order.
std::vector<Sequence> enumerate_sequences(const Model& model, std::size_t n,
                                          const Budgets& budgets = {});

/// Display label of a sequence: symbol labels concatenated when all are one
/// character, dot-joined otherwise.
std::string sequence_label(const Model& model, const Sequence& seq);
std::string sequence_label(const Model& model, const SequenceSpace& space, SeqId id);

/// Inverse of sequence_label for a given horizon. Throws InvalidArgument.
Sequence parse_sequence(const Model& model, std::size_t n, std::string_view text);

// Model file (JSON) support.

/// Parses a model document. Throws ModelError.
Model parse_model(std::string_view text);

/// Canonical text of a model: stable field order, two-space indentation,
/// every rational as a string. parse_model(serialize_model(m)) == m.
std::string serialize_model(const Model& model);

/// Canonical text of the built-in two-type fixture ("example1").
std::string example1_text();
Model example1_model();

/// Loads "example1" or a model file path. Throws ModelError / Error.
Model load_model(const std::string& source);

}  // namespace infoex
