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

#include "infoex/model.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "infoex/errors.hpp"

namespace infoex {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw ModelError(ModelError::Kind::kInvalid, std::string("empty ") + what + " label");
    }
    if (!seen.insert(label).second) {
      throw ModelError(ModelError::Kind::kDuplicateLabel,
                       std::string("duplicate ") + what + " label '" + label + "'");
    }
  }
}

}  // namespace

Model::Model(std::vector<std::string> alphabet, std::vector<std::string> types,
             std::vector<Rational> prior, std::vector<Table> utility)
    : alphabet_(std::move(alphabet)),
      types_(std::move(types)),
      prior_(std::move(prior)),
      utility_(std::move(utility)) {
  if (alphabet_.size() < 2) {
    throw ModelError(ModelError::Kind::kInvalid, "alphabet needs at least two symbols");
  }
  if (alphabet_.size() > 255) {
    throw ModelError(ModelError::Kind::kInvalid, "alphabet larger than 255 symbols");
  }
  if (types_.empty()) throw ModelError(ModelError::Kind::kInvalid, "type set is empty");
  require_unique(alphabet_, "symbol");
  for (const auto& label : alphabet_) {
    if (label.find_first_of(".,[] \t\n") != std::string::npos) {
      throw ModelError(ModelError::Kind::kInvalid,
                       "symbol label '" + label + "' contains a reserved character");
    }
  }
  require_unique(types_, "type");

  if (prior_.size() != types_.size()) {
    throw ModelError(ModelError::Kind::kInvalid, "prior must have one entry per type");
  }
  Rational total;
  for (std::size_t t = 0; t < prior_.size(); ++t) {
    if (prior_[t] < Rational(0)) {
      throw ModelError(ModelError::Kind::kInvalid, "negative prior for type '" + types_[t] + "'");
    }
    total += prior_[t];
  }
  if (total != Rational(1)) {
    throw ModelError(ModelError::Kind::kPriorNotNormalized,
                     "prior sums to " + total.str() + ", expected 1");
  }

  const std::size_t k = alphabet_.size();
  if (utility_.size() != types_.size()) {
    throw ModelError(ModelError::Kind::kMissingUtility, "utility table missing for some type");
  }
  for (std::size_t t = 0; t < types_.size(); ++t) {
    const auto& table = utility_[t];
    bool complete = table.size() == k &&
                    std::all_of(table.begin(), table.end(), [&](const auto& row) { return row.size() == k; });
    if (!complete) {
      throw ModelError(ModelError::Kind::kMissingUtility,
                       "utility table of type '" + types_[t] + "' must be " + std::to_string(k) +
                           "x" + std::to_string(k));
    }
  }

  single_char_labels_ = std::all_of(alphabet_.begin(), alphabet_.end(),
                                    [](const std::string& s) { return s.size() == 1; });

  for (std::size_t t = 0; t < types_.size(); ++t) {
    std::int64_t scale = 1;
    for (const auto& row : utility_[t]) {
      for (const auto& u : row) scale = checked_lcm(scale, u.den());
    }
    std::vector<std::int64_t> scaled(k * k);
    std::int64_t magnitude = 0;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        Rational v = utility_[t][r][c] * Rational(scale);
        scaled[r * k + c] = v.num();
        magnitude = std::max(magnitude, v.num() < 0 ? -v.num() : v.num());
      }
    }
    scaled_.push_back(std::move(scaled));
    utility_scale_.push_back(scale);
    magnitude_.push_back(magnitude);
  }

  prior_scale_ = 1;
  for (const auto& p : prior_) prior_scale_ = checked_lcm(prior_scale_, p.den());
  for (const auto& p : prior_) prior_weight_.push_back((p * Rational(prior_scale_)).num());
}

std::vector<TypeId> Model::type_ids() const {
  std::vector<TypeId> ids;
  ids.reserve(types_.size());
  for (std::uint32_t i = 0; i < types_.size(); ++i) ids.push_back(type_id(i));
  return ids;
}

std::optional<TypeId> Model::find_type(std::string_view label) const {
  for (std::uint32_t i = 0; i < types_.size(); ++i) {
    if (types_[i] == label) return type_id(i);
  }
  return std::nullopt;
}

std::optional<SymbolId> Model::find_symbol(std::string_view label) const {
  for (std::uint32_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == label) return i;
  }
  return std::nullopt;
}

SequenceSpace::SequenceSpace(std::size_t alphabet_size, std::size_t n,
                             std::uint64_t enumeration_budget)
    : k_(alphabet_size), n_(n) {
  if (n == 0) throw InvalidArgument("horizon n must be positive");
  if (k_ < 2) throw InvalidArgument("alphabet needs at least two symbols");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= k_;
    if (count > enumeration_budget || count > std::numeric_limits<std::uint32_t>::max()) {
      // Report the true size when it is representable, else saturate.
      std::uint64_t requested = count;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (requested > std::numeric_limits<std::uint64_t>::max() / k_) {
          requested = std::numeric_limits<std::uint64_t>::max();
          break;
        }
        requested *= k_;
      }
      throw BudgetExceeded("enumeration", enumeration_budget, requested);
    }
  }
  size_ = static_cast<std::uint32_t>(count);
  place_.resize(n);
  std::uint32_t p = 1;
  for (std::size_t i = n; i-- > 0;) {
    place_[i] = p;
    p *= static_cast<std::uint32_t>(k_);
  }
}

Sequence SequenceSpace::decode(SeqId id) const {
  if (id >= size_) throw InvalidArgument("sequence id out of range");
  Sequence seq;
  seq.letters.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) seq.letters[i] = (id / place_[i]) % k_;
  return seq;
}

SeqId SequenceSpace::encode(const Sequence& seq) const {
  if (seq.length() != n_) throw InvalidArgument("sequence length does not match horizon");
  SeqId id = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (seq.letters[i] >= k_) throw InvalidArgument("letter outside the alphabet");
    id += seq.letters[i] * place_[i];
  }
  return id;
}

SymbolId SequenceSpace::letter(SeqId id, std::size_t position) const {
  return (id / place_[position]) % k_;
}

SequenceScorer::SequenceScorer(const Model& model, const SequenceSpace& space)
    : model_(&model), space_(&space) {
  if (space.alphabet_size() != model.alphabet_size()) {
    throw InvalidArgument("sequence space does not match the model alphabet");
  }
  const std::size_t n = space.horizon();
  for (TypeId t : model.type_ids()) {
    if (model.scaled_magnitude(t) > std::numeric_limits<std::int64_t>::max() /
                                        static_cast<std::int64_t>(n + 1)) {
      throw Overflow("summed utilities of type '" + model.type_label(t) + "' overflow at n=" +
                     std::to_string(n));
    }
  }
  const std::uint32_t size = space.size();
  digits_.resize(static_cast<std::size_t>(size) * n);
  for (SeqId id = 0; id < size; ++id) {
    for (std::size_t i = 0; i < n; ++i) {
      digits_[static_cast<std::size_t>(id) * n + i] = static_cast<std::uint8_t>(space.letter(id, i));
    }
  }
  diagonal_.resize(model.type_count());
  for (TypeId t : model.type_ids()) {
    auto& diag = diagonal_[index_of(t)];
    diag.resize(size);
    for (SeqId id = 0; id < size; ++id) diag[id] = score(t, id, id);
  }
}

std::int64_t SequenceScorer::score(TypeId t, SeqId reported, SeqId truth) const {
  const std::size_t n = space_->horizon();
  const std::uint8_t* y = &digits_[static_cast<std::size_t>(reported) * n];
  const std::uint8_t* x = &digits_[static_cast<std::size_t>(truth) * n];
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += model_->scaled_utility(t, y[i], x[i]);
  return sum;
}

Rational sequence_utility(const Model& model, TypeId t, const Sequence& reported,
                          const Sequence& truth) {
  if (reported.length() != truth.length()) {
    throw InvalidArgument("reported and true sequences differ in length");
  }
  if (truth.length() == 0) throw InvalidArgument("sequences must be non-empty");
  if (index_of(t) >= model.type_count()) throw InvalidArgument("type id out of range");
  Rational sum;
  for (std::size_t i = 0; i < truth.length(); ++i) {
    if (reported.letters[i] >= model.alphabet_size() || truth.letters[i] >= model.alphabet_size()) {
      throw InvalidArgument("letter outside the alphabet");
    }
    sum += model.utility(t, reported.letters[i], truth.letters[i]);
  }
  return sum / Rational(static_cast<std::int64_t>(truth.length()));
}

HonestyClass classify_type(const Model& model, TypeId t) {
  const std::size_t k = model.alphabet_size();
  for (SymbolId truth = 0; truth < k; ++truth) {
    for (SymbolId report = 0; report < k; ++report) {
      if (report != truth && !(model.utility(t, truth, truth) > model.utility(t, report, truth))) {
        return HonestyClass::kOther;
      }
    }
  }
  return HonestyClass::kHonest;
}

std::vector<Sequence> enumerate_sequences(const Model& model, std::size_t n,
                                          const Budgets& budgets) {
  SequenceSpace space(model, n, budgets);
  std::vector<Sequence> out;
  out.reserve(space.size());
  for (SeqId id = 0; id < space.size(); ++id) out.push_back(space.decode(id));
  return out;
}

std::string sequence_label(const Model& model, const Sequence& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.length(); ++i) {
    if (i > 0 && !model.labels_are_single_chars()) out += '.';
    out += model.symbol_label(seq.letters[i]);
  }
  return out;
}

std::string sequence_label(const Model& model, const SequenceSpace& space, SeqId id) {
  return sequence_label(model, space.decode(id));
}

Sequence parse_sequence(const Model& model, std::size_t n, std::string_view text) {
  std::vector<std::string_view> parts;
  if (text.find('.') != std::string_view::npos || !model.labels_are_single_chars()) {
    std::size_t start = 0;
    while (true) {
      auto dot = text.find('.', start);
      parts.push_back(text.substr(start, dot == std::string_view::npos ? dot : dot - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) parts.push_back(text.substr(i, 1));
  }
  if (parts.size() != n) {
    throw InvalidArgument("sequence '" + std::string(text) + "' does not have length " +
                          std::to_string(n));
  }
  Sequence seq;
  for (auto part : parts) {
    auto symbol = model.find_symbol(part);
    if (!symbol) throw InvalidArgument("unknown symbol '" + std::string(part) + "'");
    seq.letters.push_back(*symbol);
  }
  return seq;
}

}  // namespace infoex
