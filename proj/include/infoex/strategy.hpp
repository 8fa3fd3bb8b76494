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

#include <optional>
#include <span>
#include <vector>

#include "infoex/model.hpp"

namespace infoex {

/// A receiver decoding map g_n : X^n -> X^n stored as a table over
/// sequence ids.
class ReceiverStrategy {
 public:
  /// Arbitrary total map; map[y] = g(y). Throws InvalidArgument when an entry
  /// is out of range or the map is empty.
  ReceiverStrategy(std::size_t horizon, std::vector<SeqId> map);

  std::size_t horizon() const noexcept { return horizon_; }
  std::uint32_t domain_size() const noexcept { return static_cast<std::uint32_t>(map_.size()); }
  SeqId operator()(SeqId y) const { return map_.at(y); }
  const std::vector<SeqId>& table() const noexcept { return map_; }

  /// Sorted image set.
  const std::vector<SeqId>& image() const noexcept { return image_; }
  bool in_image(SeqId x) const { return in_image_.at(x) != 0; }

  /// Fallback of a canonical strategy; empty for arbitrary maps.
  std::optional<SeqId> fallback() const noexcept { return fallback_; }

  /// Lexicographically least y with g(y) == z. Throws if z is not in the
  /// image.
  SeqId least_preimage(SeqId z) const;

 private:
  friend ReceiverStrategy canonical_strategy(const SequenceSpace&, std::span<const SeqId>, SeqId);

  std::size_t horizon_;
  std::vector<SeqId> map_;
  std::vector<SeqId> image_;
  std::vector<char> in_image_;
  std::optional<SeqId> fallback_;
};

/// g(x) = x on members, g(x) = fallback elsewhere. Members need not be
/// sorted; duplicates are ignored. Throws InvalidArgument when members is
/// empty or fallback is not a member.
ReceiverStrategy canonical_strategy(const SequenceSpace& space, std::span<const SeqId> members,
                                    SeqId fallback);

/// Canonical strategy with the lexicographically smallest member as fallback.
ReceiverStrategy canonical_strategy(const SequenceSpace& space, std::span<const SeqId> members);

/// Identity map on X^n.
ReceiverStrategy identity_strategy(const SequenceSpace& space);

}  // namespace infoex
