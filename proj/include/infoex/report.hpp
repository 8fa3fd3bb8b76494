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
#include <vector>

namespace infoex {

enum class ReportFormat { kPlain, kMachine };

/// Ordered key/value tree rendered either as indented "key: value" text
/// (plain) or as one "dotted.path=value" line per leaf (machine). Field order
/// is insertion order, so identical inputs render to identical bytes.
class ReportNode {
 public:
  ReportNode() = default;
  explicit ReportNode(std::string key) : key_(std::move(key)) {}

  ReportNode& add(const std::string& key, std::string value);
  ReportNode& add(const std::string& key, const char* value) { return add(key, std::string(value)); }
  ReportNode& add(const std::string& key, std::int64_t value) { return add(key, std::to_string(value)); }
  ReportNode& add(const std::string& key, std::uint64_t value) { return add(key, std::to_string(value)); }
  ReportNode& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
  ReportNode& add(const std::string& key, bool value) { return add(key, std::string(value ? "true" : "false")); }
  ReportNode& add(const std::string& key, std::uint32_t value) { return add(key, std::to_string(value)); }

  /// Nested mapping; returns the child.
  ReportNode& section(const std::string& key);
  /// List of scalar items.
  ReportNode& list(const std::string& key, const std::vector<std::string>& items);
  /// List of mappings; append with item().
  ReportNode& list(const std::string& key);
  ReportNode& item();

  const std::string& key() const noexcept { return key_; }
  const std::optional<std::string>& value() const noexcept { return value_; }
  const std::vector<ReportNode>& children() const noexcept { return children_; }
  bool is_list() const noexcept { return list_; }
  const ReportNode* find(const std::string& key) const;

 private:
  friend class Report;
  void render_plain(std::string& out, int indent, bool list_item) const;
  void render_machine(std::string& out, const std::string& prefix) const;

  std::string key_;
  std::optional<std::string> value_;
  std::vector<ReportNode> children_;
  bool list_ = false;
};

class Report : public ReportNode {
 public:
  /// Wall time, rendered last and excluded from the determinism contract.
  void set_timing_ms(double ms) { timing_ms_ = ms; }
  std::string render(ReportFormat format) const;

 private:
  std::optional<double> timing_ms_;
};

/// Formats a double with 12 significant digits.
std::string format_real(double value);

/// 64-bit FNV-1a of bytes, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& bytes);

}  // namespace infoex
