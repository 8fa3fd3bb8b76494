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

#include "infoex/report.hpp"

#include <cstdio>

#include "infoex/errors.hpp"

namespace infoex {

ReportNode& ReportNode::add(const std::string& key, std::string value) {
  ReportNode child(key);
  child.value_ = std::move(value);
  children_.push_back(std::move(child));
  return *this;
}

ReportNode& ReportNode::section(const std::string& key) {
  children_.emplace_back(key);
  return children_.back();
}

ReportNode& ReportNode::list(const std::string& key, const std::vector<std::string>& items) {
  ReportNode& node = list(key);
  for (const auto& item : items) {
    ReportNode leaf;
    leaf.value_ = item;
    node.children_.push_back(std::move(leaf));
  }
  return node;
}

ReportNode& ReportNode::list(const std::string& key) {
  ReportNode& node = section(key);
  node.list_ = true;
  return node;
}

ReportNode& ReportNode::item() {
  if (!list_) throw InvalidArgument("item() on a non-list report node");
  children_.emplace_back();
  return children_.back();
}

const ReportNode* ReportNode::find(const std::string& key) const {
  for (const auto& child : children_) {
    if (child.key_ == key) return &child;
  }
  return nullptr;
}

void ReportNode::render_plain(std::string& out, int indent, bool list_item) const {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (list_item) {
    if (value_) {
      out += pad + "- " + *value_ + "\n";
      return;
    }
    // Mapping inside a list: first field shares the dash line.
    bool first = true;
    for (const auto& child : children_) {
      std::string line;
      child.render_plain(line, indent + 2, false);
      if (first) line.replace(0, static_cast<std::size_t>(indent + 2), pad + "- ");
      out += line;
      first = false;
    }
    if (first) out += pad + "- {}\n";
    return;
  }
  if (value_) {
    out += pad + key_ + ": " + *value_ + "\n";
    return;
  }
  if (children_.empty()) {
    out += pad + key_ + ": " + (list_ ? "[]" : "{}") + "\n";
    return;
  }
  out += pad + key_ + ":\n";
  for (const auto& child : children_) child.render_plain(out, indent + 2, list_);
}

void ReportNode::render_machine(std::string& out, const std::string& prefix) const {
  if (value_) {
    out += prefix + "=" + *value_ + "\n";
    return;
  }
  if (children_.empty()) {
    out += prefix + "=" + (list_ ? "[]" : "{}") + "\n";
    return;
  }
  for (std::size_t i = 0; i < children_.size(); ++i) {
    const auto& child = children_[i];
    const std::string name = list_ ? std::to_string(i) : child.key_;
    child.render_machine(out, prefix.empty() ? name : prefix + "." + name);
  }
}

std::string Report::render(ReportFormat format) const {
  std::string out;
  for (const auto& child : children()) {
    if (format == ReportFormat::kPlain) {
      child.render_plain(out, 0, false);
    } else {
      child.render_machine(out, child.key());
    }
  }
  if (timing_ms_) {
    std::string ms = format_real(*timing_ms_);
    out += format == ReportFormat::kPlain ? "timing_ms: " + ms + "\n" : "timing_ms=" + ms + "\n";
  }
  return out;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace infoex
