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

#include <algorithm>
#include <fstream>
#include <sstream>

#include "infoex/errors.hpp"
#include "infoex/model.hpp"
#include "json.hpp"

namespace infoex {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(ModelError::Kind kind, const std::string& what) { throw ModelError(kind, what); }

std::vector<std::string> read_labels(const Json& doc, const char* field) {
  if (!doc.contains(field)) fail(ModelError::Kind::kSyntax, std::string("missing field '") + field + "'");
  const Json& node = doc.at(field);
  if (!node.is_array()) fail(ModelError::Kind::kSyntax, std::string("'") + field + "' must be a list");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!item.is_string()) {
      fail(ModelError::Kind::kSyntax, std::string("'") + field + "' entries must be strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational read_rational(const Json& node, const std::string& where) {
  try {
    if (node.is_string()) return Rational::parse(node.get<std::string>());
    if (node.is_number_integer()) return Rational(node.get<std::int64_t>());
  } catch (const Error& e) {
    fail(ModelError::Kind::kSyntax, where + ": " + e.what());
  }
  fail(ModelError::Kind::kSyntax, where + ": expected a rational string \"p/q\" or an integer");
}

// Byte offset to "line L, column C" (1-based).
std::string position_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

Model parse_model(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string message = e.what();
    auto pos = message.find("] ");
    fail(ModelError::Kind::kSyntax, "syntax error at " + position_of(text, e.byte == 0 ? 0 : e.byte - 1) +
                                        ": " + (pos == std::string::npos ? message : message.substr(pos + 2)));
  }
  if (!doc.is_object()) fail(ModelError::Kind::kSyntax, "model document must be an object");

  auto alphabet = read_labels(doc, "alphabet");
  auto types = read_labels(doc, "types");

  if (!doc.contains("prior") || !doc.at("prior").is_object()) {
    fail(ModelError::Kind::kSyntax, "'prior' must be a map from type label to rational");
  }
  if (!doc.contains("utility") || !doc.at("utility").is_object()) {
    fail(ModelError::Kind::kSyntax, "'utility' must be a map from type label to matrix");
  }
  const Json& prior_node = doc.at("prior");
  const Json& utility_node = doc.at("utility");

  std::vector<Rational> prior;
  std::vector<Model::Table> utility;
  for (const auto& label : types) {
    if (!prior_node.contains(label)) {
      fail(ModelError::Kind::kInvalid, "prior has no entry for type '" + label + "'");
    }
    prior.push_back(read_rational(prior_node.at(label), "prior." + label));
  }
  for (const auto& [label, value] : prior_node.items()) {
    if (std::find(types.begin(), types.end(), label) == types.end()) {
      fail(ModelError::Kind::kInvalid, "prior names unknown type '" + label + "'");
    }
  }
  for (const auto& [label, value] : utility_node.items()) {
    if (std::find(types.begin(), types.end(), label) == types.end()) {
      fail(ModelError::Kind::kInvalid, "utility names unknown type '" + label + "'");
    }
  }

  const std::size_t k = alphabet.size();
  for (const auto& label : types) {
    if (!utility_node.contains(label)) {
      fail(ModelError::Kind::kMissingUtility, "no utility table for type '" + label + "'");
    }
    const Json& matrix = utility_node.at(label);
    if (!matrix.is_array() || matrix.size() != k) {
      fail(ModelError::Kind::kMissingUtility,
           "utility." + label + " must have " + std::to_string(k) + " rows");
    }
    Model::Table table;
    for (std::size_t r = 0; r < k; ++r) {
      const Json& row = matrix.at(r);
      if (!row.is_array() || row.size() != k) {
        fail(ModelError::Kind::kMissingUtility, "utility." + label + "[" + std::to_string(r) +
                                                    "] must have " + std::to_string(k) + " entries");
      }
      std::vector<Rational> values;
      for (std::size_t c = 0; c < k; ++c) {
        values.push_back(read_rational(row.at(c), "utility." + label + "[" + std::to_string(r) + "][" +
                                                      std::to_string(c) + "]"));
      }
      table.push_back(std::move(values));
    }
    utility.push_back(std::move(table));
  }

  return Model(std::move(alphabet), std::move(types), std::move(prior), std::move(utility));
}

std::string serialize_model(const Model& model) {
  // Hand-written so that each matrix row stays on one line.
  auto quote = [](const std::string& s) { return Json(s).dump(); };
  std::ostringstream out;
  out << "{\n  \"alphabet\": [";
  for (std::size_t i = 0; i < model.alphabet_size(); ++i) {
    out << (i ? ", " : "") << quote(model.alphabet()[i]);
  }
  out << "],\n  \"types\": [";
  for (std::size_t i = 0; i < model.type_count(); ++i) {
    out << (i ? ", " : "") << quote(model.type_labels()[i]);
  }
  out << "],\n  \"prior\": {";
  for (TypeId t : model.type_ids()) {
    out << (index_of(t) ? ", " : "") << quote(model.type_label(t)) << ": " << quote(model.prior(t).str());
  }
  out << "},\n  \"utility\": {\n";
  for (TypeId t : model.type_ids()) {
    out << "    " << quote(model.type_label(t)) << ": [\n";
    const auto& table = model.table(t);
    for (std::size_t r = 0; r < table.size(); ++r) {
      out << "      [";
      for (std::size_t c = 0; c < table[r].size(); ++c) out << (c ? ", " : "") << quote(table[r][c].str());
      out << "]" << (r + 1 < table.size() ? "," : "") << "\n";
    }
    out << "    ]" << (index_of(t) + 1 < model.type_count() ? "," : "") << "\n";
  }
  out << "  }\n}\n";
  return out.str();
}

Model example1_model() {
  // Type h only needs strict diagonal dominance; the identity table is used.
  Model::Table honest = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  // U(report, truth, d).
  Model::Table dishonest = {{1, 2, 1}, {2, 1, 1}, {0, 0, 0}};
  return Model({"0", "1", "2"}, {"h", "d"}, {Rational(1, 3), Rational(2, 3)},
               {std::move(honest), std::move(dishonest)});
}

std::string example1_text() { return serialize_model(example1_model()); }

Model load_model(const std::string& source) {
  if (source == "example1") return example1_model();
  std::ifstream in(source, std::ios::binary);
  if (!in) throw Error("cannot open model file '" + source + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

}  // namespace infoex
