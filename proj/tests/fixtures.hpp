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

#include <random>
#include <vector>

#include "infoex/model.hpp"

namespace infoex::testing {

/// Random model: |X| = k, |types| = types, integer utilities uniform in
/// [lo, hi], prior from integer weights 1..9 normalized exactly.
inline Model random_model(std::mt19937_64& rng, std::size_t k, std::size_t types, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> util(lo, hi);
  std::uniform_int_distribution<int> weight(1, 9);
  std::vector<std::string> alphabet, labels;
  for (std::size_t i = 0; i < k; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  for (std::size_t i = 0; i < types; ++i) labels.push_back("t" + std::to_string(i));
  std::vector<std::int64_t> w;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < types; ++i) {
    w.push_back(weight(rng));
    total += w.back();
  }
  std::vector<Rational> prior;
  for (auto x : w) prior.emplace_back(x, total);
  std::vector<Model::Table> tables;
  for (std::size_t t = 0; t < types; ++t) {
    Model::Table table(k, std::vector<Rational>(k));
    for (auto& row : table) {
      for (auto& v : row) v = Rational(util(rng));
    }
    tables.push_back(std::move(table));
  }
  return Model(alphabet, labels, prior, tables);
}

/// Single honest type with the identity table on k symbols.
inline Model honest_model(std::size_t k) {
  Model::Table table(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t i = 0; i < k; ++i) table[i][i] = Rational(1);
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < k; ++i) alphabet.push_back(std::to_string(i));
  return Model(alphabet, {"honest"}, {Rational(1)}, {table});
}

/// Built-in example model restricted to the dishonest type only.
inline Model dishonest_only_model() {
  Model::Table d = {{1, 2, 1}, {2, 1, 1}, {0, 0, 0}};
  return Model({"0", "1", "2"}, {"d"}, {Rational(1)}, {d});
}

inline Model constant_model(std::size_t k) {
  Model::Table table(k, std::vector<Rational>(k, Rational(0)));
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < k; ++i) alphabet.push_back(std::to_string(i));
  return Model(alphabet, {"c"}, {Rational(1)}, {table});
}

inline std::vector<SeqId> mask_to_ids(std::uint64_t mask, std::uint32_t size) {
  std::vector<SeqId> out;
  for (SeqId x = 0; x < size; ++x) {
    if ((mask >> x) & 1u) out.push_back(x);
  }
  return out;
}

}  // namespace infoex::testing
